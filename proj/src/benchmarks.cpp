// Copyright 2026 The qcbench authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcbench/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace qcbench {

namespace {

// Hermiticity / positivity slack for measured Choi matrices entering the
// spectral benchmarks (relative to the matrix scale).
constexpr double kRankHermTol = 1e-8;
constexpr double kPsdTol = 1e-8;

// Double stochasticity is a presumption of the rank test, not a hard
// precondition; beyond this defect the report flags the input.
constexpr double kDsPresumptionTol = 1e-6;

std::uint64_t scramble(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xFF51AFD7ED558CCDULL;
  x ^= x >> 33;
  x *= 0xC4CEB9FE1A85EC53ULL;
  return x ^ (x >> 33);
}

Index numerical_rank(const ComplexMatrix& stacked, double rel_tol) {
  if (stacked.rows() == 0 || stacked.cols() == 0) return 0;
  Eigen::BDCSVD<ComplexMatrix> svd(stacked);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv.size() == 0 || !(sv(0) > 0.0)) return 0;
  Index r = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++r;
  return r;
}

struct SpectralBasis {
  Index d = 0;
  std::vector<double> eigenvalues;       // descending, clamped at zero
  std::vector<ComplexMatrix> alpha;      // reshaped retained eigenvectors
  bool input_doubly_stochastic = true;
};

SpectralBasis spectral_basis(const ChoiMatrix& c, double rank_tol) {
  const Index d = c.d;
  if (c.mat.rows() != d * d || c.mat.cols() != d * d)
    throw ShapeError("rank_property: Choi matrix size differs from d^2");
  const double scale = std::max(1.0, c.mat.norm());
  if (hermiticity_defect(c.mat) > kRankHermTol * scale)
    throw ValidationError("rank_property: Choi matrix is not hermitian within tolerance");

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(c.mat);
  const Eigen::VectorXd& lam = es.eigenvalues();  // ascending
  const Index n = lam.size();
  const double lam_max = lam(n - 1);
  if (!(lam_max > 0.0))
    throw ValidationError("rank_property: vanishing Choi matrix");
  if (lam(0) < -kPsdTol * std::max(1.0, lam_max))
    throw ValidationError("rank_property: Choi matrix is not PSD within tolerance");

  SpectralBasis basis;
  basis.d = d;
  basis.eigenvalues.resize(n);
  for (Index i = 0; i < n; ++i)
    basis.eigenvalues[i] = std::max(0.0, lam(n - 1 - i));

  Index k = 0;
  for (double e : basis.eigenvalues)
    if (e > rank_tol * basis.eigenvalues[0]) ++k;
  basis.alpha.reserve(k);
  // Eigenvector reshape: alpha(j, i) = v(i*d + j), i.e. output index as the
  // row, input index as the column, so that
  // sum_i lambda_i alpha_i alpha_i^+ = trace_in and
  // sum_i lambda_i alpha_i^+ alpha_i = trace_out.
  for (Index i = 0; i < k; ++i)
    basis.alpha.push_back(unvec(es.eigenvectors().col(n - 1 - i), d));

  const ComplexMatrix eye = ComplexMatrix::Identity(d, d);
  const double ds_defect = std::max((trace_in(c) - eye).norm(),
                                    (trace_out(c) - eye).norm());
  basis.input_doubly_stochastic = ds_defect <= kDsPresumptionTol;
  return basis;
}

// dim span{alpha_i alpha_j^+ : i, j < k}.
Index pair_span(const std::vector<ComplexMatrix>& alpha, Index k, Index d,
                double span_tol) {
  if (k == 0) return 0;
  ComplexMatrix stacked(k * k, d * d);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j)
      stacked.row(i * k + j) = vec(alpha[i] * alpha[j].adjoint()).transpose();
  return numerical_rank(stacked, span_tol);
}

// dim span{alpha_i^+ alpha_j - delta_ij 1/d : i, j < k}, the traceless
// adjoint-ordered variant used by the bound's derivation. Reported as a
// diagnostic next to the primary reading.
Index centered_adjoint_span(const std::vector<ComplexMatrix>& alpha, Index k,
                            Index d, double span_tol) {
  if (k == 0) return 0;
  const ComplexMatrix eye = ComplexMatrix::Identity(d, d);
  ComplexMatrix stacked(k * k, d * d);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) {
      ComplexMatrix prod = alpha[i].adjoint() * alpha[j];
      if (i == j) prod -= eye / static_cast<double>(d);
      stacked.row(i * k + j) = vec(prod).transpose();
    }
  return numerical_rank(stacked, span_tol);
}

RankReport assemble_rank_report(const SpectralBasis& basis, Index k,
                                double span_tol) {
  RankReport rep;
  rep.d = basis.d;
  rep.eigenvalues = basis.eigenvalues;
  rep.k = k;
  rep.span_dim = pair_span(basis.alpha, k, basis.d, span_tol);
  rep.span_dim_centered_adjoint =
      centered_adjoint_span(basis.alpha, k, basis.d, span_tol);
  rep.bound_d = basis.d * basis.d - k + 1;
  rep.bound_k = k * k - k + 1;
  rep.satisfied = rep.span_dim <= std::min(rep.bound_d, rep.bound_k);
  rep.input_doubly_stochastic = basis.input_doubly_stochastic;
  return rep;
}

}  // namespace

// ---------------------------------------------------------------------------
// Double stochasticity
// ---------------------------------------------------------------------------

DsReport ds_violation(const ChoiMatrix& c) {
  const Index d = c.d;
  const ComplexMatrix eye = ComplexMatrix::Identity(d, d);
  DsReport rep;
  rep.d = d;
  rep.violation_identity = (eye - trace_in(c)).norm();
  rep.violation_trace = (eye - trace_out(c)).norm();
  rep.epsilon_upper = rep.violation_identity;
  rep.epsilon_lower = rep.violation_identity / std::sqrt(static_cast<double>(d));
  return rep;
}

FixedPointReport thermal_fixed_point_check(const SuperOperator& gen,
                                           double t_large, double tol) {
  const Index d = gen.d;
  const ComplexMatrix propagator = (t_large * gen.mat).exp();
  const ComplexMatrix mixed =
      ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  const ComplexMatrix evolved = unvec(propagator * vec(mixed), d);
  const double violation = (evolved - mixed).norm();
  return {violation > tol, violation};
}

// ---------------------------------------------------------------------------
// Error metrics
// ---------------------------------------------------------------------------

double sigma_max_diff(const ChoiMatrix& a, const ChoiMatrix& b) {
  if (a.d != b.d) throw ShapeError("sigma_max_diff: channel dimensions differ");
  return sigma_max(choi_to_superop(a).mat - choi_to_superop(b).mat);
}

double schatten2_diff(const ChoiMatrix& a, const ChoiMatrix& b) {
  if (a.d != b.d) throw ShapeError("schatten2_diff: channel dimensions differ");
  return (a.mat - b.mat).norm();
}

MetricReport compare_channels(const ChoiMatrix& a, const ChoiMatrix& b,
                              double slack) {
  MetricReport rep;
  rep.sigma_max = sigma_max_diff(a, b);
  rep.schatten2 = schatten2_diff(a, b);
  rep.lower_ok = rep.sigma_max <= rep.schatten2 + slack;
  rep.upper_ok = rep.schatten2 <= static_cast<double>(a.d) * rep.sigma_max + slack;
  return rep;
}

PureStateSearchResult max_pure_state_discrepancy(const ChoiMatrix& a,
                                                 const ChoiMatrix& b,
                                                 int restarts,
                                                 std::uint64_t seed) {
  if (a.d != b.d)
    throw ShapeError("max_pure_state_discrepancy: channel dimensions differ");
  const Index d = a.d;
  const ComplexMatrix diff = choi_to_superop(a).mat - choi_to_superop(b).mat;
  const ComplexMatrix diff_adj = diff.adjoint();

  auto value = [&](const ComplexVector& psi) {
    return unvec(diff * vec((psi * psi.adjoint()).eval()), d).norm();
  };
  // Ascent direction for f^2: Delta^dual(Delta(|psi><psi|)) psi.
  auto gradient = [&](const ComplexVector& psi) {
    const ComplexMatrix drho = unvec(diff * vec((psi * psi.adjoint()).eval()), d);
    return (unvec(diff_adj * vec(drho), d) * psi).eval();
  };

  restarts = std::max(restarts, 1);
  std::mt19937_64 rng(scramble(seed ^ 0x51A7ED5ULL));
  std::normal_distribution<double> gauss(0.0, 1.0);

  PureStateSearchResult best;
  best.value = -1.0;
  for (int r = 0; r < restarts; ++r) {
    ComplexVector psi(d);
    if (r < d) {
      psi.setZero();
      psi(r) = 1.0;
    } else {
      for (Index i = 0; i < d; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
      psi.normalize();
    }
    double f = value(psi);
    if (f > best.value) best = {f, psi};

    double step = 0.5;
    for (int iter = 0; iter < 300; ++iter) {
      const ComplexVector g = gradient(psi);
      if (g.norm() < 1e-14) break;
      const ComplexVector trial = (psi + step * g).normalized();
      const double ft = value(trial);
      if (ft > f) {
        psi = trial;
        f = ft;
        step *= 1.25;
      } else {
        step *= 0.5;
        if (step < 1e-12) break;
      }
    }
    if (f > best.value) best = {f, psi};
  }
  return best;
}

// ---------------------------------------------------------------------------
// Rank property
// ---------------------------------------------------------------------------

RankReport rank_property(const ChoiMatrix& c, double rank_tol,
                         double span_tol) {
  const SpectralBasis basis = spectral_basis(c, rank_tol);
  return assemble_rank_report(basis, static_cast<Index>(basis.alpha.size()),
                              span_tol);
}

RankReport rank_residue(const ChoiMatrix& c, double rank_tol,
                        double span_tol) {
  const SpectralBasis basis = spectral_basis(c, rank_tol);
  Index k = static_cast<Index>(basis.alpha.size());
  RankReport rep = assemble_rank_report(basis, k, span_tol);
  while (!rep.satisfied && k > 1) {
    // Drop the smallest retained eigenvalue and retest over the remaining
    // eigenvector matrices.
    rep.residue += basis.eigenvalues[k - 1] * basis.eigenvalues[k - 1];
    ++rep.mu;
    --k;
    const Index mu = rep.mu;
    const double residue = rep.residue;
    rep = assemble_rank_report(basis, k, span_tol);
    rep.mu = mu;
    rep.residue = residue;
  }
  return rep;
}

std::vector<RankBoundPoint> rank_bound_curve(Index d) {
  if (d < 1) throw ShapeError("rank_bound_curve: dimension must be >= 1");
  std::vector<RankBoundPoint> curve;
  curve.reserve(static_cast<std::size_t>(d * d));
  for (Index k = 1; k <= d * d; ++k)
    curve.push_back({k, d * d - k + 1, k * k - k + 1});
  return curve;
}

// ---------------------------------------------------------------------------
// Divisibility
// ---------------------------------------------------------------------------

DivisibilityReport divisibility_defect(const ChannelTrajectory& traj) {
  traj.validate();
  const auto& samples = traj.samples;
  const std::size_t n = samples.size();

  std::vector<ComplexMatrix> sops;
  sops.reserve(n);
  for (const TrajectorySample& s : samples)
    sops.push_back(choi_to_superop(s.choi).mat);

  auto find_time = [&](double target) -> std::ptrdiff_t {
    for (std::size_t idx = 0; idx < n; ++idx)
      if (std::abs(samples[idx].t - target) <=
          1e-9 * std::max(1.0, std::abs(target)))
        return static_cast<std::ptrdiff_t>(idx);
    return -1;
  };

  DivisibilityReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::ptrdiff_t idx = find_time(samples[i].t + samples[j].t);
      if (idx < 0) continue;
      const ChoiMatrix composed = superop_to_choi({traj.d, sops[i] * sops[j]});
      const double defect =
          (samples[static_cast<std::size_t>(idx)].choi.mat - composed.mat)
              .norm();
      rep.defects.push_back({samples[i].t, samples[j].t, defect});
      rep.max_defect = std::max(rep.max_defect, defect);
    }

  if (rep.defects.empty()) {
    std::ostringstream os;
    os << "divisibility_defect: no composable pairs; a pair (t, t') is usable "
          "only when t + t' is also a grid time. Grid times:";
    for (const TrajectorySample& s : samples) os << " " << s.t;
    throw RequestError(os.str());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Symmetry benchmarks
// ---------------------------------------------------------------------------

namespace {

struct TermSpectrum {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  ComplexVector vec_min;
  ComplexVector vec_max;
};

// Spectrum of G = X - Phi^dual(X) for one channel/observable pair.
TermSpectrum conservation_gap(const ChoiMatrix& channel,
                              const ComplexMatrix& observable) {
  const Index d = channel.d;
  if (observable.rows() != d || observable.cols() != d)
    throw ShapeError("symmetry_deviation: observable dimension mismatch");
  if (hermiticity_defect(observable) > 1e-10 * std::max(1.0, observable.norm()))
    throw ValidationError("symmetry_deviation: observable is not hermitian");
  const SuperOperator dual = adjoint_superop(choi_to_superop(channel));
  const ComplexMatrix g =
      hermitian_part(observable - apply_superop(dual, observable));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g);
  TermSpectrum spec;
  spec.lambda_min = es.eigenvalues()(0);
  spec.lambda_max = es.eigenvalues()(d - 1);
  spec.vec_min = es.eigenvectors().col(0);
  spec.vec_max = es.eigenvectors().col(d - 1);
  return spec;
}

}  // namespace

SymmetryReport symmetry_deviation(
    const std::vector<ChoiMatrix>& site_channels,
    const std::vector<ComplexMatrix>& observables) {
  if (site_channels.size() != observables.size())
    throw ShapeError("symmetry_deviation: channel and observable counts differ");
  SymmetryReport rep;
  double sum_max = 0.0;
  double sum_min = 0.0;
  std::vector<TermSpectrum> spectra;
  spectra.reserve(site_channels.size());
  for (std::size_t i = 0; i < site_channels.size(); ++i) {
    if (site_channels[i].d != 2)
      throw ShapeError("symmetry_deviation: site channels must be single qubit");
    spectra.push_back(conservation_gap(site_channels[i], observables[i]));
    rep.site_intervals.push_back(
        {spectra.back().lambda_min, spectra.back().lambda_max});
    sum_max += spectra.back().lambda_max;
    sum_min += spectra.back().lambda_min;
  }
  // The objective separates over sites, so the product-state maximization is
  // exact: D = max(sum lambda_max, -sum lambda_min).
  rep.positive_branch = sum_max >= -sum_min;
  rep.deviation = std::max(sum_max, -sum_min);
  rep.maximizing_states.reserve(spectra.size());
  for (const TermSpectrum& s : spectra)
    rep.maximizing_states.push_back(rep.positive_branch ? s.vec_max : s.vec_min);
  return rep;
}

ObservableDeviationReport observable_deviation(
    const std::map<std::vector<int>, ChoiMatrix>& reduced_channels,
    const std::vector<ObservableTerm>& terms) {
  ObservableDeviationReport rep;
  double sum_max = 0.0;
  double sum_min = 0.0;
  std::vector<bool> used;  // qubit occupancy across terms
  for (const ObservableTerm& term : terms) {
    auto it = reduced_channels.find(term.subset);
    if (it == reduced_channels.end()) {
      std::ostringstream os;
      os << "observable_deviation: no reduced channel for subset {";
      for (std::size_t i = 0; i < term.subset.size(); ++i)
        os << (i ? "," : "") << term.subset[i];
      os << "}";
      throw RequestError(os.str());
    }
    const ChoiMatrix& channel = it->second;
    const Index dim = Index{1} << term.subset.size();
    if (channel.d != dim || term.matrix.rows() != dim ||
        term.matrix.cols() != dim)
      throw ShapeError("observable_deviation: term dimension mismatch");
    const TermSpectrum spec = conservation_gap(channel, term.matrix);
    sum_max += spec.lambda_max;
    sum_min += spec.lambda_min;
    for (int q : term.subset) {
      if (q >= static_cast<int>(used.size())) used.resize(q + 1, false);
      if (used[q]) rep.exact = false;
      used[q] = true;
    }
  }
  rep.deviation = std::max(sum_max, -sum_min);
  return rep;
}

// ---------------------------------------------------------------------------
// Combined suite
// ---------------------------------------------------------------------------

std::string attribute_errors(bool ds_violated, bool rank_satisfied,
                             std::optional<double> symmetry_dev,
                             const BenchOptions& opt) {
  if (ds_violated) return "non-unitary CP-divisible";
  if (!rank_satisfied) return "non-unitary CP-indivisible";
  if (symmetry_dev && *symmetry_dev > opt.symmetry_threshold)
    return "unitary error";
  return "no error detected";
}

namespace {

BenchReport run_suite(const ChoiMatrix& c,
                      std::optional<DivisibilityReport> divisibility,
                      const std::vector<ComplexMatrix>& observables,
                      const BenchOptions& opt, const char* kind) {
  BenchReport rep;
  rep.input_kind = kind;
  rep.d = c.d;
  rep.options = opt;
  rep.ds = ds_violation(c);
  rep.rank = rank_residue(c, opt.rank_tol, opt.span_tol);
  rep.divisibility = std::move(divisibility);
  if (!observables.empty()) {
    if (c.d != 2)
      throw ValidationError(
          "full_suite: per-site observables require a single-qubit channel");
    const std::vector<ChoiMatrix> channels(observables.size(), c);
    rep.symmetry = symmetry_deviation(channels, observables);
  }
  const bool ds_violated =
      std::max(rep.ds.violation_identity, rep.ds.violation_trace) >
      opt.ds_threshold;
  const bool rank_ok = rep.rank.mu == 0;  // satisfied without removals
  std::optional<double> sym;
  if (rep.symmetry) sym = rep.symmetry->deviation;
  rep.attribution = attribute_errors(ds_violated, rank_ok, sym, opt);
  return rep;
}

}  // namespace

BenchReport full_suite(const ChoiMatrix& c,
                       const std::vector<ComplexMatrix>& observables,
                       const BenchOptions& opt) {
  return run_suite(c, std::nullopt, observables, opt, "choi");
}

BenchReport full_suite(const ChannelTrajectory& traj,
                       const std::vector<ComplexMatrix>& observables,
                       const BenchOptions& opt) {
  traj.validate();
  DivisibilityReport div = divisibility_defect(traj);
  // Pointwise benchmarks run on the final sample (the gate itself).
  return run_suite(traj.samples.back().choi, std::move(div), observables, opt,
                   "trajectory");
}

}  // namespace qcbench
