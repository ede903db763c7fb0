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

#ifndef QCBENCH_BENCHMARKS_HPP
#define QCBENCH_BENCHMARKS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcbench/channel.hpp"

namespace qcbench {

// Double-stochasticity violation of a channel. For a reduction of a
// unitary both violations vanish; a nonzero identity violation certifies a
// non-unitary, divisible error with size in [epsilon_lower, epsilon_upper].
struct DsReport {
  Index d = 0;
  double violation_identity = 0.0;  // ||1 - Phi(1)||_2
  double violation_trace = 0.0;     // ||1 - trace_out||_2
  double epsilon_lower = 0.0;       // violation_identity / sqrt(d)
  double epsilon_upper = 0.0;       // violation_identity
};

DsReport ds_violation(const ChoiMatrix& c);

struct FixedPointReport {
  bool violates = false;
  double violation = 0.0;  // ||Phi_t(1/d) - 1/d||_2 at t = t_large
};

// Long-time fate of the maximally mixed state under a Lindblad generator.
// A bath at finite temperature drags 1/d to a thermal state, so the
// violation is strictly positive; at infinite temperature it stays put.
FixedPointReport thermal_fixed_point_check(const SuperOperator& gen,
                                           double t_large, double tol = 1e-8);

// Largest singular value of the superoperator difference. This is the map
// metric, not the largest singular value of the Choi difference matrix.
double sigma_max_diff(const ChoiMatrix& a, const ChoiMatrix& b);

// Frobenius norm of the Choi difference.
double schatten2_diff(const ChoiMatrix& a, const ChoiMatrix& b);

struct MetricReport {
  double sigma_max = 0.0;
  double schatten2 = 0.0;
  bool lower_ok = false;  // sigma_max <= schatten2 + slack
  bool upper_ok = false;  // schatten2 <= d * sigma_max + slack
};

MetricReport compare_channels(const ChoiMatrix& a, const ChoiMatrix& b,
                              double slack = 1e-9);

struct PureStateSearchResult {
  double value = 0.0;
  ComplexVector state;
};

// Multi-start projected gradient ascent of || (Phi_a - Phi_b)(|psi><psi|) ||_2
// over unit vectors. A lower-bound estimator: the result is the best value
// seen and never decreases when restarts are added under a fixed seed.
PureStateSearchResult max_pure_state_discrepancy(const ChoiMatrix& a,
                                                 const ChoiMatrix& b,
                                                 int restarts = 32,
                                                 std::uint64_t seed = 0);

// Spectral test of whether a doubly stochastic Choi matrix can be the
// reduction of a unitary on a larger register. With eigenvectors reshaped
// to matrices a_i (output index row, input index column), the span of
// {a_i a_j^+} must fit below both d^2-k+1 and k^2-k+1.
struct RankReport {
  Index d = 0;
  std::vector<double> eigenvalues;        // descending
  Index k = 0;                            // numerical rank of the Choi matrix
  Index span_dim = 0;                     // dim span{a_i a_j^+}
  Index span_dim_centered_adjoint = 0;    // dim span{a_i^+ a_j - delta_ij 1/d}
  Index bound_d = 0;                      // d^2 - k + 1
  Index bound_k = 0;                      // k^2 - k + 1
  bool satisfied = false;                 // span_dim <= min(bound_d, bound_k)
  bool input_doubly_stochastic = true;    // the test presumes this
  Index mu = 0;                           // eigenvalues removed (residue pass)
  double residue = 0.0;                   // sum of squares of removed ones
};

RankReport rank_property(const ChoiMatrix& c, double rank_tol = 1e-7,
                         double span_tol = 1e-7);

// Removes the smallest retained eigenvalue until the rank property holds or
// k = 1; fills mu and residue. The eigenvalue list stays the full original.
RankReport rank_residue(const ChoiMatrix& c, double rank_tol = 1e-7,
                        double span_tol = 1e-7);

struct RankBoundPoint {
  Index k = 0;
  Index bound_d = 0;  // d^2 - k + 1
  Index bound_k = 0;  // k^2 - k + 1
};

// Bound curves for k = 1..d^2.
std::vector<RankBoundPoint> rank_bound_curve(Index d);

struct DefectSample {
  double t = 0.0;
  double t_prime = 0.0;
  double defect = 0.0;  // || Choi(t+t') - Choi(t) o Choi(t') ||_2
};

struct DivisibilityReport {
  std::vector<DefectSample> defects;
  double max_defect = 0.0;
};

// Composition defect over every grid pair (t, t') whose sum is also on the
// grid. Vanishes on semigroup (Lindblad) and unitary trajectories.
DivisibilityReport divisibility_defect(const ChannelTrajectory& traj);

struct SiteInterval {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

// Conservation deviation of per-site observables X_i under per-site
// channels: D = max over product states of |sum_i Tr[rho_i X_i] -
// Tr[Phi_i(rho_i) X_i]|. The objective separates over sites, so the
// maximization is exact.
struct SymmetryReport {
  std::vector<SiteInterval> site_intervals;  // spectra of G_i = X_i - Phi_i^dual(X_i)
  double deviation = 0.0;
  bool positive_branch = true;  // true: lambda_max eigenvectors maximize
  std::vector<ComplexVector> maximizing_states;
};

SymmetryReport symmetry_deviation(const std::vector<ChoiMatrix>& site_channels,
                                  const std::vector<ComplexMatrix>& observables);

struct ObservableTerm {
  std::vector<int> subset;  // ascending qubit indices
  ComplexMatrix matrix;     // hermitian, dim 2^|subset|
};

struct ObservableDeviationReport {
  double deviation = 0.0;
  // True when all term subsets are pairwise disjoint; otherwise the value is
  // only a separable upper bound.
  bool exact = true;
};

// m-body generalization of symmetry_deviation over reduced channels keyed by
// subset.
ObservableDeviationReport observable_deviation(
    const std::map<std::vector<int>, ChoiMatrix>& reduced_channels,
    const std::vector<ObservableTerm>& terms);

struct BenchOptions {
  double hermiticity_tol = 1e-9;
  double rank_tol = 1e-7;
  double span_tol = 1e-7;
  // Attribution thresholds default to 10x the matching numerical tolerance.
  double ds_threshold = 1e-8;
  double symmetry_threshold = 1e-8;
};

// Combined run of all benchmarks with error-class attribution.
//
// Attribution truth table (deterministic in the sub-reports):
//   ds violated                          -> "non-unitary CP-divisible"
//   ds ok, rank property not satisfied   -> "non-unitary CP-indivisible"
//   ds ok, rank ok, symmetry D > thresh  -> "unitary error"
//   otherwise                            -> "no error detected"
struct BenchReport {
  std::string input_kind;  // "choi" | "trajectory"
  Index d = 0;
  DsReport ds;
  RankReport rank;
  std::optional<DivisibilityReport> divisibility;
  std::optional<SymmetryReport> symmetry;
  std::string attribution;
  BenchOptions options;
};

std::string attribute_errors(bool ds_violated, bool rank_satisfied,
                             std::optional<double> symmetry_dev,
                             const BenchOptions& opt);

// Single-channel run. When observables are given the input must be a
// single-qubit channel; it is applied at every observable site.
BenchReport full_suite(const ChoiMatrix& c,
                       const std::vector<ComplexMatrix>& observables = {},
                       const BenchOptions& opt = {});

// Trajectory run: divisibility over the grid, the other benchmarks on the
// final sample.
BenchReport full_suite(const ChannelTrajectory& traj,
                       const std::vector<ComplexMatrix>& observables = {},
                       const BenchOptions& opt = {});

}  // namespace qcbench

#endif  // QCBENCH_BENCHMARKS_HPP
