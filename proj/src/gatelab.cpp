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

#include "qcbench/gatelab.hpp"

#include <cmath>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace qcbench {

namespace {

constexpr int kMaxQubits = 12;

// splitmix64: decorrelates per-sample sub-seeds from the user seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void require_time_grid(const std::vector<double>& times) {
  if (times.empty()) throw RequestError("trajectory: empty time grid");
  if (times.front() != 0.0)
    throw RequestError("trajectory: time grid must start at 0");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw RequestError("trajectory: time grid must be strictly increasing");
}

}  // namespace

// ---------------------------------------------------------------------------
// Specs
// ---------------------------------------------------------------------------

void HamiltonianSpec::validate() const {
  if (n_qubits < 1) throw ShapeError("HamiltonianSpec: need at least one qubit");
  if (n_qubits > kMaxQubits) {
    std::ostringstream os;
    os << "HamiltonianSpec: " << n_qubits << " qubits exceeds the dense limit "
       << kMaxQubits;
    throw SizeError(os.str());
  }
  for (const PauliTerm& term : terms) {
    if (!std::isfinite(term.coefficient))
      throw ValidationError("HamiltonianSpec: non-finite coefficient");
    std::set<int> seen;
    for (const PauliFactor& f : term.factors) {
      if (f.qubit < 0 || f.qubit >= n_qubits)
        throw ShapeError("HamiltonianSpec: factor qubit out of range");
      if (!seen.insert(f.qubit).second)
        throw ValidationError("HamiltonianSpec: repeated qubit within a term");
    }
  }
}

void LindbladSpec::validate() const {
  hamiltonian.validate();
  const Index dim = Index{1} << hamiltonian.n_qubits;
  for (const JumpOperator& j : jumps) {
    if (j.rate < 0.0) throw ValidationError("LindbladSpec: negative rate");
    if (j.op.rows() != dim || j.op.cols() != dim)
      throw ShapeError("LindbladSpec: jump operator dimension differs from 2^N");
  }
}

void FluctuationSpec::validate() const {
  base.validate();
  if (samples < 1) throw ValidationError("FluctuationSpec: sample count must be >= 1");
  for (const TermFluctuation& f : fluctuations) {
    if (f.term_index >= base.terms.size())
      throw ShapeError("FluctuationSpec: term index out of range");
    if (f.sigma < 0.0) throw ValidationError("FluctuationSpec: negative sigma");
  }
}

// ---------------------------------------------------------------------------
// Operators
// ---------------------------------------------------------------------------

ComplexMatrix pauli_matrix(PauliAxis axis) {
  ComplexMatrix m(2, 2);
  switch (axis) {
    case PauliAxis::X:
      m << 0, 1, 1, 0;
      break;
    case PauliAxis::Y:
      m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
      break;
    case PauliAxis::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

ComplexMatrix sigma_minus() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 0, 0;
  return m;
}

ComplexMatrix sigma_plus() {
  ComplexMatrix m(2, 2);
  m << 0, 0, 1, 0;
  return m;
}

ComplexMatrix build_hamiltonian(const HamiltonianSpec& spec) {
  spec.validate();
  const Index dim = Index{1} << spec.n_qubits;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  const ComplexMatrix eye2 = ComplexMatrix::Identity(2, 2);
  for (const PauliTerm& term : spec.terms) {
    ComplexMatrix acc = ComplexMatrix::Identity(1, 1);
    for (int q = 0; q < spec.n_qubits; ++q) {
      const PauliFactor* hit = nullptr;
      for (const PauliFactor& f : term.factors)
        if (f.qubit == q) hit = &f;
      acc = tensor_product(acc, hit ? pauli_matrix(hit->axis) : eye2);
    }
    h += term.coefficient * acc;
  }
  return h;
}

ComplexMatrix evolve_unitary(const ComplexMatrix& h, double t,
                             double herm_tol) {
  if (h.rows() != h.cols()) throw ShapeError("evolve_unitary: non-square input");
  if (hermiticity_defect(h) > herm_tol)
    throw ValidationError("evolve_unitary: generator is not hermitian within tolerance");
  const Index dim = h.rows();
  if (t == 0.0) return ComplexMatrix::Identity(dim, dim);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  ComplexVector phases(dim);
  for (Index i = 0; i < dim; ++i)
    phases(i) = std::exp(Complex(0.0, -es.eigenvalues()(i) * t));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

SuperOperator lindblad_generator(const LindbladSpec& spec) {
  spec.validate();
  const Index dim = Index{1} << spec.hamiltonian.n_qubits;
  if (dim * dim > kMaxDim)
    throw SizeError("lindblad_generator: superoperator exceeds the dense limit");
  const ComplexMatrix h = build_hamiltonian(spec.hamiltonian);
  const ComplexMatrix eye = ComplexMatrix::Identity(dim, dim);
  const Complex img(0.0, 1.0);

  // Column-major flattening: vec(A rho B) = (B^T (x) A) vec(rho).
  ComplexMatrix gen =
      -img * (tensor_product(eye, h) - tensor_product(h.transpose(), eye));
  for (const JumpOperator& j : spec.jumps) {
    const ComplexMatrix ldl = j.op.adjoint() * j.op;
    gen += j.rate * (tensor_product(j.op.conjugate(), j.op) -
                     0.5 * tensor_product(eye, ldl) -
                     0.5 * tensor_product(ldl.transpose(), eye));
  }
  return {dim, gen};
}

ChoiMatrix lindblad_channel(const SuperOperator& gen, double t) {
  if (t < 0.0) throw ValidationError("lindblad_channel: negative time");
  if (gen.mat.rows() != gen.d * gen.d)
    throw ShapeError("lindblad_channel: generator size differs from d^2");
  if (t == 0.0) return ChoiMatrix::identity(gen.d);
  const ComplexMatrix propagator = (t * gen.mat).exp();
  if (!propagator.allFinite())
    throw ValidationError("lindblad_channel: matrix exponential did not converge");
  return superop_to_choi({gen.d, propagator});
}

ChoiMatrix bloch_redfield_choi(double gamma1, double gamma2, double t) {
  if (gamma2 < gamma1 / 2.0)
    std::cerr << "qcbench: warning: bloch_redfield_choi with gamma2 < gamma1/2; "
                 "the channel can fail complete positivity\n";
  const double p = std::exp(-gamma1 * t);
  const double c = std::exp(-gamma2 * t);
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(0, 3) = c;
  m(3, 0) = c;
  m(2, 2) = 1.0 - p;
  m(3, 3) = p;
  return {2, m};
}

ChoiMatrix gaussian_dephasing_choi(double omega0, double sigma, double t) {
  const Complex corner = std::exp(Complex(-sigma * sigma * t * t, -omega0 * t));
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(3, 3) = 1.0;
  m(0, 3) = corner;
  m(3, 0) = std::conj(corner);
  return {2, m};
}

ChoiMatrix fluctuating_channel(const FluctuationSpec& spec, double t) {
  spec.validate();
  bool degenerate = true;
  for (const TermFluctuation& f : spec.fluctuations)
    if (f.sigma > 0.0) degenerate = false;
  if (degenerate)
    return choi_of_unitary(evolve_unitary(build_hamiltonian(spec.base), t));

  const Index d = Index{1} << spec.base.n_qubits;
  ComplexMatrix sum = ComplexMatrix::Zero(d * d, d * d);
  HamiltonianSpec sample = spec.base;
  for (int m = 0; m < spec.samples; ++m) {
    std::mt19937_64 rng(mix_seed(spec.seed, static_cast<std::uint64_t>(m)));
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (std::size_t i = 0; i < spec.base.terms.size(); ++i)
      sample.terms[i].coefficient = spec.base.terms[i].coefficient;
    for (const TermFluctuation& f : spec.fluctuations)
      sample.terms[f.term_index].coefficient += f.sigma * gauss(rng);
    sum += choi_of_unitary(evolve_unitary(build_hamiltonian(sample), t)).mat;
  }
  return {d, sum / static_cast<double>(spec.samples)};
}

ComplexMatrix systematic_perturbation(const HamiltonianSpec& h0,
                                      const HamiltonianSpec& delta, double t) {
  if (h0.n_qubits != delta.n_qubits)
    throw ShapeError("systematic_perturbation: qubit counts differ");
  return evolve_unitary(build_hamiltonian(h0) + build_hamiltonian(delta), t);
}

// ---------------------------------------------------------------------------
// Trajectories
// ---------------------------------------------------------------------------

ChannelTrajectory lindblad_trajectory(const LindbladSpec& spec,
                                      const std::vector<double>& times) {
  require_time_grid(times);
  const SuperOperator gen = lindblad_generator(spec);
  ChannelTrajectory traj{gen.d, {}};
  traj.samples.reserve(times.size());
  for (double t : times) traj.samples.push_back({t, lindblad_channel(gen, t)});
  traj.validate();
  return traj;
}

ChannelTrajectory unitary_trajectory(const HamiltonianSpec& spec,
                                     const std::vector<double>& times) {
  require_time_grid(times);
  const ComplexMatrix h = build_hamiltonian(spec);
  ChannelTrajectory traj{Index{1} << spec.n_qubits, {}};
  traj.samples.reserve(times.size());
  for (double t : times)
    traj.samples.push_back({t, choi_of_unitary(evolve_unitary(h, t))});
  traj.validate();
  return traj;
}

ChannelTrajectory fluctuation_trajectory(const FluctuationSpec& spec,
                                         const std::vector<double>& times) {
  require_time_grid(times);
  // The sub-seeds depend only on the sample index, so every grid point
  // averages over the same Hamiltonian draws and the empirical trajectory is
  // itself an exact fluctuation average.
  ChannelTrajectory traj{Index{1} << spec.base.n_qubits, {}};
  traj.samples.reserve(times.size());
  for (double t : times)
    traj.samples.push_back({t, fluctuating_channel(spec, t)});
  traj.validate();
  return traj;
}

}  // namespace qcbench
