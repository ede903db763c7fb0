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

#ifndef QCBENCH_GATELAB_HPP
#define QCBENCH_GATELAB_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qcbench/channel.hpp"

namespace qcbench {

enum class PauliAxis { X, Y, Z };

struct PauliFactor {
  int qubit = 0;
  PauliAxis axis = PauliAxis::Z;
};

// coefficient * product of single-qubit Paulis on distinct qubits.
struct PauliTerm {
  double coefficient = 0.0;
  std::vector<PauliFactor> factors;
};

struct HamiltonianSpec {
  int n_qubits = 0;
  std::vector<PauliTerm> terms;

  void validate() const;
};

struct JumpOperator {
  ComplexMatrix op;
  double rate = 0.0;  // >= 0
};

// Time-independent master-equation data: Hamiltonian plus weighted jumps.
struct LindbladSpec {
  HamiltonianSpec hamiltonian;
  std::vector<JumpOperator> jumps;

  void validate() const;
};

struct TermFluctuation {
  std::size_t term_index = 0;
  double sigma = 0.0;  // std-dev of the Gaussian coefficient perturbation
};

// Shot-to-shot model: every sample perturbs the selected term coefficients
// by independent Gaussians and the resulting unitary channels are averaged.
struct FluctuationSpec {
  HamiltonianSpec base;
  std::vector<TermFluctuation> fluctuations;
  int samples = 1;  // M >= 1
  std::uint64_t seed = 0;

  void validate() const;
};

ComplexMatrix pauli_matrix(PauliAxis axis);
ComplexMatrix sigma_minus();  // |1> -> |0>
ComplexMatrix sigma_plus();   // |0> -> |1>

// Dense 2^N x 2^N hermitian matrix of the spec (N <= 12).
ComplexMatrix build_hamiltonian(const HamiltonianSpec& spec);

// e^{-i h t} via hermitian eigendecomposition.
ComplexMatrix evolve_unitary(const ComplexMatrix& h, double t,
                             double herm_tol = 1e-10);

// Superoperator of
//   L(rho) = -i[H, rho] + sum_j rate_j (L_j rho L_j^+ - {L_j^+ L_j, rho}/2).
// The dual generator annihilates the identity.
SuperOperator lindblad_generator(const LindbladSpec& spec);

// Choi of exp(t * gen) for a time-independent generator, t >= 0.
ChoiMatrix lindblad_channel(const SuperOperator& gen, double t);

// Single-qubit decay family: diag blocks (1, 0, 1-e^{-g1 t}, e^{-g1 t}) with
// corner coherences e^{-g2 t}. Warns when g2 < g1/2 (complete positivity can
// fail outside that regime).
ChoiMatrix bloch_redfield_choi(double gamma1, double gamma2, double t);

// Single-qubit dephasing with corner factor e^{-i omega0 t - sigma^2 t^2};
// doubly stochastic for all parameters.
ChoiMatrix gaussian_dephasing_choi(double omega0, double sigma, double t);

// Average of choi_of_unitary(e^{-i H_m t}) over M Gaussian coefficient draws.
// Deterministic for a fixed seed; each sample uses an independently derived
// sub-seed so the sample set does not depend on t.
ChoiMatrix fluctuating_channel(const FluctuationSpec& spec, double t);

// e^{-i (H0 + dH) t}: the systematic (unitary) error model.
ComplexMatrix systematic_perturbation(const HamiltonianSpec& h0,
                                      const HamiltonianSpec& delta, double t);

// Trajectory builders. The grid must start at 0 and be strictly increasing;
// every builder emits the identity Choi at t = 0.
ChannelTrajectory lindblad_trajectory(const LindbladSpec& spec,
                                      const std::vector<double>& times);
ChannelTrajectory unitary_trajectory(const HamiltonianSpec& spec,
                                     const std::vector<double>& times);
ChannelTrajectory fluctuation_trajectory(const FluctuationSpec& spec,
                                         const std::vector<double>& times);

}  // namespace qcbench

#endif  // QCBENCH_GATELAB_HPP
