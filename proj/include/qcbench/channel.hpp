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

#ifndef QCBENCH_CHANNEL_HPP
#define QCBENCH_CHANNEL_HPP

#include <vector>

#include "qcbench/linalg.hpp"

namespace qcbench {

// Density matrix on a d-dimensional system.
struct DensityMatrix {
  ComplexMatrix mat;

  // Hermitian within tol, eigenvalues >= -tol, unit trace within tol.
  void validate(double tol = kHermTol) const;

  static DensityMatrix maximally_mixed(Index d);
  static DensityMatrix pure(const ComplexVector& psi);
};

// Choi matrix of a channel on a d-dimensional system.
//
// Index convention ("in-out"): the composite row index is r = i*d + j with
// i the input and j the output basis index, so that
//   mat((i,j),(k,l)) = <j| Phi(|i><k|) |l>.
// Under this normalization a trace-preserving channel has total trace d.
struct ChoiMatrix {
  Index d = 0;
  ComplexMatrix mat;  // d^2 x d^2

  static ChoiMatrix identity(Index d);
};

// The same channel as a d^2 x d^2 matrix acting on column-flattened
// operators (the "map" view; its singular values are the map singular
// values, distinct from the Choi matrix's).
struct SuperOperator {
  Index d = 0;
  ComplexMatrix mat;

  static SuperOperator identity(Index d);
};

// A subset S of the qubits of an N-qubit register. Qubit 0 is the most
// significant tensor factor.
struct SubsetSelector {
  int n_qubits = 0;
  std::vector<int> indices;  // strictly increasing, in [0, n_qubits)

  void validate() const;
  int size() const { return static_cast<int>(indices.size()); }
};

struct TrajectorySample {
  double t = 0.0;
  ChoiMatrix choi;
};

// Time-stamped family of channels Phi_t, with strictly increasing times.
// Builders that represent Phi_{t=0} = Id put the identity Choi at t = 0.
struct ChannelTrajectory {
  Index d = 0;
  std::vector<TrajectorySample> samples;

  void validate() const;
};

// Choi matrix of rho -> u rho u^dagger. Requires ||u^dagger u - 1||_F within
// unitary_tol. The result is rank one with trace d.
ChoiMatrix choi_of_unitary(const ComplexMatrix& u, double unitary_tol = 1e-10);

// Choi matrix of the channel induced on subset S by an N-qubit unitary when
// the complement is prepared maximally mixed:
//   Phi_S(rho) = Tr_{S^c}[ u (rho (x) 1/2^m) u^dagger ],  m = N - |S|.
// The 1/2^m weight makes Phi_S unital and trace preserving for unitary u.
ChoiMatrix reduced_choi(const ComplexMatrix& u, int n_qubits,
                        const SubsetSelector& s, double unitary_tol = 1e-10);

// Phi(rho)_{jl} = sum_{ik} mat((i,j),(k,l)) rho_{ik}. Linear in rho;
// hermiticity is preserved when both inputs are hermitian.
ComplexMatrix apply_choi(const ChoiMatrix& c, const ComplexMatrix& rho);

ComplexMatrix apply_superop(const SuperOperator& s, const ComplexMatrix& rho);

// Mutually inverse index reshuffles between the two representations.
// The round trip reproduces the stored entries exactly.
SuperOperator choi_to_superop(const ChoiMatrix& c);
ChoiMatrix superop_to_choi(const SuperOperator& s);

// Choi of Phi_after o Phi_before.
ChoiMatrix compose(const ChoiMatrix& after, const ChoiMatrix& before);

// Heisenberg-picture dual: Tr[Phi(rho) X] = Tr[rho Phi^dual(X)] for
// hermitian rho, X. The dual of a trace-preserving channel is unital.
SuperOperator adjoint_superop(const SuperOperator& s);

// Partial traces of the Choi matrix over the input / output indices.
// trace_in(c) = Phi(1); trace_out(c) = 1 iff the channel is trace
// preserving. Both equal the identity iff the channel is doubly stochastic.
ComplexMatrix trace_in(const ChoiMatrix& c);
ComplexMatrix trace_out(const ChoiMatrix& c);

struct CpCheck {
  bool completely_positive = false;
  double min_eigenvalue = 0.0;
};

// Complete positivity test: smallest Choi eigenvalue >= -tol.
// Throws ValidationError if the matrix is not hermitian within tol.
CpCheck is_cp(const ChoiMatrix& c, double tol = kHermTol);

}  // namespace qcbench

#endif  // QCBENCH_CHANNEL_HPP
