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

#ifndef QCBENCH_LINALG_HPP
#define QCBENCH_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qcbench/errors.hpp"

namespace qcbench {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Default tolerance for hermiticity / positivity checks on inputs that may
// carry measurement noise.
inline constexpr double kHermTol = 1e-9;

// Hard cap on the dimension of any dense operator we materialize.
inline constexpr Index kMaxDim = Index{1} << 12;

// ||m - m^dagger||_F
double hermiticity_defect(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = kHermTol);

// (m + m^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

// Kronecker product a (x) b. The first factor is the most significant one,
// i.e. qubit 0 of a register occupies the leftmost slot.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             Index max_dim = kMaxDim);

// Trace out every tensor factor not listed in `keep`. `dims` are the factor
// dimensions in slot order; `keep` holds slot positions in ascending order.
// The full trace is preserved: Tr(result) = Tr(m).
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<Index>& dims,
                            const std::vector<int>& keep);

// Singular values in descending order.
Eigen::VectorXd singular_values(const ComplexMatrix& m);

double sigma_max(const ComplexMatrix& m);

// Smallest eigenvalue of a matrix assumed hermitian (the hermitian part is
// diagonalized; callers validate the defect themselves).
double min_eigenvalue_hermitian(const ComplexMatrix& m);

// Column-major flattening of a square matrix and its inverse.
ComplexVector vec(const ComplexMatrix& m);
ComplexMatrix unvec(const ComplexVector& v, Index d);

}  // namespace qcbench

#endif  // QCBENCH_LINALG_HPP
