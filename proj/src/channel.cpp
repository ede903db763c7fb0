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

#include "qcbench/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qcbench {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": matrix must be square, got " << m.rows() << "x"
       << m.cols();
    throw ShapeError(os.str());
  }
}

// Self-inverse index reshuffle between the Choi and superoperator layouts:
//   out((i,j),(k,l)) = in((l,j),(k,i)).
ComplexMatrix reshuffle(const ComplexMatrix& m, Index d) {
  ComplexMatrix out(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k)
        for (Index l = 0; l < d; ++l)
          out(i * d + j, k * d + l) = m(l * d + j, k * d + i);
  return out;
}

void require_unitary(const ComplexMatrix& u, double tol, const char* what) {
  require_square(u, what);
  const Index d = u.rows();
  const double defect =
      (u.adjoint() * u - ComplexMatrix::Identity(d, d)).norm();
  if (!(defect <= tol)) {
    std::ostringstream os;
    os << what << ": input is not unitary within " << tol
       << " (||u^+ u - 1||_F = " << defect << ")";
    throw ValidationError(os.str());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Dense helpers
// ---------------------------------------------------------------------------

double hermiticity_defect(const ComplexMatrix& m) {
  return (m - m.adjoint()).norm();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && hermiticity_defect(m) <= tol;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return (m + m.adjoint()) / 2.0;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             Index max_dim) {
  require_square(a, "tensor_product");
  require_square(b, "tensor_product");
  const Index da = a.rows();
  const Index db = b.rows();
  if (da == 0 || db == 0) throw ShapeError("tensor_product: empty factor");
  if (db > max_dim / da) {
    std::ostringstream os;
    os << "tensor_product: result dimension " << da << "*" << db
       << " exceeds the configured maximum " << max_dim;
    throw SizeError(os.str());
  }
  ComplexMatrix out(da * db, da * db);
  for (Index i = 0; i < da; ++i)
    for (Index k = 0; k < da; ++k) out.block(i * db, k * db, db, db) = a(i, k) * b;
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<Index>& dims,
                            const std::vector<int>& keep) {
  require_square(m, "partial_trace");
  Index total = 1;
  for (Index d : dims) {
    if (d < 1) throw ShapeError("partial_trace: factor dims must be >= 1");
    total *= d;
  }
  if (total != m.rows()) {
    std::ostringstream os;
    os << "partial_trace: product of factor dims " << total
       << " does not match matrix dim " << m.rows();
    throw ShapeError(os.str());
  }
  const int n = static_cast<int>(dims.size());
  if (keep.empty()) throw ShapeError("partial_trace: keep set must be non-empty");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n)
      throw ShapeError("partial_trace: keep position out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw ShapeError("partial_trace: keep positions must be strictly increasing");
  }

  // Strides with factor 0 the most significant.
  std::vector<Index> stride(n);
  Index acc = 1;
  for (int f = n - 1; f >= 0; --f) {
    stride[f] = acc;
    acc *= dims[f];
  }
  std::vector<int> traced;
  for (int f = 0; f < n; ++f)
    if (!std::binary_search(keep.begin(), keep.end(), f)) traced.push_back(f);

  auto offsets = [&](const std::vector<int>& factors) {
    Index count = 1;
    for (int f : factors) count *= dims[f];
    std::vector<Index> off(count, 0);
    for (Index a = 0; a < count; ++a) {
      Index rest = a;
      for (int pos = static_cast<int>(factors.size()) - 1; pos >= 0; --pos) {
        const int f = factors[pos];
        off[a] += (rest % dims[f]) * stride[f];
        rest /= dims[f];
      }
    }
    return off;
  };

  const std::vector<Index> off_keep = offsets(keep);
  const std::vector<Index> off_tr = offsets(traced);

  const Index dk = static_cast<Index>(off_keep.size());
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (Index a = 0; a < dk; ++a)
    for (Index b = 0; b < dk; ++b) {
      Complex sum = 0.0;
      for (Index e : off_tr) sum += m(off_keep[a] + e, off_keep[b] + e);
      out(a, b) = sum;
    }
  return out;
}

Eigen::VectorXd singular_values(const ComplexMatrix& m) {
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  return svd.singularValues();
}

double sigma_max(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return singular_values(m)(0);
}

double min_eigenvalue_hermitian(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m,
                                                  Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

ComplexVector vec(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix unvec(const ComplexVector& v, Index d) {
  if (v.size() != d * d) throw ShapeError("unvec: length is not d^2");
  return Eigen::Map<const ComplexMatrix>(v.data(), d, d);
}

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

void DensityMatrix::validate(double tol) const {
  require_square(mat, "DensityMatrix");
  if (hermiticity_defect(mat) > tol)
    throw ValidationError("DensityMatrix: not hermitian within tolerance");
  if (std::abs(mat.trace() - Complex(1.0, 0.0)) > tol)
    throw ValidationError("DensityMatrix: trace differs from 1 beyond tolerance");
  if (min_eigenvalue_hermitian(hermitian_part(mat)) < -tol)
    throw ValidationError("DensityMatrix: negative eigenvalue beyond tolerance");
}

DensityMatrix DensityMatrix::maximally_mixed(Index d) {
  return {ComplexMatrix::Identity(d, d) / static_cast<double>(d)};
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double n = psi.norm();
  if (n == 0.0) throw ValidationError("DensityMatrix::pure: zero vector");
  ComplexVector u = psi / n;
  return {u * u.adjoint()};
}

ChoiMatrix ChoiMatrix::identity(Index d) {
  ComplexVector v = ComplexVector::Zero(d * d);
  for (Index i = 0; i < d; ++i) v(i * d + i) = 1.0;
  return {d, v * v.adjoint()};
}

SuperOperator SuperOperator::identity(Index d) {
  return {d, ComplexMatrix::Identity(d * d, d * d)};
}

void SubsetSelector::validate() const {
  if (indices.empty()) throw ShapeError("SubsetSelector: empty subset");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= n_qubits)
      throw ShapeError("SubsetSelector: qubit index out of range");
    if (i > 0 && indices[i] <= indices[i - 1])
      throw ShapeError("SubsetSelector: indices must be strictly increasing");
  }
}

void ChannelTrajectory::validate() const {
  if (d < 1) throw ShapeError("ChannelTrajectory: dimension must be >= 1");
  if (samples.empty()) throw ShapeError("ChannelTrajectory: no samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].choi.d != d)
      throw ShapeError("ChannelTrajectory: sample dimension mismatch");
    if (samples[i].choi.mat.rows() != d * d)
      throw ShapeError("ChannelTrajectory: sample matrix size mismatch");
    if (samples[i].t < 0.0)
      throw ValidationError("ChannelTrajectory: negative time");
    if (i > 0 && !(samples[i].t > samples[i - 1].t))
      throw ValidationError("ChannelTrajectory: times must be strictly increasing");
  }
}

// ---------------------------------------------------------------------------
// Channel construction and algebra
// ---------------------------------------------------------------------------

ChoiMatrix choi_of_unitary(const ComplexMatrix& u, double unitary_tol) {
  require_unitary(u, unitary_tol, "choi_of_unitary");
  const Index d = u.rows();
  // mat((i,j),(k,l)) = u(j,i) conj(u(l,k)): rank one with trace d.
  ComplexVector v(d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) v(i * d + j) = u(j, i);
  return {d, v * v.adjoint()};
}

ChoiMatrix reduced_choi(const ComplexMatrix& u, int n_qubits,
                        const SubsetSelector& s, double unitary_tol) {
  if (s.n_qubits != n_qubits)
    throw ShapeError("reduced_choi: selector qubit count differs from n_qubits");
  s.validate();
  if (n_qubits < 1 || (Index{1} << n_qubits) > kMaxDim)
    throw SizeError("reduced_choi: register size out of range");
  const Index dim_full = Index{1} << n_qubits;
  if (u.rows() != dim_full || u.cols() != dim_full)
    throw ShapeError("reduced_choi: unitary dimension differs from 2^N");
  require_unitary(u, unitary_tol, "reduced_choi");

  const int ns = s.size();
  const int ne = n_qubits - ns;
  const Index d = Index{1} << ns;
  const Index de = Index{1} << ne;

  // Bit weight of qubit q in a full register index (qubit 0 most significant).
  std::vector<Index> w_sub(ns), w_env(ne);
  {
    std::vector<bool> in_sub(n_qubits, false);
    for (int j = 0; j < ns; ++j) {
      in_sub[s.indices[j]] = true;
      w_sub[j] = Index{1} << (n_qubits - 1 - s.indices[j]);
    }
    int pos = 0;
    for (int q = 0; q < n_qubits; ++q)
      if (!in_sub[q]) w_env[pos++] = Index{1} << (n_qubits - 1 - q);
  }
  auto full_index = [&](Index a, Index e) {
    Index p = 0;
    for (int j = 0; j < ns; ++j)
      if ((a >> (ns - 1 - j)) & 1) p += w_sub[j];
    for (int j = 0; j < ne; ++j)
      if ((e >> (ne - 1 - j)) & 1) p += w_env[j];
    return p;
  };
  std::vector<Index> full(static_cast<std::size_t>(d * de));
  for (Index a = 0; a < d; ++a)
    for (Index e = 0; e < de; ++e) full[a * de + e] = full_index(a, e);

  // Phi(E_ik) = 1/2^m sum_e Tr_env[ (U|i,e>)(U|k,e>)^+ ], assembled as a
  // Gram matrix: T((i,j),(e,e')) = u(full(j,e'), full(i,e)) gives
  // Choi = T T^+ / 2^m, hermitian and PSD by construction.
  ComplexMatrix t(d * d, de * de);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index e = 0; e < de; ++e)
        for (Index ep = 0; ep < de; ++ep)
          t(i * d + j, e * de + ep) = u(full[j * de + ep], full[i * de + e]);
  ChoiMatrix out{d, ComplexMatrix(d * d, d * d)};
  out.mat.noalias() = t * t.adjoint();
  out.mat /= static_cast<double>(de);
  return out;
}

ComplexMatrix apply_choi(const ChoiMatrix& c, const ComplexMatrix& rho) {
  const Index d = c.d;
  if (rho.rows() != d || rho.cols() != d)
    throw ShapeError("apply_choi: state dimension mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index k = 0; k < d; ++k) {
      const Complex r = rho(i, k);
      if (r == Complex(0.0, 0.0)) continue;
      out.noalias() += r * c.mat.block(i * d, k * d, d, d);
    }
  return out;
}

ComplexMatrix apply_superop(const SuperOperator& s, const ComplexMatrix& rho) {
  const Index d = s.d;
  if (rho.rows() != d || rho.cols() != d)
    throw ShapeError("apply_superop: state dimension mismatch");
  return unvec(s.mat * vec(rho), d);
}

SuperOperator choi_to_superop(const ChoiMatrix& c) {
  return {c.d, reshuffle(c.mat, c.d)};
}

ChoiMatrix superop_to_choi(const SuperOperator& s) {
  return {s.d, reshuffle(s.mat, s.d)};
}

ChoiMatrix compose(const ChoiMatrix& after, const ChoiMatrix& before) {
  if (after.d != before.d)
    throw ShapeError("compose: channel dimensions differ");
  SuperOperator sa = choi_to_superop(after);
  SuperOperator sb = choi_to_superop(before);
  return superop_to_choi({after.d, sa.mat * sb.mat});
}

SuperOperator adjoint_superop(const SuperOperator& s) {
  return {s.d, s.mat.adjoint()};
}

ComplexMatrix trace_in(const ChoiMatrix& c) {
  return partial_trace(c.mat, {c.d, c.d}, {1});
}

ComplexMatrix trace_out(const ChoiMatrix& c) {
  return partial_trace(c.mat, {c.d, c.d}, {0});
}

CpCheck is_cp(const ChoiMatrix& c, double tol) {
  if (!is_hermitian(c.mat, tol))
    throw ValidationError("is_cp: Choi matrix is not hermitian within tolerance");
  const double min_eig = min_eigenvalue_hermitian(c.mat);
  return {min_eig >= -tol, min_eig};
}

}  // namespace qcbench
