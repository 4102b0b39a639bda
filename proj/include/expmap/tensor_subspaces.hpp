// Copyright 2026 The expmap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EXPMAP_TENSOR_SUBSPACES_HPP
#define EXPMAP_TENSOR_SUBSPACES_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "expmap/types.hpp"

namespace expmap {

/// Order-3 tensor over C^D stored flat, entry (a, b, c) at a*D^2 + b*D + c.
class TensorVector {
 public:
  static constexpr int kOrder = 3;

  explicit TensorVector(Index dim_factor);
  /// Throws DimensionError unless entries.size() == dim_factor^3.
  TensorVector(Index dim_factor, Vector entries);

  static TensorVector basis(Index dim_factor, Index a, Index b, Index c);
  /// u (x) v (x) w
  static TensorVector product(const Vector& u, const Vector& v, const Vector& w);

  Index dim_factor() const { return dim_; }
  Index size() const { return entries_.size(); }
  Index flat_index(Index a, Index b, Index c) const { return (a * dim_ + b) * dim_ + c; }

  cplx operator()(Index a, Index b, Index c) const { return entries_(flat_index(a, b, c)); }
  cplx& operator()(Index a, Index b, Index c) { return entries_(flat_index(a, b, c)); }

  const Vector& entries() const { return entries_; }
  Vector& entries() { return entries_; }

  TensorVector& operator+=(const TensorVector& other);
  TensorVector& operator-=(const TensorVector& other);
  friend TensorVector operator+(TensorVector lhs, const TensorVector& rhs) { return lhs += rhs; }
  friend TensorVector operator-(TensorVector lhs, const TensorVector& rhs) { return lhs -= rhs; }

 private:
  Index dim_;
  Vector entries_;
};

enum class SubspaceLabel { S123, S23, A23, T13, I13 };

std::string_view label_name(SubspaceLabel label);
/// Throws DomainError for an unknown label.
SubspaceLabel parse_label(std::string_view text);

/// A named subspace of (C^n)^{(x)3}:
///   S123  fully symmetric
///   S23   Psi_ijk =  Psi_ikj
///   A23   Psi_ijk = -Psi_ikj
///   T13   sum_i Psi_iji = 0 for every j
///   I13   Psi_ijk = lambda_j delta_ik
struct SubspaceSpec {
  SubspaceLabel label;
  int n;

  /// n(n+1)(n+2)/6, n^2(n+1)/2, n^2(n-1)/2, n(n^2-1), n respectively.
  Index expected_dim() const;
};

/// Orthogonal projector (n^3 x n^3) onto the subspace. Throws DomainError for n < 1.
Matrix subspace_projector(const SubspaceSpec& spec);

struct StDecomposition {
  TensorVector symmetric;  // in S123, supported on the diagonal i = j = k
  TensorVector traceless;  // in T13
};

/// Splits psi = A + B with A_iii = sum_m psi_mim (zero off the diagonal) and
/// B = psi - A. The split is one explicit choice; it is not unique.
StDecomposition decompose_st(const TensorVector& psi);

/// Basis {f_k} of (C^2)^{(x)3} and the dual family {f*_k}, unnormalised duals
/// exactly as listed. Qubit string |abc> lives at flat index 4a + 2b + c.
/// Only biorthogonality <f*_k|f_l> = 0 (k != l) is promised.
struct FBasis {
  std::array<TensorVector, 8> f;
  std::array<TensorVector, 8> dual;
};

FBasis f_basis();

/// Reorders (C^2)^{(x)3} (x) (C^n)^{(x)3} into (C^{2n})^{(x)3}: the qubit
/// triple (a, b, c) and qudit triple (i, j, k) land at block indices
/// (a n + i, b n + j, c n + k).
TensorVector merge_factors(const TensorVector& qubits, const TensorVector& qudits);

/// Basis of W^perp in (C^{2n})^{(x)3}: u_ijk and v_ijk for every i and j < k,
/// followed by r_i and s_i. n^2(n-1) + 2n vectors. Throws DomainError for n < 2.
std::vector<TensorVector> w_perp_basis(int n);

/// Basis of V^perp: a_ijk and b_ijk (every i, j < k), then c1..c4 and d1, d2
/// per k. n^3 - n^2 + 6n vectors. Throws DomainError for n < 2.
std::vector<TensorVector> v_perp_basis(int n);

}  // namespace expmap

#endif  // EXPMAP_TENSOR_SUBSPACES_HPP
