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

#ifndef EXPMAP_LINMAPS_HPP
#define EXPMAP_LINMAPS_HPP

#include <functional>
#include <optional>
#include <string>

#include "expmap/types.hpp"

namespace expmap {

/// R_n(X) = I_n Tr X - X.
Matrix reduction_map(const Matrix& x);

/// The block map Phi_n on B(C^{2n}), optionally conjugated as
/// X -> A^dagger Phi_n(B X B^dagger) A.
///
/// Unconjugated, Phi_n acts blockwise on X = [[X11, X12], [X21, X22]]:
///
///     Y11 = I_n Tr X22          Y12 = -X12 - R_n(X21)
///     Y21 = -X21 - R_n(X12)     Y22 = I_n Tr X11
///
/// and returns Y / n. It is unital, trace preserving and positive. Values are
/// immutable; conjugate() returns a new map.
class BlockMap {
 public:
  /// Throws DomainError for n < 2 (R_1 vanishes identically).
  explicit BlockMap(int n);

  int n() const { return n_; }
  Index dim() const { return 2 * static_cast<Index>(n_); }

  bool conjugated() const { return outer_.has_value(); }
  /// A of the conjugation pair (identity when unconjugated).
  Matrix outer() const;
  /// B of the conjugation pair (identity when unconjugated).
  Matrix inner() const;

  Matrix operator()(const Matrix& x) const;
  Matrix apply_to_pure(const Vector& x) const;

  /// Composition: conjugating Phi^{A,B} by (A', B') yields Phi^{A A', B B'}.
  BlockMap conjugate(const Matrix& a, const Matrix& b) const;

 private:
  int n_;
  std::optional<Matrix> outer_;
  std::optional<Matrix> inner_;
};

/// Unconjugated Phi_n applied to a 2n x 2n matrix; the defining block formula.
Matrix phi_blocks(int n, const Matrix& x);

Matrix phi(const BlockMap& map, const Matrix& x);

/// phi(map, |x><x|) via the closed form for rank-one inputs:
/// with x = p1 (+) p2, n Phi_n(|x><x|) has diagonal blocks ||p2||^2 I, ||p1||^2 I
/// and off-diagonal block -|p1><p2| + |p2><p1| - <p1|p2> I (and its adjoint).
/// Throws DomainError for the zero vector.
Matrix apply_to_pure(const BlockMap& map, const Vector& x);

/// Throws InvalidConjugator if A or B is not 2n x 2n or has
/// sigma_min <= 1e-10 sigma_max.
BlockMap conjugate_map(const BlockMap& map, const Matrix& a, const Matrix& b);

/// Type-erased linear map B(C^d) -> B(C^d). Used wherever an operation must
/// accept control maps besides Phi_n (identity, depolarizing, perturbations).
class LinearMap {
 public:
  using Fn = std::function<Matrix(const Matrix&)>;

  LinearMap(Index dim, Fn fn, std::string label = "map");

  static LinearMap from(const BlockMap& map);
  static LinearMap identity(Index dim);
  /// X -> I Tr X / dim
  static LinearMap depolarizing(Index dim);
  /// X -> weight * I Tr X
  static LinearMap trace_times_identity(Index dim, double weight);

  Index dim() const { return dim_; }
  const std::string& label() const { return label_; }
  Matrix operator()(const Matrix& x) const;

  /// this - other
  LinearMap minus(const LinearMap& other) const;

 private:
  Index dim_;
  Fn fn_;
  std::string label_;
};

/// d^2 x d^2 matrix S with S vec(X) = vec(map(X)), column-major vec.
Matrix superoperator(const LinearMap& map);

/// Hilbert-Schmidt adjoint applied through a precomputed superoperator.
Matrix apply_adjoint(const Matrix& superop, const Matrix& y);

/// Projector onto (1/sqrt(d)) sum_i |ii>, trace one.
Matrix maximally_entangled_projector(Index d);

/// (1 (x) map) applied to the maximally entangled projector on C^d (x) C^d.
/// The untouched factor is the first one: block (a, b) of the result is
/// map(|a><b|) / d.
Matrix choi_matrix(const LinearMap& map);

struct Witness {
  int n;
  Matrix matrix;  // (2n)^2 x (2n)^2, Hermitian, unit trace
};

/// W_n = (1 (x) Phi_n) P+ with P+ normalised to unit trace.
Witness choi_witness(int n);
Witness choi_witness(const BlockMap& map);

}  // namespace expmap

#endif  // EXPMAP_LINMAPS_HPP
