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

#include "expmap/linmaps.hpp"

#include <cmath>
#include <utility>

namespace expmap {
namespace {

void require_square(const Matrix& x, const char* what) {
  if (x.rows() != x.cols()) throw DimensionError(std::string(what) + ": matrix not square");
}

void require_size(const Matrix& x, Index dim, const char* what) {
  if (x.rows() != dim || x.cols() != dim)
    throw DimensionError(std::string(what) + ": expected " + std::to_string(dim) + "x" + std::to_string(dim) +
                         ", got " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
}

void require_conjugator(const Matrix& m, Index dim, const char* which) {
  if (m.rows() != dim || m.cols() != dim)
    throw InvalidConjugator(std::string("conjugator ") + which + " must be " + std::to_string(dim) + "x" +
                            std::to_string(dim));
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Matrix>(m).singularValues();
  if (!(sv(sv.size() - 1) > tol::kConjugator * sv(0)))
    throw InvalidConjugator(std::string("conjugator ") + which + " is numerically singular");
}

}  // namespace

Matrix reduction_map(const Matrix& x) {
  require_square(x, "reduction_map");
  Matrix out = -x;
  out.diagonal().array() += x.trace();
  return out;
}

Matrix phi_blocks(int n, const Matrix& x) {
  const Index m = n;
  require_size(x, 2 * m, "phi");
  Matrix y(2 * m, 2 * m);
  y.setZero();
  y.topLeftCorner(m, m).diagonal().setConstant(x.bottomRightCorner(m, m).trace());
  y.bottomRightCorner(m, m).diagonal().setConstant(x.topLeftCorner(m, m).trace());
  y.topRightCorner(m, m) = -x.topRightCorner(m, m) - reduction_map(x.bottomLeftCorner(m, m));
  y.bottomLeftCorner(m, m) = -x.bottomLeftCorner(m, m) - reduction_map(x.topRightCorner(m, m));
  return y / static_cast<double>(n);
}

BlockMap::BlockMap(int n) : n_(n) {
  if (n < 2) throw DomainError("BlockMap: n must be >= 2, got " + std::to_string(n));
}

Matrix BlockMap::outer() const { return outer_ ? *outer_ : Matrix::Identity(dim(), dim()); }
Matrix BlockMap::inner() const { return inner_ ? *inner_ : Matrix::Identity(dim(), dim()); }

Matrix BlockMap::operator()(const Matrix& x) const {
  require_size(x, dim(), "phi");
  if (!conjugated()) return phi_blocks(n_, x);
  const Matrix& a = *outer_;
  const Matrix& b = *inner_;
  return a.adjoint() * phi_blocks(n_, b * x * b.adjoint()) * a;
}

Matrix BlockMap::apply_to_pure(const Vector& x) const {
  if (x.size() != dim()) throw DimensionError("apply_to_pure: vector length must be 2n");
  if (x.norm() == 0.0) throw DomainError("apply_to_pure: zero vector");
  const Vector v = conjugated() ? Vector(*inner_ * x) : x;

  const Index m = n_;
  const Vector p1 = v.head(m);
  const Vector p2 = v.tail(m);
  const cplx overlap = p1.dot(p2);  // <p1|p2>
  const Matrix off = -p1 * p2.adjoint() + p2 * p1.adjoint();

  Matrix y(2 * m, 2 * m);
  y.setZero();
  y.topLeftCorner(m, m).diagonal().setConstant(p2.squaredNorm());
  y.bottomRightCorner(m, m).diagonal().setConstant(p1.squaredNorm());
  y.topRightCorner(m, m) = off;
  y.topRightCorner(m, m).diagonal().array() -= overlap;
  y.bottomLeftCorner(m, m) = off.adjoint();
  y.bottomLeftCorner(m, m).diagonal().array() -= std::conj(overlap);
  y /= static_cast<double>(n_);

  if (!conjugated()) return y;
  return outer_->adjoint() * y * *outer_;
}

BlockMap BlockMap::conjugate(const Matrix& a, const Matrix& b) const {
  require_conjugator(a, dim(), "A");
  require_conjugator(b, dim(), "B");
  BlockMap out(n_);
  out.outer_ = outer_ ? Matrix(*outer_ * a) : a;
  out.inner_ = inner_ ? Matrix(*inner_ * b) : b;
  return out;
}

Matrix phi(const BlockMap& map, const Matrix& x) { return map(x); }

Matrix apply_to_pure(const BlockMap& map, const Vector& x) { return map.apply_to_pure(x); }

BlockMap conjugate_map(const BlockMap& map, const Matrix& a, const Matrix& b) { return map.conjugate(a, b); }

LinearMap::LinearMap(Index dim, Fn fn, std::string label) : dim_(dim), fn_(std::move(fn)), label_(std::move(label)) {
  if (dim < 1) throw DomainError("LinearMap: dimension must be positive");
}

LinearMap LinearMap::from(const BlockMap& map) {
  std::string label = "Phi_" + std::to_string(map.n());
  if (map.conjugated()) label += "^{A,B}";
  return LinearMap(map.dim(), [map](const Matrix& x) { return map(x); }, std::move(label));
}

LinearMap LinearMap::identity(Index dim) {
  return LinearMap(dim, [](const Matrix& x) { return x; }, "identity");
}

LinearMap LinearMap::depolarizing(Index dim) {
  return LinearMap(
      dim,
      [dim](const Matrix& x) -> Matrix {
        return Matrix::Identity(dim, dim) * (x.trace() / static_cast<double>(dim));
      },
      "depolarizing");
}

LinearMap LinearMap::trace_times_identity(Index dim, double weight) {
  return LinearMap(
      dim, [dim, weight](const Matrix& x) -> Matrix { return Matrix::Identity(dim, dim) * (weight * x.trace()); },
      "trace_times_identity");
}

Matrix LinearMap::operator()(const Matrix& x) const {
  require_size(x, dim_, label_.c_str());
  return fn_(x);
}

LinearMap LinearMap::minus(const LinearMap& other) const {
  if (other.dim() != dim_) throw DimensionError("LinearMap::minus: dimension mismatch");
  LinearMap lhs = *this;
  LinearMap rhs = other;
  return LinearMap(
      dim_, [lhs, rhs](const Matrix& x) -> Matrix { return lhs(x) - rhs(x); }, label_ + " - " + other.label_);
}

Matrix superoperator(const LinearMap& map) {
  const Index d = map.dim();
  Matrix s(d * d, d * d);
  Matrix unit = Matrix::Zero(d, d);
  for (Index col = 0; col < d; ++col) {
    for (Index row = 0; row < d; ++row) {
      unit(row, col) = 1.0;
      const Matrix image = map(unit);
      s.col(col * d + row) = image.reshaped();
      unit(row, col) = 0.0;
    }
  }
  return s;
}

Matrix apply_adjoint(const Matrix& superop, const Matrix& y) {
  const Index d = y.rows();
  if (y.cols() != d || superop.rows() != d * d || superop.cols() != d * d)
    throw DimensionError("apply_adjoint: shape mismatch");
  const Vector v = superop.adjoint() * y.reshaped();
  return v.reshaped(d, d);
}

Matrix maximally_entangled_projector(Index d) {
  Vector psi = Vector::Zero(d * d);
  for (Index i = 0; i < d; ++i) psi(i * d + i) = 1.0;
  psi /= std::sqrt(static_cast<double>(d));
  return psi * psi.adjoint();
}

Matrix choi_matrix(const LinearMap& map) {
  const Index d = map.dim();
  Matrix out(d * d, d * d);
  Matrix unit = Matrix::Zero(d, d);
  for (Index a = 0; a < d; ++a) {
    for (Index b = 0; b < d; ++b) {
      unit(a, b) = 1.0;
      out.block(a * d, b * d, d, d) = map(unit) / static_cast<double>(d);
      unit(a, b) = 0.0;
    }
  }
  return out;
}

Witness choi_witness(int n) { return choi_witness(BlockMap(n)); }

Witness choi_witness(const BlockMap& map) {
  return Witness{map.n(), choi_matrix(LinearMap::from(map))};
}

}  // namespace expmap
