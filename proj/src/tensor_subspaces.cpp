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

#include "expmap/tensor_subspaces.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace expmap {
namespace {

void require_n(int n, int minimum, const char* what) {
  if (n < minimum)
    throw DomainError(std::string(what) + ": n must be >= " + std::to_string(minimum) + ", got " + std::to_string(n));
}

Index cube(Index d) { return d * d * d; }

/// Matrix of Psi -> Psi' with Psi'_{t0 t1 t2} = Psi_{t[perm[0]] t[perm[1]] t[perm[2]]}.
Matrix index_permutation(Index n, const std::array<int, 3>& perm) {
  const Index size = cube(n);
  Matrix p = Matrix::Zero(size, size);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const std::array<Index, 3> t{i, j, k};
        const Index dst = (i * n + j) * n + k;
        const Index src = (t[perm[0]] * n + t[perm[1]]) * n + t[perm[2]];
        p(dst, src) = 1.0;
      }
  return p;
}

Matrix i13_projector(Index n) {
  const Index size = cube(n);
  Matrix p = Matrix::Zero(size, size);
  for (Index j = 0; j < n; ++j) {
    Vector t = Vector::Zero(size);
    for (Index i = 0; i < n; ++i) t((i * n + j) * n + i) = 1.0;
    p += t * t.adjoint() / static_cast<double>(n);
  }
  return p;
}

TensorVector make(Index d, std::initializer_list<std::pair<Index, double>> terms, double scale) {
  TensorVector v(d);
  for (const auto& [index, coeff] : terms) v.entries()(index) += coeff * scale;
  return v;
}

}  // namespace

TensorVector::TensorVector(Index dim_factor) : dim_(dim_factor), entries_(Vector::Zero(cube(dim_factor))) {
  if (dim_factor < 1) throw DimensionError("TensorVector: dimension must be positive");
}

TensorVector::TensorVector(Index dim_factor, Vector entries) : dim_(dim_factor), entries_(std::move(entries)) {
  if (dim_factor < 1 || entries_.size() != cube(dim_factor))
    throw DimensionError("TensorVector: length must be D^3 for D = " + std::to_string(dim_factor));
}

TensorVector TensorVector::basis(Index dim_factor, Index a, Index b, Index c) {
  TensorVector v(dim_factor);
  v(a, b, c) = 1.0;
  return v;
}

TensorVector TensorVector::product(const Vector& u, const Vector& v, const Vector& w) {
  if (u.size() != v.size() || v.size() != w.size()) throw DimensionError("TensorVector::product: factor lengths differ");
  return TensorVector(u.size(), kron(kron(u, v), w));
}

TensorVector& TensorVector::operator+=(const TensorVector& other) {
  if (other.dim_ != dim_) throw DimensionError("TensorVector: dimension mismatch");
  entries_ += other.entries_;
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& other) {
  if (other.dim_ != dim_) throw DimensionError("TensorVector: dimension mismatch");
  entries_ -= other.entries_;
  return *this;
}

std::string_view label_name(SubspaceLabel label) {
  switch (label) {
    case SubspaceLabel::S123:
      return "S123";
    case SubspaceLabel::S23:
      return "S23";
    case SubspaceLabel::A23:
      return "A23";
    case SubspaceLabel::T13:
      return "T13";
    case SubspaceLabel::I13:
      return "I13";
  }
  return "?";
}

SubspaceLabel parse_label(std::string_view text) {
  for (auto label : {SubspaceLabel::S123, SubspaceLabel::S23, SubspaceLabel::A23, SubspaceLabel::T13,
                     SubspaceLabel::I13})
    if (label_name(label) == text) return label;
  throw DomainError("unknown subspace label: " + std::string(text));
}

Index SubspaceSpec::expected_dim() const {
  const Index m = n;
  switch (label) {
    case SubspaceLabel::S123:
      return m * (m + 1) * (m + 2) / 6;
    case SubspaceLabel::S23:
      return m * m * (m + 1) / 2;
    case SubspaceLabel::A23:
      return m * m * (m - 1) / 2;
    case SubspaceLabel::T13:
      return m * (m * m - 1);
    case SubspaceLabel::I13:
      return m;
  }
  throw DomainError("unknown subspace label");
}

Matrix subspace_projector(const SubspaceSpec& spec) {
  require_n(spec.n, 1, "subspace_projector");
  const Index n = spec.n;
  const Matrix id = Matrix::Identity(cube(n), cube(n));
  switch (spec.label) {
    case SubspaceLabel::S123: {
      std::array<int, 3> perm{0, 1, 2};
      Matrix sum = Matrix::Zero(cube(n), cube(n));
      do {
        sum += index_permutation(n, perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
      return sum / 6.0;
    }
    case SubspaceLabel::S23:
      return (id + index_permutation(n, {0, 2, 1})) * 0.5;
    case SubspaceLabel::A23:
      return (id - index_permutation(n, {0, 2, 1})) * 0.5;
    case SubspaceLabel::T13:
      // T13 is the orthogonal complement of I13: both are cut out by the
      // functionals Psi -> sum_i Psi_iji.
      return id - i13_projector(n);
    case SubspaceLabel::I13:
      return i13_projector(n);
  }
  throw DomainError("unknown subspace label");
}

StDecomposition decompose_st(const TensorVector& psi) {
  const Index n = psi.dim_factor();
  TensorVector a(n);
  for (Index i = 0; i < n; ++i) {
    cplx trace = 0.0;
    for (Index m = 0; m < n; ++m) trace += psi(m, i, m);
    a(i, i, i) = trace;
  }
  TensorVector b = psi - a;
  return {std::move(a), std::move(b)};
}

FBasis f_basis() {
  // |abc> -> 4a + 2b + c
  constexpr Index k000 = 0, k001 = 1, k010 = 2, k011 = 3, k100 = 4, k101 = 5, k110 = 6, k111 = 7;
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  const double r6 = 1.0 / std::sqrt(6.0);
  return FBasis{
      {make(2, {{k000, 1.0}}, 1.0),
       make(2, {{k111, 1.0}}, 1.0),
       make(2, {{k001, 1.0}, {k100, 1.0}, {k010, 1.0}}, r3),
       make(2, {{k110, 1.0}, {k011, 1.0}, {k101, 1.0}}, r3),
       make(2, {{k010, 1.0}, {k001, 1.0}, {k100, -2.0}}, r6),
       make(2, {{k101, 1.0}, {k110, 1.0}, {k011, -2.0}}, r6),
       make(2, {{k001, 1.0}, {k100, 1.0}, {k010, -2.0}}, r6),
       make(2, {{k110, 1.0}, {k011, 1.0}, {k101, -2.0}}, r6)},
      {make(2, {{k000, 1.0}}, 1.0),
       make(2, {{k111, 1.0}}, 1.0),
       make(2, {{k001, 1.0}, {k100, 1.0}, {k010, 1.0}}, r3),
       make(2, {{k110, 1.0}, {k011, 1.0}, {k101, 1.0}}, r3),
       make(2, {{k001, 1.0}, {k100, -1.0}}, r2),
       make(2, {{k110, 1.0}, {k011, -1.0}}, r2),
       make(2, {{k010, 1.0}, {k001, -1.0}}, r2),
       make(2, {{k101, 1.0}, {k110, -1.0}}, r2)}};
}

TensorVector merge_factors(const TensorVector& qubits, const TensorVector& qudits) {
  if (qubits.dim_factor() != 2) throw DimensionError("merge_factors: first argument must live in (C^2)^3");
  const Index n = qudits.dim_factor();
  TensorVector out(2 * n);
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b)
      for (Index c = 0; c < 2; ++c) {
        const cplx q = qubits(a, b, c);
        if (q == cplx(0.0)) continue;
        for (Index i = 0; i < n; ++i)
          for (Index j = 0; j < n; ++j)
            for (Index k = 0; k < n; ++k)
              out(block_index(n, a, i), block_index(n, b, j), block_index(n, c, k)) += q * qudits(i, j, k);
      }
  return out;
}

// Indices i, j, k run over 0..n-1. "e_i (+) 0" is block 0 and "0 (+) e_i" is
// block 1 of C^{2n}.

std::vector<TensorVector> w_perp_basis(int n) {
  require_n(n, 2, "w_perp_basis");
  const Index m = n;
  const Index d = 2 * m;
  auto g = [m](Index block, Index i) { return block_index(m, block, i); };
  auto add = [](TensorVector& v, Index a, Index b, Index c, double coeff) { v(a, b, c) += coeff; };

  std::vector<TensorVector> out;
  out.reserve(static_cast<std::size_t>(m * m * (m - 1) + 2 * m));
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index k = j + 1; k < m; ++k) {
        TensorVector u(d);
        add(u, g(0, i), g(0, j), g(1, k), 1.0);
        add(u, g(0, i), g(0, k), g(1, j), -1.0);
        add(u, g(1, i), g(0, j), g(0, k), -1.0);
        add(u, g(1, i), g(0, k), g(0, j), 1.0);
        out.push_back(std::move(u));
      }
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index k = j + 1; k < m; ++k) {
        TensorVector v(d);
        add(v, g(1, i), g(1, j), g(0, k), 1.0);
        add(v, g(1, i), g(1, k), g(0, j), -1.0);
        add(v, g(0, i), g(1, j), g(1, k), -1.0);
        add(v, g(0, i), g(1, k), g(1, j), 1.0);
        out.push_back(std::move(v));
      }
  for (Index i = 0; i < m; ++i) {
    TensorVector r(d);
    for (Index j = 0; j < m; ++j) {
      add(r, g(0, j), g(1, i), g(0, j), 1.0);
      add(r, g(0, j), g(0, i), g(1, j), -1.0);
    }
    out.push_back(std::move(r));
  }
  for (Index i = 0; i < m; ++i) {
    TensorVector s(d);
    for (Index j = 0; j < m; ++j) {
      add(s, g(1, j), g(0, i), g(1, j), 1.0);
      add(s, g(1, j), g(1, i), g(0, j), -1.0);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<TensorVector> v_perp_basis(int n) {
  require_n(n, 2, "v_perp_basis");
  const Index m = n;
  const Index d = 2 * m;
  // e^{(1)} is block 0, e^{(2)} is block 1.
  auto g = [m](Index superscript, Index i) { return block_index(m, superscript - 1, i); };
  auto add = [](TensorVector& v, Index a, Index b, Index c, double coeff) { v(a, b, c) += coeff; };

  std::vector<TensorVector> out;
  out.reserve(static_cast<std::size_t>(m * m * m - m * m + 6 * m));

  // a_ijk (first factor e^{(1)}) and b_ijk (first factor e^{(2)}):
  // e_i (x) [e1_j e2_k - e1_k e2_j + e2_j e1_k - e2_k e1_j]
  for (Index first : {1, 2})
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < m; ++j)
        for (Index k = j + 1; k < m; ++k) {
          TensorVector v(d);
          add(v, g(first, i), g(1, j), g(2, k), 1.0);
          add(v, g(first, i), g(1, k), g(2, j), -1.0);
          add(v, g(first, i), g(2, j), g(1, k), 1.0);
          add(v, g(first, i), g(2, k), g(1, j), -1.0);
          out.push_back(std::move(v));
        }

  // c^{(1..4)}_k = sum_j e^{(p)}_j e^{(q)}_j e^{(r)}_k
  constexpr std::array<std::array<Index, 3>, 4> c_pattern{{{1, 2, 1}, {2, 1, 1}, {1, 2, 2}, {2, 1, 2}}};
  for (const auto& pattern : c_pattern)
    for (Index k = 0; k < m; ++k) {
      TensorVector v(d);
      for (Index j = 0; j < m; ++j) add(v, g(pattern[0], j), g(pattern[1], j), g(pattern[2], k), 1.0);
      out.push_back(std::move(v));
    }

  // d^{(1)}_k, d^{(2)}_k = sum_j (e2_j e^{(s)}_k e1_j + e1_j e^{(s)}_k e2_j), s = 1, 2
  for (Index middle : {1, 2})
    for (Index k = 0; k < m; ++k) {
      TensorVector v(d);
      for (Index j = 0; j < m; ++j) {
        add(v, g(2, j), g(middle, k), g(1, j), 1.0);
        add(v, g(1, j), g(middle, k), g(2, j), 1.0);
      }
      out.push_back(std::move(v));
    }
  return out;
}

}  // namespace expmap
