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

#ifndef EXPMAP_KERNEL_SPAN_HPP
#define EXPMAP_KERNEL_SPAN_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "expmap/linmaps.hpp"
#include "expmap/tensor_subspaces.hpp"
#include "expmap/types.hpp"

namespace expmap {

enum class KernelFamily { Parallel, Orthogonal, Generic };

std::string_view family_name(KernelFamily family);

/// (x, y) with Phi(|x><x|) y = 0; both unit vectors of C^{2n}.
struct KernelPair {
  Vector x;
  Vector y;
  KernelFamily family;
  double residual;  // ||Phi(|x><x|) y||
};

double kernel_residual(const LinearMap& map, const Vector& x, const Vector& y);
double kernel_residual(const BlockMap& map, const Vector& x, const Vector& y);

/// x = sigma (x) varphi. Returns n pairs: y = sigma (x) varphi, and
/// y = conj(sigma) (x) varphi_perp_m for an orthonormal basis of the
/// complement of varphi. Throws DomainError unless both inputs have unit norm
/// (within 1e-10) and sigma has length 2.
std::vector<KernelPair> kernel_parallel(const Vector& sigma, const Vector& varphi);

/// x = x_part (+) y_part with <x_part|y_part> = 0 and
///   y ~ [z1 |x|^2 x + z2 |x|^2 y,  z1 |x|^2 y - z2 |y|^2 x]
/// with the norm weights taken from the unnormalised parts.
/// Throws PreconditionError for non-orthogonal parts and DomainError for a
/// zero x_part or (z1, z2) = (0, 0).
KernelPair kernel_orthogonal(const Vector& x_part, const Vector& y_part, cplx z1, cplx z2);

/// Numerical kernel of map(|x><x|): eigenvectors with eigenvalue <= tol * lambda_max.
std::vector<KernelPair> kernel_generic(const LinearMap& map, const Vector& x, double eigen_tol = tol::kKernelEigen);

/// conj(x) (x) x (x) y; entry (a, b, c) = conj(x_a) x_b y_c.
TensorVector span_vector(const Vector& x, const Vector& y);

/// x (x) y
Vector pair_vector(const Vector& x, const Vector& y);

/// max |<a_i|b_j>| over all pairs, with each operand normalised to unit length.
double max_abs_overlap(std::span<const TensorVector> a, std::span<const TensorVector> b);

// ---------------------------------------------------------------------------
// Numeric rank

struct RankPolicy {
  double relative = tol::kRankRelative;  // tol = relative * max_sv * max(m, ambient)
  std::optional<double> absolute;        // overrides the relative rule when set
};

/// Numerically realised span. `basis_rows` has the same row space and the same
/// singular values as the stacked input vectors but at most `ambient` rows.
struct SpanSet {
  Matrix basis_rows;
  std::vector<double> singular_values;  // nonincreasing
  double tolerance = 0.0;
  Index rank = 0;
  Index count = 0;    // number of input vectors
  Index ambient = 0;  // length of each vector
};

/// Streams vectors into a row-compressed factor: rows are buffered and folded
/// into an upper-triangular R by Householder QR whenever the buffer fills, so
/// memory stays O(ambient^2) however many vectors are added. Adding vectors
/// never lowers the rank.
class SpanAccumulator {
 public:
  explicit SpanAccumulator(Index ambient, Index buffer_rows = 0);

  void add(std::span<const cplx> v);
  void add(const Vector& v) { add(std::span<const cplx>(v.data(), static_cast<std::size_t>(v.size()))); }
  void add(const TensorVector& v) { add(v.entries()); }
  void merge(const SpanAccumulator& other);

  Index count() const { return count_; }
  Index ambient() const { return ambient_; }
  SpanSet finish(const RankPolicy& policy = {}) const;

 private:
  void compress();
  Matrix stacked() const;

  Index ambient_;
  Index capacity_;
  Matrix factor_;
  Matrix buffer_;
  Index buffered_ = 0;
  Index count_ = 0;
};

/// Throws DomainError for an empty list, DimensionError for unequal lengths.
SpanSet numeric_rank(std::span<const TensorVector> vectors, const RankPolicy& policy = {});
SpanSet numeric_rank(std::span<const Vector> vectors, const RankPolicy& policy = {});

// ---------------------------------------------------------------------------
// Sampling

/// Real and imaginary parts standard normal, then normalised. Item i of a
/// family draws from its own engine seeded by derive_seed(seed, family, i).
std::vector<KernelPair> sample_parallel(int n, Index samples, std::uint64_t seed);
std::vector<KernelPair> sample_orthogonal(int n, Index samples, std::uint64_t seed);
std::vector<KernelPair> sample_generic(const LinearMap& map, Index samples, std::uint64_t seed,
                                       double eigen_tol = tol::kKernelEigen);

/// Numeric dims of N (span of conj(x) x y) and P (span of x y) from generic
/// kernel sampling of an arbitrary map.
struct KernelSpans {
  SpanSet strong;  // N_Phi
  SpanSet weak;    // P_Phi
};
KernelSpans measure_kernel_spans(const LinearMap& map, Index samples, std::uint64_t seed,
                                 double eigen_tol = tol::kKernelEigen, const RankPolicy& policy = {});

// ---------------------------------------------------------------------------
// Dimension report

enum class Verdict { Match, Inconclusive, Mismatch };
enum class Bound { Exact, AtLeast };

std::string_view verdict_name(Verdict verdict);

/// Sampled quantities that fall short are inconclusive (under-sampling);
/// anything exceeding an exact target, and any shortfall of a deterministic
/// quantity, is a mismatch.
Verdict judge(Index measured, Index target, Bound bound, bool sampled);

struct DimItem {
  std::string name;
  Index measured;
  Index target;
  Bound bound;
  bool sampled;
  Verdict verdict;
};

struct DimReport {
  int n = 0;
  std::uint64_t seed = 0;
  Index samples = 0;
  std::vector<DimItem> items;

  /// Throws DomainError for an unknown name.
  const DimItem& item(std::string_view name) const;
};

struct DimOptions {
  double eigen_tol = tol::kKernelEigen;
  RankPolicy rank;
};

/// 4 (2n)^3
Index default_samples(int n);

/// Measured ranks of W (parallel family), V (orthogonal family), N_Phi
/// (W, V and generic samples together), P_Phi, W + V, the two perp bases and
/// their sum, each against its closed form.
DimReport dim_report(int n, Index samples, std::uint64_t seed, const DimOptions& options = {});

nlohmann::json to_json(const DimReport& report);

}  // namespace expmap

#endif  // EXPMAP_KERNEL_SPAN_HPP
