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

#include "expmap/kernel_span.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "expmap/random.hpp"
#include "expmap/simd.hpp"

namespace expmap {
namespace {

enum Stream : std::uint64_t { kParallelStream = 1, kOrthogonalStream = 2, kGenericStream = 3 };

std::span<const cplx> as_span(const Vector& v) { return {v.data(), static_cast<std::size_t>(v.size())}; }

void require_unit(const Vector& v, const char* what) {
  if (std::abs(v.norm() - 1.0) > tol::kUnitNorm) throw DomainError(std::string(what) + " must have unit norm");
}

KernelPair checked_pair(const BlockMap& map, Vector x, Vector y, KernelFamily family) {
  const double residual = kernel_residual(map, x, y);
  if (!(residual <= tol::kKernelResidual))
    throw Error("kernel construction residual " + std::to_string(residual) + " exceeds tolerance");
  return KernelPair{std::move(x), std::move(y), family, residual};
}

}  // namespace

std::string_view family_name(KernelFamily family) {
  switch (family) {
    case KernelFamily::Parallel:
      return "parallel";
    case KernelFamily::Orthogonal:
      return "orthogonal";
    case KernelFamily::Generic:
      return "generic";
  }
  return "?";
}

double kernel_residual(const LinearMap& map, const Vector& x, const Vector& y) {
  return (map(x * x.adjoint()) * y).norm();
}

double kernel_residual(const BlockMap& map, const Vector& x, const Vector& y) {
  return (map.apply_to_pure(x) * y).norm();
}

std::vector<KernelPair> kernel_parallel(const Vector& sigma, const Vector& varphi) {
  if (sigma.size() != 2) throw DimensionError("kernel_parallel: sigma must lie in C^2");
  require_unit(sigma, "kernel_parallel: sigma");
  require_unit(varphi, "kernel_parallel: varphi");
  const BlockMap map(static_cast<int>(varphi.size()));
  const Index n = varphi.size();

  // Columns 1..n-1 of Q span the orthogonal complement of varphi.
  const Eigen::HouseholderQR<Matrix> qr{Matrix(varphi)};
  const Matrix q = qr.householderQ();

  const Vector x = kron(sigma, varphi);
  const Vector sigma_bar = sigma.conjugate();
  std::vector<KernelPair> out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back(checked_pair(map, x, x, KernelFamily::Parallel));
  for (Index m = 1; m < n; ++m) out.push_back(checked_pair(map, x, kron(sigma_bar, Vector(q.col(m))), KernelFamily::Parallel));
  return out;
}

KernelPair kernel_orthogonal(const Vector& x_part, const Vector& y_part, cplx z1, cplx z2) {
  if (x_part.size() != y_part.size()) throw DimensionError("kernel_orthogonal: parts differ in length");
  const double nx2 = x_part.squaredNorm();
  const double ny2 = y_part.squaredNorm();
  if (nx2 == 0.0) throw DomainError("kernel_orthogonal: x_part must be nonzero");
  if (z1 == cplx(0.0) && z2 == cplx(0.0)) throw DomainError("kernel_orthogonal: (z1, z2) must not both vanish");
  if (std::abs(x_part.dot(y_part)) > tol::kOrthogonalParts * std::max(1.0, std::sqrt(nx2 * ny2)))
    throw PreconditionError("kernel_orthogonal: parts are not orthogonal");

  const Vector z = z1 * nx2 * x_part + z2 * nx2 * y_part;
  const Vector z_prime = z1 * nx2 * y_part - z2 * ny2 * x_part;
  Vector y = direct_sum(z, z_prime);
  const double ny = y.norm();
  if (ny == 0.0) throw DomainError("kernel_orthogonal: kernel vector vanishes for these parts");
  Vector x = direct_sum(x_part, y_part);
  x /= x.norm();
  y /= ny;
  return checked_pair(BlockMap(static_cast<int>(x_part.size())), std::move(x), std::move(y), KernelFamily::Orthogonal);
}

std::vector<KernelPair> kernel_generic(const LinearMap& map, const Vector& x, double eigen_tol) {
  if (x.size() != map.dim()) throw DimensionError("kernel_generic: vector length does not match map");
  const double norm = x.norm();
  if (norm == 0.0) throw DomainError("kernel_generic: zero vector");
  const Vector unit = x / norm;
  const Matrix image = map(unit * unit.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es((image + image.adjoint()) * 0.5);
  const Eigen::VectorXd& values = es.eigenvalues();
  const double scale = values.cwiseAbs().maxCoeff();

  std::vector<KernelPair> out;
  for (Index i = 0; i < values.size(); ++i) {
    if (std::abs(values(i)) > eigen_tol * scale) continue;
    Vector y = es.eigenvectors().col(i);
    const double residual = (image * y).norm();
    out.push_back(KernelPair{unit, std::move(y), KernelFamily::Generic, residual});
  }
  return out;
}

TensorVector span_vector(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DimensionError("span_vector: x and y differ in length");
  const Index d = x.size();
  TensorVector out(d);
  const auto& kernels = simd::active();
  const auto len = static_cast<std::size_t>(d);
  for (Index a = 0; a < d; ++a) {
    const cplx xa_bar = std::conj(x(a));
    for (Index b = 0; b < d; ++b)
      kernels.scale(xa_bar * x(b), y.data(), out.entries().data() + (a * d + b) * d, len);
  }
  return out;
}

Vector pair_vector(const Vector& x, const Vector& y) { return kron(x, y); }

double max_abs_overlap(std::span<const TensorVector> a, std::span<const TensorVector> b) {
  std::vector<double> norm_b(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) norm_b[j] = std::sqrt(simd::norm_sq(as_span(b[j].entries())));
  double worst = 0.0;
  for (const auto& u : a) {
    const double norm_u = std::sqrt(simd::norm_sq(as_span(u.entries())));
    if (norm_u == 0.0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (norm_b[j] == 0.0) continue;
      const double overlap = std::abs(simd::conj_dot(as_span(u.entries()), as_span(b[j].entries())));
      worst = std::max(worst, overlap / (norm_u * norm_b[j]));
    }
  }
  return worst;
}

// --- SpanAccumulator --------------------------------------------------------

SpanAccumulator::SpanAccumulator(Index ambient, Index buffer_rows)
    : ambient_(ambient), capacity_(buffer_rows > 0 ? buffer_rows : std::max<Index>(4 * ambient, 16)) {
  if (ambient < 1) throw DimensionError("SpanAccumulator: ambient dimension must be positive");
  factor_.resize(0, ambient_);
  buffer_.resize(capacity_, ambient_);
}

void SpanAccumulator::add(std::span<const cplx> v) {
  if (static_cast<Index>(v.size()) != ambient_) throw DimensionError("SpanAccumulator: vector length mismatch");
  for (Index j = 0; j < ambient_; ++j) buffer_(buffered_, j) = v[static_cast<std::size_t>(j)];
  ++buffered_;
  ++count_;
  if (buffered_ == capacity_) compress();
}

Matrix SpanAccumulator::stacked() const {
  Matrix all(factor_.rows() + buffered_, ambient_);
  all.topRows(factor_.rows()) = factor_;
  all.bottomRows(buffered_) = buffer_.topRows(buffered_);
  return all;
}

namespace {

// R factor of a tall matrix: same row space and singular values, <= cols rows.
Matrix compress_rows(Matrix rows) {
  if (rows.rows() <= rows.cols()) return rows;
  Eigen::HouseholderQR<Eigen::Ref<Matrix>> qr(rows);
  const Index k = rows.cols();
  return rows.topRows(k).triangularView<Eigen::Upper>();
}

}  // namespace

void SpanAccumulator::compress() {
  factor_ = compress_rows(stacked());
  buffered_ = 0;
}

void SpanAccumulator::merge(const SpanAccumulator& other) {
  if (other.ambient_ != ambient_) throw DimensionError("SpanAccumulator::merge: ambient mismatch");
  Matrix all(factor_.rows() + buffered_ + other.factor_.rows() + other.buffered_, ambient_);
  all << stacked(), other.stacked();
  factor_ = compress_rows(std::move(all));
  buffered_ = 0;
  count_ += other.count_;
}

SpanSet SpanAccumulator::finish(const RankPolicy& policy) const {
  SpanSet out;
  out.ambient = ambient_;
  out.count = count_;
  out.basis_rows = compress_rows(stacked());
  if (out.basis_rows.rows() == 0) return out;

  Eigen::BDCSVD<Matrix> svd(out.basis_rows);
  const Eigen::VectorXd& sv = svd.singularValues();
  out.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double max_sv = out.singular_values.empty() ? 0.0 : out.singular_values.front();
  out.tolerance = policy.absolute ? *policy.absolute
                                  : policy.relative * max_sv * static_cast<double>(std::max(count_, ambient_));
  out.rank = static_cast<Index>(
      std::count_if(out.singular_values.begin(), out.singular_values.end(), [&](double s) { return s > out.tolerance; }));
  return out;
}

SpanSet numeric_rank(std::span<const TensorVector> vectors, const RankPolicy& policy) {
  if (vectors.empty()) throw DomainError("numeric_rank: empty vector list");
  SpanAccumulator acc(vectors.front().size());
  for (const auto& v : vectors) acc.add(v);
  return acc.finish(policy);
}

SpanSet numeric_rank(std::span<const Vector> vectors, const RankPolicy& policy) {
  if (vectors.empty()) throw DomainError("numeric_rank: empty vector list");
  SpanAccumulator acc(vectors.front().size());
  for (const auto& v : vectors) acc.add(v);
  return acc.finish(policy);
}

// --- Sampling ---------------------------------------------------------------

std::vector<KernelPair> sample_parallel(int n, Index samples, std::uint64_t seed) {
  std::vector<KernelPair> out;
  out.reserve(static_cast<std::size_t>(samples * n));
  for (Index i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, kParallelStream, static_cast<std::uint64_t>(i)));
    const Vector sigma = rng.unit(2);
    const Vector varphi = rng.unit(n);
    for (auto& pair : kernel_parallel(sigma, varphi)) out.push_back(std::move(pair));
  }
  return out;
}

std::vector<KernelPair> sample_orthogonal(int n, Index samples, std::uint64_t seed) {
  std::vector<KernelPair> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (Index i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, kOrthogonalStream, static_cast<std::uint64_t>(i)));
    const Vector x_part = rng.gaussian(n);
    Vector y_part = rng.gaussian(n);
    y_part -= (x_part.dot(y_part) / x_part.squaredNorm()) * x_part;
    const cplx z1 = rng.complex_normal();
    const cplx z2 = rng.complex_normal();
    out.push_back(kernel_orthogonal(x_part, y_part, z1, z2));
  }
  return out;
}

std::vector<KernelPair> sample_generic(const LinearMap& map, Index samples, std::uint64_t seed, double eigen_tol) {
  std::vector<KernelPair> out;
  for (Index i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, kGenericStream, static_cast<std::uint64_t>(i)));
    for (auto& pair : kernel_generic(map, rng.unit(map.dim()), eigen_tol)) out.push_back(std::move(pair));
  }
  return out;
}

KernelSpans measure_kernel_spans(const LinearMap& map, Index samples, std::uint64_t seed, double eigen_tol,
                                 const RankPolicy& policy) {
  const Index d = map.dim();
  SpanAccumulator strong(d * d * d);
  SpanAccumulator weak(d * d);
  for (const auto& pair : sample_generic(map, samples, seed, eigen_tol)) {
    strong.add(span_vector(pair.x, pair.y));
    weak.add(pair_vector(pair.x, pair.y));
  }
  return KernelSpans{strong.finish(policy), weak.finish(policy)};
}

// --- Dimension report -------------------------------------------------------

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::Match:
      return "match";
    case Verdict::Inconclusive:
      return "inconclusive";
    case Verdict::Mismatch:
      return "mismatch";
  }
  return "?";
}

Verdict judge(Index measured, Index target, Bound bound, bool sampled) {
  if (measured == target) return Verdict::Match;
  if (measured > target) return bound == Bound::AtLeast ? Verdict::Match : Verdict::Mismatch;
  return sampled ? Verdict::Inconclusive : Verdict::Mismatch;
}

const DimItem& DimReport::item(std::string_view name) const {
  for (const auto& it : items)
    if (it.name == name) return it;
  throw DomainError("DimReport: no item named " + std::string(name));
}

Index default_samples(int n) {
  const Index d = 2 * static_cast<Index>(n);
  return 4 * d * d * d;
}

DimReport dim_report(int n, Index samples, std::uint64_t seed, const DimOptions& options) {
  const BlockMap map(n);
  if (samples < 1) throw DomainError("dim_report: samples must be positive");
  const Index m = n;
  const Index d = 2 * m;
  const Index ambient = d * d * d;

  SpanAccumulator w(ambient), v(ambient), g(ambient), weak(d * d);
  for (const auto& pair : sample_parallel(n, samples, seed)) {
    w.add(span_vector(pair.x, pair.y));
    weak.add(pair_vector(pair.x, pair.y));
  }
  for (const auto& pair : sample_orthogonal(n, samples, seed)) {
    v.add(span_vector(pair.x, pair.y));
    weak.add(pair_vector(pair.x, pair.y));
  }
  for (const auto& pair : sample_generic(LinearMap::from(map), samples, seed, options.eigen_tol)) {
    g.add(span_vector(pair.x, pair.y));
    weak.add(pair_vector(pair.x, pair.y));
  }

  SpanAccumulator w_plus_v = w;
  w_plus_v.merge(v);
  SpanAccumulator strong = w_plus_v;
  strong.merge(g);

  const auto w_perp = w_perp_basis(n);
  const auto v_perp = v_perp_basis(n);
  std::vector<TensorVector> both_perp = w_perp;
  both_perp.insert(both_perp.end(), v_perp.begin(), v_perp.end());

  const Index dim_w = w.finish(options.rank).rank;
  const Index dim_v = v.finish(options.rank).rank;
  const Index w_perp_count = static_cast<Index>(w_perp.size());
  const Index v_perp_count = static_cast<Index>(v_perp.size());

  DimReport report;
  report.n = n;
  report.seed = seed;
  report.samples = samples;
  auto push = [&report](std::string name, Index measured, Index target, Bound bound, bool sampled) {
    report.items.push_back(
        DimItem{std::move(name), measured, target, bound, sampled, judge(measured, target, bound, sampled)});
  };
  push("W", dim_w, 7 * m * m * m + m * m - 2 * m, Bound::Exact, true);
  push("V", dim_v, 7 * m * m * m + m * m - 6 * m, Bound::Exact, true);
  push("N_Phi", strong.finish(options.rank).rank, 2 * m * (4 * m * m - 1), Bound::Exact, true);
  push("P_Phi", weak.finish(options.rank).rank, d * d, Bound::Exact, true);
  push("W+V", w_plus_v.finish(options.rank).rank, 8 * m * m * m - 2 * m, Bound::AtLeast, true);
  push("W_perp", numeric_rank(w_perp, options.rank).rank, m * m * m - m * m + 2 * m, Bound::Exact, false);
  push("V_perp", numeric_rank(v_perp, options.rank).rank, m * m * m - m * m + 6 * m, Bound::Exact, false);
  push("W_perp+V_perp", numeric_rank(both_perp, options.rank).rank, 2 * (m * m * m - m * m) + 6 * m, Bound::AtLeast,
       false);
  push("W+W_perp", dim_w + w_perp_count, ambient, Bound::Exact, true);
  push("V+V_perp", dim_v + v_perp_count, ambient, Bound::Exact, true);
  return report;
}

nlohmann::json to_json(const DimReport& report) {
  nlohmann::json measured = nlohmann::json::object();
  nlohmann::json targets = nlohmann::json::object();
  nlohmann::json verdicts = nlohmann::json::object();
  for (const auto& it : report.items) {
    measured[it.name] = it.measured;
    targets[it.name] = it.target;
    verdicts[it.name] = verdict_name(it.verdict);
  }
  return {{"n", report.n},
          {"seed", report.seed},
          {"samples", report.samples},
          {"measured", std::move(measured)},
          {"targets", std::move(targets)},
          {"verdict", std::move(verdicts)}};
}

}  // namespace expmap
