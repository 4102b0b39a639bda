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

#include "expmap/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "expmap/random.hpp"

namespace expmap {
namespace {

enum Stream : std::uint64_t { kPositivityStream = 10, kTraceStream = 11, kPptStream = 12 };

struct Lowest {
  double value;
  Vector vector;
};

Lowest lowest_eigenpair(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) * 0.5);
  return {es.eigenvalues()(0), es.eigenvectors().col(0)};
}

Matrix clip_negative(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) * 0.5);
  const Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().adjoint();
}

// Clip to PSD, then renormalise to unit trace; falls back to the maximally
// mixed state when nothing survives the clip.
Matrix project_state(const Matrix& m) {
  Matrix out = clip_negative(m);
  const double trace = out.trace().real();
  if (!(trace > 0.0)) return Matrix::Identity(m.rows(), m.cols()) / static_cast<double>(m.rows());
  return out / trace;
}

double trace_product(const Matrix& a, const Matrix& b) { return a.cwiseProduct(b.transpose()).sum().real(); }

}  // namespace

// --- Positivity ---------------------------------------------------------------

double lambda_min_pure(const LinearMap& map, const Vector& x) {
  const Vector unit = x / x.norm();
  return lowest_eigenpair(map(unit * unit.adjoint())).value;
}

LocalMinimum minimize_lambda_min(const LinearMap& map, const Matrix& superop, const Vector& start,
                                 const PositivityOptions& options) {
  if (start.size() != map.dim()) throw DimensionError("minimize_lambda_min: start vector has wrong length");
  const double start_norm = start.norm();
  if (start_norm == 0.0) throw DomainError("minimize_lambda_min: zero start vector");

  Vector x = start / start_norm;
  Lowest current = lowest_eigenpair(map(x * x.adjoint()));
  for (int it = 0; it < options.max_iterations; ++it) {
    const Matrix vv = current.vector * current.vector.adjoint();
    Matrix m = apply_adjoint(superop, vv);
    m = (m + m.adjoint()).eval() * 0.5;
    Vector grad = 2.0 * (m * x);
    grad -= x.dot(grad).real() * x;
    const double grad_norm_sq = grad.squaredNorm();
    if (std::sqrt(grad_norm_sq) <= options.gradient_tol) return {current.value, x, true, it};

    double step = 1.0;
    bool accepted = false;
    Vector next_x;
    Lowest next{};
    for (int k = 0; k < 60; ++k, step *= 0.5) {
      next_x = (x - step * grad).normalized();
      next = lowest_eigenpair(map(next_x * next_x.adjoint()));
      if (next.value <= current.value - options.armijo * step * grad_norm_sq) {
        accepted = true;
        break;
      }
    }
    // No decrease left at working precision: a (possibly nonsmooth) stationary point.
    if (!accepted) return {current.value, x, true, it};
    const double gain = current.value - next.value;
    x = std::move(next_x);
    current = std::move(next);
    if (gain <= 1e-15 * std::max(1.0, std::abs(current.value))) return {current.value, x, true, it + 1};
  }
  return {current.value, x, false, options.max_iterations};
}

PositivityResult positivity_min(const LinearMap& map, int restarts, std::uint64_t seed,
                                const PositivityOptions& options) {
  if (restarts < 1) throw DomainError("positivity_min: restarts must be >= 1");
  const Matrix superop = superoperator(map);
  PositivityResult result{std::numeric_limits<double>::infinity(), Vector(), restarts, 0, 0};
  LocalMinimum fallback{std::numeric_limits<double>::infinity(), Vector(), false, 0};
  for (int r = 0; r < restarts; ++r) {
    Rng rng(derive_seed(seed, kPositivityStream, static_cast<std::uint64_t>(r)));
    LocalMinimum local = minimize_lambda_min(map, superop, rng.unit(map.dim()), options);
    if (!local.converged) {
      ++result.skipped;
      if (local.value < fallback.value) fallback = std::move(local);
      continue;
    }
    ++result.converged;
    if (local.value < result.minimum) {
      result.minimum = local.value;
      result.minimizer = std::move(local.x);
    }
  }
  if (result.converged == 0) {
    result.minimum = fallback.value;
    result.minimizer = std::move(fallback.x);
  }
  return result;
}

PositivityResult positivity_min(const BlockMap& map, int restarts, std::uint64_t seed,
                                const PositivityOptions& options) {
  return positivity_min(LinearMap::from(map), restarts, seed, options);
}

// --- Irreducibility -----------------------------------------------------------

std::vector<Matrix> hermitian_basis(Index d) {
  std::vector<Matrix> basis;
  basis.reserve(static_cast<std::size_t>(d * d));
  for (Index i = 0; i < d; ++i) {
    Matrix m = Matrix::Zero(d, d);
    m(i, i) = 1.0;
    basis.push_back(std::move(m));
  }
  const cplx i_unit(0.0, 1.0);
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      Matrix sym = Matrix::Zero(d, d);
      sym(i, j) = 1.0;
      sym(j, i) = 1.0;
      basis.push_back(std::move(sym));
      Matrix anti = Matrix::Zero(d, d);
      anti(i, j) = i_unit;
      anti(j, i) = -i_unit;
      basis.push_back(std::move(anti));
    }
  return basis;
}

Index commutant_dim(const LinearMap& map, double rel_tol) {
  const Index d = map.dim();
  const Index d2 = d * d;
  const auto basis = hermitian_basis(d);
  const Matrix id = Matrix::Identity(d, d);

  Matrix system(static_cast<Index>(basis.size()) * d2, d2);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Matrix y = map(basis[k]);
    system.middleRows(static_cast<Index>(k) * d2, d2) = kron(id, y) - kron(y.transpose(), id);
  }
  const Eigen::VectorXd sv = Eigen::BDCSVD<Matrix>(system).singularValues();
  const double cutoff = rel_tol * (sv.size() > 0 ? sv(0) : 0.0);
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return d2 - rank;
}

Index commutant_dim(const BlockMap& map, double rel_tol) { return commutant_dim(LinearMap::from(map), rel_tol); }

// --- Certificate -----------------------------------------------------------------

std::string_view exposedness_name(Exposedness e) {
  return e == Exposedness::Supported ? "supported" : "inconclusive";
}

Exposedness exposedness_verdict(const CertificateReport& r) {
  const bool ok = r.unital.ok && r.positivity_min >= -r.options.positivity_tol && r.commutant_dim == 1 &&
                  r.strong_spanning_dim == r.strong_spanning_target;
  return ok ? Exposedness::Supported : Exposedness::Inconclusive;
}

CertificateReport exposedness_certificate(int n, std::uint64_t seed, const CertifyOptions& options) {
  return exposedness_certificate(BlockMap(n), seed, options);
}

CertificateReport exposedness_certificate(const BlockMap& map, std::uint64_t seed, const CertifyOptions& options) {
  const int n = map.n();
  const Index d = map.dim();
  const LinearMap lm = LinearMap::from(map);

  CertificateReport r;
  r.n = n;
  r.seed = seed;
  r.samples = options.samples > 0 ? options.samples : default_samples(n);
  r.restarts = options.restarts;
  r.conjugated = map.conjugated();
  r.options = options;
  r.options.samples = r.samples;

  const Matrix id = Matrix::Identity(d, d);
  const double unital_dev = max_abs_diff(lm(id), id);
  r.unital = {unital_dev <= options.unital_tol, unital_dev};

  double trace_dev = 0.0;
  for (int t = 0; t < options.trace_trials; ++t) {
    Rng rng(derive_seed(seed, kTraceStream, static_cast<std::uint64_t>(t)));
    const Matrix x = rng.gaussian(d, d);
    const cplx before = x.trace();
    const cplx after = lm(x).trace();
    trace_dev = std::max(trace_dev, std::abs(after - before) / std::max(1.0, std::abs(before)));
  }
  r.trace_preserving = {trace_dev <= options.trace_tol, trace_dev};

  const PositivityResult positivity = positivity_min(lm, options.restarts, seed);
  r.positivity_min = positivity.minimum;
  r.positivity_converged = positivity.converged;
  r.positivity_skipped = positivity.skipped;

  r.commutant_dim = commutant_dim(lm, options.commutant_tol);

  r.spanning_target = d * d;
  r.strong_spanning_target = (d * d - 1) * d;
  if (!map.conjugated()) {
    DimOptions dim_options;
    dim_options.eigen_tol = options.kernel_tol;
    const DimReport dims = dim_report(n, r.samples, seed, dim_options);
    r.strong_spanning_dim = dims.item("N_Phi").measured;
    r.spanning_dim = dims.item("P_Phi").measured;
  } else {
    const KernelSpans spans = measure_kernel_spans(lm, r.samples, seed, options.kernel_tol);
    r.strong_spanning_dim = spans.strong.rank;
    r.spanning_dim = spans.weak.rank;
  }
  r.verdict = exposedness_verdict(r);
  return r;
}

std::vector<Verdict> certificate_verdicts(const CertificateReport& r) {
  auto pass = [](bool ok) { return ok ? Verdict::Match : Verdict::Mismatch; };
  return {pass(r.unital.ok),
          pass(r.trace_preserving.ok),
          pass(r.positivity_min >= -r.options.positivity_tol),
          pass(r.commutant_dim == 1),
          judge(r.spanning_dim, r.spanning_target, Bound::Exact, true),
          judge(r.strong_spanning_dim, r.strong_spanning_target, Bound::Exact, true)};
}

nlohmann::json to_json(const CertificateReport& r) {
  const bool supported = r.verdict == Exposedness::Supported;
  return {
      {"n", r.n},
      {"seed", r.seed},
      {"samples", r.samples},
      {"restarts", r.restarts},
      {"conjugated", r.conjugated},
      {"unital", {{"ok", r.unital.ok}, {"max_deviation", r.unital.deviation}}},
      {"trace_preserving", {{"ok", r.trace_preserving.ok}, {"max_deviation", r.trace_preserving.deviation}}},
      {"positivity_min", r.positivity_min},
      {"positivity_restarts_converged", r.positivity_converged},
      {"positivity_restarts_skipped", r.positivity_skipped},
      {"commutant_dim", r.commutant_dim},
      {"spanning_dim", r.spanning_dim},
      {"spanning_target", r.spanning_target},
      {"strong_spanning_dim", r.strong_spanning_dim},
      {"strong_spanning_target", r.strong_spanning_target},
      {"exposedness_verdict", exposedness_name(r.verdict)},
      {"statement", supported ? "hypotheses of the exposedness theorem verified numerically"
                              : "hypotheses of the exposedness theorem not all verified numerically"},
      {"tolerances",
       {{"unital", r.options.unital_tol},
        {"trace", r.options.trace_tol},
        {"positivity", r.options.positivity_tol},
        {"kernel_eigen", r.options.kernel_tol},
        {"commutant", r.options.commutant_tol},
        {"rank_relative", tol::kRankRelative}}},
  };
}

// --- PPT search ------------------------------------------------------------------

Matrix partial_transpose(const Matrix& rho, Index dim_a, Index dim_b) {
  const Index total = dim_a * dim_b;
  if (rho.rows() != total || rho.cols() != total) throw DimensionError("partial_transpose: shape mismatch");
  Matrix out(total, total);
  for (Index a = 0; a < dim_a; ++a)
    for (Index a2 = 0; a2 < dim_a; ++a2)
      out.block(a * dim_b, a2 * dim_b, dim_b, dim_b) = rho.block(a * dim_b, a2 * dim_b, dim_b, dim_b).transpose();
  return out;
}

PptSearchResult ppt_violation_search(const Matrix& witness, Index local_dim, int iterations, std::uint64_t seed,
                                     const PptOptions& options) {
  if (iterations < 1) throw DomainError("ppt_violation_search: iterations must be >= 1");
  const Index total = local_dim * local_dim;
  if (local_dim < 1 || witness.rows() != total || witness.cols() != total)
    throw DimensionError("ppt_violation_search: witness must be d^2 x d^2");

  const Matrix w = (witness + witness.adjoint()) * 0.5;
  const double spectral = hermitian_eigenvalues(w).cwiseAbs().maxCoeff();
  double step = spectral > 0.0 ? options.step_scale / spectral : options.step_scale;

  Rng rng(derive_seed(seed, kPptStream, 0));
  Matrix rho = rng.density_matrix(total);

  PptSearchResult best;
  best.witness_value = std::numeric_limits<double>::infinity();
  PptSearchResult last;

  auto evaluate = [&](const Matrix& state, int iteration) {
    PptSearchResult e;
    e.iterations = iteration;
    e.witness_value = trace_product(w, state);
    e.trace = state.trace().real();
    e.state_min_eigenvalue = min_eigenvalue(state);
    e.ppt_min_eigenvalue = min_eigenvalue(partial_transpose(state, local_dim, local_dim));
    e.found = e.state_min_eigenvalue >= -options.state_tol && std::abs(e.trace - 1.0) <= options.trace_tol &&
              e.ppt_min_eigenvalue >= -options.ppt_tol && e.witness_value < -options.witness_tol;
    return e;
  };

  for (int it = 1; it <= iterations; ++it) {
    rho = project_state(rho - step * w);
    rho = partial_transpose(clip_negative(partial_transpose(rho, local_dim, local_dim)), local_dim, local_dim);
    rho = project_state(rho);
    step *= options.decay;

    if (it % std::max(1, options.check_every) != 0 && it != iterations) continue;
    PptSearchResult e = evaluate(rho, it);
    if (e.found && e.witness_value < best.witness_value) {
      e.state = rho;
      best = std::move(e);
    } else {
      last = std::move(e);
    }
  }
  if (best.found) return best;
  last.found = false;
  last.state.reset();
  return last;
}

PptSearchResult ppt_violation_search(const Witness& witness, int iterations, std::uint64_t seed,
                                     const PptOptions& options) {
  return ppt_violation_search(witness.matrix, 2 * static_cast<Index>(witness.n), iterations, seed, options);
}

nlohmann::json to_json(const PptSearchResult& r) {
  return {{"found", r.found},
          {"witness_value", r.witness_value},
          {"ppt_min_eigenvalue", r.ppt_min_eigenvalue},
          {"state_min_eigenvalue", r.state_min_eigenvalue},
          {"trace", r.trace},
          {"iterations", r.iterations}};
}

}  // namespace expmap
