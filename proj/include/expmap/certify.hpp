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

#ifndef EXPMAP_CERTIFY_HPP
#define EXPMAP_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "expmap/kernel_span.hpp"
#include "expmap/linmaps.hpp"
#include "expmap/types.hpp"

namespace expmap {

// ---------------------------------------------------------------------------
// Positivity

struct PositivityOptions {
  int max_iterations = 2000;
  double gradient_tol = 1e-10;
  double armijo = 1e-4;
};

struct LocalMinimum {
  double value;
  Vector x;
  bool converged;
  int iterations;
};

/// lambda_min(map(|x><x|)) for unit x.
double lambda_min_pure(const LinearMap& map, const Vector& x);

/// Riemannian descent of lambda_min(map(|x><x|)) on the unit sphere from
/// `start`. The gradient is 2 map*(|v><v|) x for a lowest eigenvector v,
/// projected onto the tangent space; at a degenerate lowest eigenvalue this is
/// a subgradient. Armijo backtracking along the retraction x -> normalise(x - t g).
LocalMinimum minimize_lambda_min(const LinearMap& map, const Matrix& superop, const Vector& start,
                                 const PositivityOptions& options = {});

struct PositivityResult {
  double minimum;     // lowest value over converged restarts
  Vector minimizer;
  int restarts;
  int converged;
  int skipped;        // restarts that hit max_iterations
};

/// Multistart estimate of min over unit x of lambda_min(map(|x><x|)).
/// Restart r starts from a Gaussian unit vector seeded by derive_seed(seed, .., r).
/// Throws DomainError for restarts < 1.
PositivityResult positivity_min(const LinearMap& map, int restarts, std::uint64_t seed,
                                const PositivityOptions& options = {});
PositivityResult positivity_min(const BlockMap& map, int restarts, std::uint64_t seed,
                                const PositivityOptions& options = {});

// ---------------------------------------------------------------------------
// Irreducibility

/// Real-diagonal, symmetric-real and antisymmetric-imaginary elementary
/// Hermitian matrices: d^2 of them, spanning B(C^d) over C.
std::vector<Matrix> hermitian_basis(Index d);

/// Dimension of {Z : [map(B), Z] = 0 for every Hermitian basis element B},
/// the null space of the stacked system (I (x) Y - Y^T (x) I) vec Z = 0.
/// Singular values <= rel_tol * sigma_max count as zero.
Index commutant_dim(const LinearMap& map, double rel_tol = 1e-10);
Index commutant_dim(const BlockMap& map, double rel_tol = 1e-10);

// ---------------------------------------------------------------------------
// Exposedness certificate

struct Check {
  bool ok;
  double deviation;
};

enum class Exposedness { Supported, Inconclusive };

std::string_view exposedness_name(Exposedness e);

struct CertifyOptions {
  Index samples = 0;  // 0 selects default_samples(n)
  int restarts = 200;
  double kernel_tol = tol::kKernelEigen;
  double unital_tol = 1e-12;
  double trace_tol = 1e-10;
  double positivity_tol = 1e-9;
  int trace_trials = 100;
  double commutant_tol = 1e-10;
};

/// Numerical evidence for the hypotheses of the exposedness criterion:
/// positive, unital, irreducible, and dim N_Phi = (d^2 - 1) d.
/// Not a proof; every tolerance and seed is kept in the report.
struct CertificateReport {
  int n = 0;
  std::uint64_t seed = 0;
  Index samples = 0;
  int restarts = 0;
  bool conjugated = false;

  Check unital{};
  Check trace_preserving{};
  double positivity_min = 0.0;
  int positivity_converged = 0;
  int positivity_skipped = 0;
  Index commutant_dim = 0;
  Index spanning_dim = 0;
  Index spanning_target = 0;
  Index strong_spanning_dim = 0;
  Index strong_spanning_target = 0;
  Exposedness verdict = Exposedness::Inconclusive;

  CertifyOptions options{};
};

/// Supported iff unital, positivity_min >= -positivity_tol, commutant_dim == 1
/// and strong_spanning_dim equals its target.
Exposedness exposedness_verdict(const CertificateReport& report);

/// Throws DomainError for n < 2. Unconjugated maps measure N_Phi from the
/// parallel, orthogonal and generic kernel families; conjugated maps from
/// generic kernel sampling alone.
CertificateReport exposedness_certificate(int n, std::uint64_t seed, const CertifyOptions& options = {});
CertificateReport exposedness_certificate(const BlockMap& map, std::uint64_t seed, const CertifyOptions& options = {});

/// Per-check verdicts: violated invariants are Mismatch, spans below target
/// are Inconclusive.
std::vector<Verdict> certificate_verdicts(const CertificateReport& report);

nlohmann::json to_json(const CertificateReport& report);

// ---------------------------------------------------------------------------
// PPT search

/// Transpose of the second tensor factor of an operator on C^{dim_a} (x) C^{dim_b}.
Matrix partial_transpose(const Matrix& rho, Index dim_a, Index dim_b);

struct PptOptions {
  double step_scale = 0.05;  // initial step = step_scale / ||W||_2
  double decay = 0.999;      // per-iteration step factor
  int check_every = 10;
  double state_tol = 1e-10;
  double trace_tol = 1e-10;
  double ppt_tol = 1e-8;
  double witness_tol = 1e-8;
};

struct PptSearchResult {
  bool found = false;
  std::optional<Matrix> state;  // set only when found
  double witness_value = 0.0;   // Tr(W rho) of the reported iterate
  double ppt_min_eigenvalue = 0.0;
  double state_min_eigenvalue = 0.0;
  double trace = 0.0;
  int iterations = 0;
};

/// Minimises Tr(W rho) over states by gradient steps, each followed by
/// projection onto unit-trace PSD matrices (eigenvalue clipping then trace
/// renormalisation), onto the PPT set (clip the partial transpose, transpose
/// back) and onto the unit-trace PSD matrices again. Reports the best iterate
/// that satisfies every PptSearchResult invariant. found == false means
/// nothing was found, not that nothing exists.
/// Throws DomainError for iterations < 1, DimensionError for a witness whose
/// size is not a square of local_dim.
PptSearchResult ppt_violation_search(const Matrix& witness, Index local_dim, int iterations, std::uint64_t seed,
                                     const PptOptions& options = {});
PptSearchResult ppt_violation_search(const Witness& witness, int iterations, std::uint64_t seed,
                                     const PptOptions& options = {});

nlohmann::json to_json(const PptSearchResult& result);

}  // namespace expmap

#endif  // EXPMAP_CERTIFY_HPP
