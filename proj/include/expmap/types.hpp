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

#ifndef EXPMAP_TYPES_HPP
#define EXPMAP_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace expmap {

using cplx = std::complex<double>;
using Index = Eigen::Index;

/// Dense complex matrix, column-major storage. Carries states, map outputs and
/// witnesses throughout the library.
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument lies outside the domain of the operation (n < 2, zero vector, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on the input values does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Conjugating matrix is not square of the right size or is numerically singular.
class InvalidConjugator : public Error {
 public:
  using Error::Error;
};

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kKernelResidual = 1e-10;
inline constexpr double kKernelEigen = 1e-10;   // relative to lambda_max
inline constexpr double kConjugator = 1e-10;    // sigma_min / sigma_max
inline constexpr double kRankRelative = 1e-12;  // times max_sv * max(m, D^3)
inline constexpr double kUnitNorm = 1e-10;
inline constexpr double kOrthogonalParts = 1e-12;
}  // namespace tol

// Index convention for C^{2n} = C^2 (x) C^n: block alpha in {0, 1}, intra-block
// index i in {0, ..., n-1}, global index g = alpha * n + i. A vector
// phi_1 (+) phi_2 therefore stores phi_1 in [0, n) and phi_2 in [n, 2n).
constexpr Index block_index(Index n, Index alpha, Index i) { return alpha * n + i; }

Vector direct_sum(const Vector& first, const Vector& second);

/// Kronecker product of two vectors, first factor slowest.
Vector kron(const Vector& a, const Vector& b);
Matrix kron(const Matrix& a, const Matrix& b);

bool is_hermitian(const Matrix& m, double tol = tol::kHermitian);
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Eigenvalues of the Hermitian part (m + m^dagger)/2, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);
double min_eigenvalue(const Matrix& m);

}  // namespace expmap

#endif  // EXPMAP_TYPES_HPP
