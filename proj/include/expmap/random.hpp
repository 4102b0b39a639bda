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

#ifndef EXPMAP_RANDOM_HPP
#define EXPMAP_RANDOM_HPP

#include <cstdint>
#include <random>

#include "expmap/types.hpp"

namespace expmap {

/// Deterministic sub-seed for task `index` of stream `stream` under a master
/// seed. Every sampled item gets its own engine, so results do not depend on
/// the order in which items are produced.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  cplx complex_normal() { return {normal(), normal()}; }

  /// Real and imaginary parts i.i.d. standard normal.
  Vector gaussian(Index dim);
  Matrix gaussian(Index rows, Index cols);
  Vector unit(Index dim);

  /// Haar-random unitary via QR of a Ginibre matrix with the phase fix on R.
  Matrix unitary(Index dim);

  /// Random full-rank density matrix G G^dagger / Tr.
  Matrix density_matrix(Index dim);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace expmap

#endif  // EXPMAP_RANDOM_HPP
