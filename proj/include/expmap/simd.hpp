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

#ifndef EXPMAP_SIMD_HPP
#define EXPMAP_SIMD_HPP

#include <cstddef>
#include <span>

#include "expmap/types.hpp"

// Complex double kernels on interleaved (re, im) storage. Each instruction set
// provides one table; the dispatcher picks the widest one the CPU supports at
// first use. Setting EXPMAP_SIMD=scalar in the environment forces the scalar
// reference path.
namespace expmap::simd {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  /// sum_i conj(a_i) * b_i
  cplx (*conj_dot)(const cplx* a, const cplx* b, std::size_t len);
  /// sum_i |a_i|^2
  double (*norm_sq)(const cplx* a, std::size_t len);
  /// out_i = alpha * in_i
  void (*scale)(cplx alpha, const cplx* in, cplx* out, std::size_t len);
  /// out_i += alpha * in_i
  void (*axpy)(cplx alpha, const cplx* in, cplx* out, std::size_t len);
};

bool supported(Isa isa);
const char* name(Isa isa);

/// Table for a specific ISA; throws DomainError if the CPU lacks it.
const KernelTable& table(Isa isa);

/// Best supported ISA, honouring the EXPMAP_SIMD override.
Isa active_isa();
const KernelTable& active();

cplx conj_dot(std::span<const cplx> a, std::span<const cplx> b);
double norm_sq(std::span<const cplx> a);
void scale(cplx alpha, std::span<const cplx> in, std::span<cplx> out);
void axpy(cplx alpha, std::span<const cplx> in, std::span<cplx> out);

}  // namespace expmap::simd

#endif  // EXPMAP_SIMD_HPP
