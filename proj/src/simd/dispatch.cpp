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

#include <cstdlib>
#include <string_view>

#include "tables.hpp"

namespace expmap::simd {
namespace {

bool cpu_has_avx2() {
#if defined(EXPMAP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa select_isa() {
  if (const char* env = std::getenv("EXPMAP_SIMD"); env != nullptr && std::string_view(env) == "scalar")
    return Isa::Scalar;
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

void check_lengths(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionError("simd kernel: operand lengths differ");
}

}  // namespace

bool supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return cpu_has_avx2();
  }
  return false;
}

const char* name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable& table(Isa isa) {
  if (!supported(isa)) throw DomainError(std::string("simd: instruction set not available: ") + name(isa));
#if defined(EXPMAP_HAVE_AVX2)
  if (isa == Isa::Avx2) return detail::kAvx2Table;
#endif
  return detail::kScalarTable;
}

Isa active_isa() {
  static const Isa isa = select_isa();
  return isa;
}

const KernelTable& active() {
  static const KernelTable& t = table(active_isa());
  return t;
}

cplx conj_dot(std::span<const cplx> a, std::span<const cplx> b) {
  check_lengths(a.size(), b.size());
  return active().conj_dot(a.data(), b.data(), a.size());
}

double norm_sq(std::span<const cplx> a) { return active().norm_sq(a.data(), a.size()); }

void scale(cplx alpha, std::span<const cplx> in, std::span<cplx> out) {
  check_lengths(in.size(), out.size());
  active().scale(alpha, in.data(), out.data(), in.size());
}

void axpy(cplx alpha, std::span<const cplx> in, std::span<cplx> out) {
  check_lengths(in.size(), out.size());
  active().axpy(alpha, in.data(), out.data(), in.size());
}

}  // namespace expmap::simd
