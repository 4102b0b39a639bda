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

// Reference kernels. Written with explicit real/imaginary arithmetic so the
// vector variants can reproduce them operation for operation where the
// summation order allows it.

#include "tables.hpp"

namespace expmap::simd::detail {
namespace {

cplx conj_dot_scalar(const cplx* a, const cplx* b, std::size_t len) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

double norm_sq_scalar(const cplx* a, std::size_t len) {
  double acc = 0.0;
  for (std::size_t i = 0; i < len; ++i) acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return acc;
}

void scale_scalar(cplx alpha, const cplx* in, cplx* out, std::size_t len) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t i = 0; i < len; ++i) {
    const double xr = in[i].real(), xi = in[i].imag();
    out[i] = cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

void axpy_scalar(cplx alpha, const cplx* in, cplx* out, std::size_t len) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t i = 0; i < len; ++i) {
    const double xr = in[i].real(), xi = in[i].imag();
    out[i] += cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

}  // namespace

const KernelTable kScalarTable{conj_dot_scalar, norm_sq_scalar, scale_scalar, axpy_scalar};

}  // namespace expmap::simd::detail
