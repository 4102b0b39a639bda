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

// AVX2 kernels. This translation unit is the only one compiled with -mavx2;
// nothing here may run before the dispatcher has checked CPU support.

#include <immintrin.h>

#include "tables.hpp"

namespace expmap::simd::detail {
namespace {

// Two complex doubles per __m256d: [re0, im0, re1, im1].

cplx conj_dot_avx2(const cplx* a, const cplx* b, std::size_t len) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d acc_re = _mm256_setzero_pd();  // ar*br, ai*bi
  __m256d acc_im = _mm256_setzero_pd();  // ar*bi, ai*br
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    const __m256d vb_swap = _mm256_permute_pd(vb, 0b0101);
    acc_re = _mm256_fmadd_pd(va, vb, acc_re);
    acc_im = _mm256_fmadd_pd(va, vb_swap, acc_im);
  }
  alignas(32) double re_lanes[4];
  alignas(32) double im_lanes[4];
  _mm256_store_pd(re_lanes, acc_re);
  _mm256_store_pd(im_lanes, acc_im);
  double re = (re_lanes[0] + re_lanes[1]) + (re_lanes[2] + re_lanes[3]);
  double im = (im_lanes[0] - im_lanes[1]) + (im_lanes[2] - im_lanes[3]);
  for (; i < len; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

double norm_sq_avx2(const cplx* a, std::size_t len) {
  const double* pa = reinterpret_cast<const double*>(a);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    acc = _mm256_fmadd_pd(va, va, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < len; ++i) total += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return total;
}

// mul + addsub without fma, so results are bitwise identical to the scalar path.
inline __m256d cmul_lanes(__m256d alpha_re, __m256d alpha_im, __m256d x) {
  const __m256d x_swap = _mm256_permute_pd(x, 0b0101);
  return _mm256_addsub_pd(_mm256_mul_pd(alpha_re, x), _mm256_mul_pd(alpha_im, x_swap));
}

void scale_avx2(cplx alpha, const cplx* in, cplx* out, std::size_t len) {
  const double* pin = reinterpret_cast<const double*>(in);
  double* pout = reinterpret_cast<double*>(out);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) _mm256_storeu_pd(pout + 2 * i, cmul_lanes(ar, ai, _mm256_loadu_pd(pin + 2 * i)));
  for (; i < len; ++i) {
    const double xr = in[i].real(), xi = in[i].imag();
    out[i] = cplx(alpha.real() * xr - alpha.imag() * xi, alpha.real() * xi + alpha.imag() * xr);
  }
}

void axpy_avx2(cplx alpha, const cplx* in, cplx* out, std::size_t len) {
  const double* pin = reinterpret_cast<const double*>(in);
  double* pout = reinterpret_cast<double*>(out);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d prod = cmul_lanes(ar, ai, _mm256_loadu_pd(pin + 2 * i));
    _mm256_storeu_pd(pout + 2 * i, _mm256_add_pd(_mm256_loadu_pd(pout + 2 * i), prod));
  }
  for (; i < len; ++i) {
    const double xr = in[i].real(), xi = in[i].imag();
    out[i] += cplx(alpha.real() * xr - alpha.imag() * xi, alpha.real() * xi + alpha.imag() * xr);
  }
}

}  // namespace

const KernelTable kAvx2Table{conj_dot_avx2, norm_sq_avx2, scale_avx2, axpy_avx2};

}  // namespace expmap::simd::detail
