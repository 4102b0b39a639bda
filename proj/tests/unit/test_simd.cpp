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

#include <gtest/gtest.h>

#include <complex>
#include <cstring>
#include <vector>

#include "expmap/random.hpp"
#include "expmap/simd.hpp"

namespace {

using expmap::cplx;
namespace simd = expmap::simd;

std::vector<cplx> random_buffer(std::size_t len, std::uint64_t seed) {
  expmap::Rng rng(seed);
  std::vector<cplx> v(len);
  for (auto& z : v) z = rng.complex_normal();
  return v;
}

cplx reference_conj_dot(const std::vector<cplx>& a, const std::vector<cplx>& b, std::size_t offset, std::size_t len) {
  cplx sum = 0;
  for (std::size_t i = 0; i < len; ++i) sum += std::conj(a[offset + i]) * b[offset + i];
  return sum;
}

bool bitwise_equal(const cplx* a, const cplx* b, std::size_t len) { return std::memcmp(a, b, len * sizeof(cplx)) == 0; }

class SimdEquivalence : public ::testing::TestWithParam<simd::Isa> {
 protected:
  void SetUp() override {
    if (!simd::supported(GetParam())) GTEST_SKIP() << simd::name(GetParam()) << " not available on this CPU";
  }
};

TEST_P(SimdEquivalence, ConjDotMatchesReferenceForAllLengthsAndOffsets) {
  const auto& kernels = simd::table(GetParam());
  for (std::size_t len = 0; len <= 37; ++len)
    for (std::size_t offset = 0; offset < 3; ++offset) {
      const auto a = random_buffer(len + offset, 100 + len);
      const auto b = random_buffer(len + offset, 200 + len);
      const cplx expected = reference_conj_dot(a, b, offset, len);
      const cplx got = kernels.conj_dot(a.data() + offset, b.data() + offset, len);
      EXPECT_NEAR(std::abs(got - expected), 0.0, 1e-13 * (1.0 + static_cast<double>(len)))
          << "len " << len << " offset " << offset;
    }
}

TEST_P(SimdEquivalence, NormSqIsRealPartOfSelfDot) {
  const auto& kernels = simd::table(GetParam());
  for (std::size_t len = 0; len <= 37; ++len) {
    const auto a = random_buffer(len, 300 + len);
    double expected = 0;
    for (const auto& z : a) expected += std::norm(z);
    EXPECT_NEAR(kernels.norm_sq(a.data(), len), expected, 1e-13 * (1.0 + expected));
  }
}

TEST_P(SimdEquivalence, ScaleAndAxpyAreBitwiseIdenticalToScalar) {
  const auto& kernels = simd::table(GetParam());
  const auto& scalar = simd::table(simd::Isa::Scalar);
  const cplx alpha(0.37, -1.25);
  for (std::size_t len = 0; len <= 37; ++len)
    for (std::size_t offset = 0; offset < 3; ++offset) {
      const auto in = random_buffer(len + offset, 400 + len);
      const auto base = random_buffer(len + offset, 500 + len);

      std::vector<cplx> got(len + offset), want(len + offset);
      kernels.scale(alpha, in.data() + offset, got.data() + offset, len);
      scalar.scale(alpha, in.data() + offset, want.data() + offset, len);
      EXPECT_TRUE(bitwise_equal(got.data() + offset, want.data() + offset, len)) << "scale len " << len;

      got = base;
      want = base;
      kernels.axpy(alpha, in.data() + offset, got.data() + offset, len);
      scalar.axpy(alpha, in.data() + offset, want.data() + offset, len);
      EXPECT_TRUE(bitwise_equal(got.data(), want.data(), len + offset)) << "axpy len " << len;
    }
}

TEST_P(SimdEquivalence, ScaleMatchesComplexMultiplication) {
  const auto& kernels = simd::table(GetParam());
  const cplx alpha(-2.0, 0.5);
  const auto in = random_buffer(19, 600);
  std::vector<cplx> out(in.size());
  kernels.scale(alpha, in.data(), out.data(), in.size());
  for (std::size_t i = 0; i < in.size(); ++i) EXPECT_NEAR(std::abs(out[i] - alpha * in[i]), 0.0, 1e-15);
}

INSTANTIATE_TEST_SUITE_P(AllIsas, SimdEquivalence, ::testing::Values(simd::Isa::Scalar, simd::Isa::Avx2),
                         [](const auto& info) { return std::string(simd::name(info.param)); });

TEST(SimdDispatch, ScalarIsAlwaysSupported) { EXPECT_TRUE(simd::supported(simd::Isa::Scalar)); }

TEST(SimdDispatch, ActiveIsaIsSupported) { EXPECT_TRUE(simd::supported(simd::active_isa())); }

TEST(SimdDispatch, UnsupportedTableThrows) {
  if (simd::supported(simd::Isa::Avx2)) GTEST_SKIP() << "AVX2 present";
  EXPECT_THROW(simd::table(simd::Isa::Avx2), expmap::DomainError);
}

TEST(SimdDispatch, SpanWrappersUseActiveTable) {
  const auto a = random_buffer(11, 700);
  const auto b = random_buffer(11, 701);
  EXPECT_NEAR(std::abs(simd::conj_dot(a, b) - reference_conj_dot(a, b, 0, a.size())), 0.0, 1e-13);
  std::vector<cplx> out(a.size());
  simd::scale(cplx(2.0, 0.0), a, out);
  EXPECT_NEAR(simd::norm_sq(out), 4.0 * simd::norm_sq(a), 1e-12);
}

}  // namespace
