// Copyright 2026 The crtft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Scalar vs SIMD backend equivalence. The scalar kernels define the
// semantics; any other backend may only differ by reassociation error.

#include <doctest.h>

#include <cmath>

#include "crtft/dft.hpp"
#include "crtft/kernels.hpp"
#include "support/oracles.hpp"

namespace k = crtft::kernels;

namespace {

struct BackendGuard {
    k::Backend saved = k::active_backend();
    ~BackendGuard() { k::set_backend(saved); }
};

}  // namespace

TEST_CASE("dispatch API basics") {
    CHECK(k::available(k::Backend::Scalar));
    CHECK(std::string(k::ops(k::Backend::Scalar).name) == "scalar");
    BackendGuard guard;
    k::set_backend(k::Backend::Scalar);
    CHECK(k::active_backend() == k::Backend::Scalar);
    if (k::available(k::Backend::Avx2)) {
        k::set_backend(k::Backend::Avx2);
        CHECK(std::string(k::ops().name) == "avx2");
    } else {
        CHECK_THROWS(k::set_backend(k::Backend::Avx2));
    }
}

TEST_CASE("scalar and AVX2 kernels agree") {
    if (!k::available(k::Backend::Avx2)) {
        MESSAGE("AVX2 backend unavailable, skipping");
        return;
    }
    const auto& scalar = k::ops(k::Backend::Scalar);
    const auto& avx2 = k::ops(k::Backend::Avx2);

    for (std::size_t n : {0u, 1u, 2u, 3u, 5u, 8u, 63u, 64u, 255u, 1024u}) {
        const auto a = oracles::random_complex_vec(n, 9000 + n);
        const auto b = oracles::random_complex_vec(n, 9100 + n);
        const double bound = 1e-13 * static_cast<double>(n) + 1e-15;

        // cdot: only summation order differs.
        const auto d1 = scalar.cdot(a.data(), b.data(), n);
        const auto d2 = avx2.cdot(a.data(), b.data(), n);
        CHECK(std::abs(d1 - d2) <= bound);

        // caxpy: FMA contraction may change the last ulp per element.
        auto y1 = oracles::random_complex_vec(n, 9200 + n);
        auto y2 = y1;
        const k::cplx alpha{0.8, -0.6};
        scalar.caxpy(y1.data(), alpha, a.data(), n);
        avx2.caxpy(y2.data(), alpha, a.data(), n);
        CHECK(oracles::max_abs_diff(y1, y2) <= 1e-14);

        // butterfly
        auto t1 = oracles::random_complex_vec(n, 9300 + n);
        auto t2 = t1;
        auto b1 = oracles::random_complex_vec(n, 9400 + n);
        auto b2 = b1;
        scalar.butterfly(t1.data(), b1.data(), a.data(), n);
        avx2.butterfly(t2.data(), b2.data(), a.data(), n);
        CHECK(oracles::max_abs_diff(t1, t2) <= 1e-14);
        CHECK(oracles::max_abs_diff(b1, b2) <= 1e-14);

        // scale: the same IEEE multiply elementwise, so bit-identical.
        auto s1 = oracles::random_complex_vec(n, 9500 + n);
        auto s2 = s1;
        scalar.scale(s1.data(), 1.0 / 3.0, n);
        avx2.scale(s2.data(), 1.0 / 3.0, n);
        CHECK(s1 == s2);
    }
}

TEST_CASE("whole transforms agree across backends") {
    if (!k::available(k::Backend::Avx2)) {
        MESSAGE("AVX2 backend unavailable, skipping");
        return;
    }
    BackendGuard guard;
    for (std::size_t n : {16u, 63u, 256u}) {
        const auto v = oracles::random_complex_vec(n, 9600 + n);
        k::set_backend(k::Backend::Scalar);
        const auto naive_s = crtft::dft::dft_naive(v);
        const auto lagr_s = crtft::dft::idft_lagrange(v);
        k::set_backend(k::Backend::Avx2);
        const auto naive_a = crtft::dft::dft_naive(v);
        const auto lagr_a = crtft::dft::idft_lagrange(v);
        CHECK(oracles::max_abs_diff(naive_s, naive_a) <= 1e-12);
        CHECK(oracles::max_abs_diff(lagr_s, lagr_a) <= 1e-12);
    }
    const auto v = oracles::random_complex_vec(256, 9700);
    k::set_backend(k::Backend::Scalar);
    const auto f_s = crtft::dft::fft_radix2(v, crtft::dft::Direction::Forward);
    k::set_backend(k::Backend::Avx2);
    const auto f_a = crtft::dft::fft_radix2(v, crtft::dft::Direction::Forward);
    CHECK(oracles::max_abs_diff(f_s, f_a) <= 1e-12);
}
