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

// AVX2+FMA kernels, two complex doubles per 256-bit lane, interleaved
// (re0, im0, re1, im1). This translation unit is compiled with
// -mavx2 -mfma and only ever entered after a CPUID check in kernels.cpp.

#include "crtft/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace crtft::kernels {

namespace {

// (a*b) on two packed complex values.
// fmaddsub: even lanes ar*b - ai*bswap, odd lanes ar*b + ai*bswap,
// which is exactly (ar*br - ai*bi, ar*bi + ai*br).
inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d ar = _mm256_movedup_pd(a);
    const __m256d ai = _mm256_permute_pd(a, 0xF);
    const __m256d bswap = _mm256_permute_pd(b, 0x5);
    return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bswap));
}

inline const double* dptr(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* dptr(cplx* p) { return reinterpret_cast<double*>(p); }

cplx avx2_cdot(const cplx* a, const cplx* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(dptr(a + i));
        const __m256d vb = _mm256_loadu_pd(dptr(b + i));
        acc = _mm256_add_pd(acc, cmul(va, vb));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double sr = lanes[0] + lanes[2];
    double si = lanes[1] + lanes[3];
    for (; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        sr += ar * br - ai * bi;
        si += ar * bi + ai * br;
    }
    return {sr, si};
}

void avx2_caxpy(cplx* y, cplx alpha, const cplx* x, std::size_t n) {
    const __m256d al = _mm256_set_pd(alpha.imag(), alpha.real(), alpha.imag(), alpha.real());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(dptr(x + i));
        const __m256d vy = _mm256_loadu_pd(dptr(y + i));
        _mm256_storeu_pd(dptr(y + i), _mm256_add_pd(vy, cmul(al, vx)));
    }
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] = {y[i].real() + alpha.real() * xr - alpha.imag() * xi,
                y[i].imag() + alpha.real() * xi + alpha.imag() * xr};
    }
}

void avx2_butterfly(cplx* top, cplx* bot, const cplx* tw, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d t = cmul(_mm256_loadu_pd(dptr(bot + i)), _mm256_loadu_pd(dptr(tw + i)));
        const __m256d u = _mm256_loadu_pd(dptr(top + i));
        _mm256_storeu_pd(dptr(bot + i), _mm256_sub_pd(u, t));
        _mm256_storeu_pd(dptr(top + i), _mm256_add_pd(u, t));
    }
    for (; i < n; ++i) {
        const double br = bot[i].real(), bi = bot[i].imag();
        const double wr = tw[i].real(), wi = tw[i].imag();
        const double tr = br * wr - bi * wi;
        const double ti = br * wi + bi * wr;
        bot[i] = {top[i].real() - tr, top[i].imag() - ti};
        top[i] = {top[i].real() + tr, top[i].imag() + ti};
    }
}

void avx2_scale(cplx* v, double s, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        _mm256_storeu_pd(dptr(v + i), _mm256_mul_pd(_mm256_loadu_pd(dptr(v + i)), vs));
    for (; i < n; ++i) v[i] = {v[i].real() * s, v[i].imag() * s};
}

}  // namespace

const Ops* avx2_ops() {
    static const Ops table{"avx2", avx2_cdot, avx2_caxpy, avx2_butterfly, avx2_scale};
    return &table;
}

}  // namespace crtft::kernels

#else

namespace crtft::kernels {

const Ops* avx2_ops() { return nullptr; }

}  // namespace crtft::kernels

#endif
