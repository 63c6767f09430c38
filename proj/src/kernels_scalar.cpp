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

// Scalar reference kernels. Plain sequential loops over explicit re/im
// pairs; the SIMD backends are measured against these.

#include "crtft/kernels.hpp"

namespace crtft::kernels {

namespace {

cplx scalar_cdot(const cplx* a, const cplx* b, std::size_t n) {
    double sr = 0.0, si = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        sr += ar * br - ai * bi;
        si += ar * bi + ai * br;
    }
    return {sr, si};
}

void scalar_caxpy(cplx* y, cplx alpha, const cplx* x, std::size_t n) {
    const double cr = alpha.real(), ci = alpha.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] = {y[i].real() + cr * xr - ci * xi, y[i].imag() + cr * xi + ci * xr};
    }
}

void scalar_butterfly(cplx* top, cplx* bot, const cplx* tw, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double br = bot[i].real(), bi = bot[i].imag();
        const double wr = tw[i].real(), wi = tw[i].imag();
        const double tr = br * wr - bi * wi;
        const double ti = br * wi + bi * wr;
        bot[i] = {top[i].real() - tr, top[i].imag() - ti};
        top[i] = {top[i].real() + tr, top[i].imag() + ti};
    }
}

void scalar_scale(cplx* v, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) v[i] = {v[i].real() * s, v[i].imag() * s};
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops table{"scalar", scalar_cdot, scalar_caxpy, scalar_butterfly, scalar_scale};
    return table;
}

}  // namespace crtft::kernels
