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

#pragma once

#include <complex>
#include <cstddef>

namespace crtft::kernels {

using cplx = std::complex<double>;

/// Data-parallel complex-arithmetic primitives behind the transforms.
/// The scalar implementations are the semantic reference; the AVX2 variants
/// must agree with them within floating-point reassociation error and are
/// equivalence-tested against them.
struct Ops {
    const char* name;
    /// sum_i a[i]*b[i], no conjugation.
    cplx (*cdot)(const cplx* a, const cplx* b, std::size_t n);
    /// y[i] += alpha*x[i]
    void (*caxpy)(cplx* y, cplx alpha, const cplx* x, std::size_t n);
    /// Radix-2 stage: t = bot[i]*tw[i]; bot[i] = top[i] - t; top[i] += t.
    void (*butterfly)(cplx* top, cplx* bot, const cplx* tw, std::size_t n);
    /// v[i] *= s
    void (*scale)(cplx* v, double s, std::size_t n);
};

enum class Backend { Scalar, Avx2 };

/// True when the backend was compiled in and the CPU supports it.
bool available(Backend b);

/// Table for a specific backend; throws std::runtime_error if unavailable.
const Ops& ops(Backend b);

/// Active table. Defaults to the fastest available backend.
const Ops& ops();

Backend active_backend();

/// Process-wide override, mainly for equivalence tests.
void set_backend(Backend b);

}  // namespace crtft::kernels
