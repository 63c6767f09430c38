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
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "crtft/errors.hpp"

namespace crtft::dft {

using cplx = std::complex<double>;
using ComplexVec = std::vector<cplx>;

enum class Direction { Forward, Inverse };

/// Primitive n-th root omega = e^{-2 pi i / n} with the full power table
/// omega^0 .. omega^{n-1}. Powers are evaluated trigonometrically per index,
/// so |omega^k| = 1 to machine precision for every k.
struct RootOfUnityPlan {
    explicit RootOfUnityPlan(std::size_t n);

    std::size_t n;
    cplx omega;
    std::vector<cplx> powers;
};

/// Direct O(n^2) transform: out[k] = sum_j v[j] * omega^{jk}.
/// The reference every fast path is tested against.
ComplexVec dft_naive(const ComplexVec& v);

/// Normalized inverse of dft_naive: out[j] = (1/n) sum_k v[k] * omega^{-jk}.
ComplexVec idft_naive(const ComplexVec& v);

/// Interpolation weights u_j = 1 / prod_{l != j} (omega^j - omega^l),
/// evaluated by the explicit product. Closed form: omega^j / n.
ComplexVec lagrange_units(std::size_t n);

/// Inverse DFT by interpolation: reconstructs the coefficients of
/// P(X) = sum_k spectrum[k] * u_k * (X^n - 1)/(X - omega^k), with each
/// quotient expanded through the geometric identity
/// (X^n - 1)/(X - omega^k) = sum_q omega^{k(n-1-q)} X^q.
ComplexVec idft_lagrange(const ComplexVec& spectrum);

/// Iterative radix-2 transform; n must be a power of two. The inverse
/// direction is the normalized conjugate transform, so
/// fft_radix2(fft_radix2(v, Forward), Inverse) == v.
ComplexVec fft_radix2(const ComplexVec& v, Direction dir);

/// Prime-factor transform for n = n1*n2 with gcd(n1, n2) = 1. Index
/// permutations come from the integer CRT (input j -> (j mod n1, j mod n2),
/// output reassembled by solving the congruence system); there are no
/// twiddle multiplications between the two stages.
ComplexVec fft_good_thomas(const ComplexVec& v, std::int64_t n1, std::int64_t n2);

/// Splits n into (smallest prime-power factor, cofactor); the two parts are
/// coprime by construction. Empty when n is 1 or a prime power.
std::optional<std::pair<std::int64_t, std::int64_t>> coprime_split(std::int64_t n);

/// Forward transform through the best applicable implementation:
/// radix-2 for powers of two, Good-Thomas when a coprime split exists,
/// otherwise the direct sum.
ComplexVec dft_auto(const ComplexVec& v);

/// Normalized inverse of dft_auto, for any length.
ComplexVec idft_auto(const ComplexVec& v);

}  // namespace crtft::dft
