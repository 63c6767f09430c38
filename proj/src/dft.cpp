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

#include "crtft/dft.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "crtft/crt.hpp"
#include "crtft/kernels.hpp"

namespace crtft::dft {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

ComplexVec conj_all(ComplexVec v) {
    for (cplx& z : v) z = std::conj(z);
    return v;
}

}  // namespace

RootOfUnityPlan::RootOfUnityPlan(std::size_t n_) : n(n_), powers(n_) {
    if (n == 0) throw EmptyInput("root-of-unity plan needs n >= 1");
    powers[0] = {1.0, 0.0};
    for (std::size_t k = 1; k < n; ++k)
        powers[k] = std::polar(1.0, -two_pi * static_cast<double>(k) / static_cast<double>(n));
    omega = n > 1 ? powers[1] : cplx{1.0, 0.0};
}

ComplexVec dft_naive(const ComplexVec& v) {
    const std::size_t n = v.size();
    if (n == 0) throw EmptyInput("dft of an empty vector");
    const RootOfUnityPlan plan(n);
    const auto& k = kernels::ops();

    ComplexVec out(n);
    ComplexVec row(n);  // omega^{jk} for the current k, gathered contiguous
    for (std::size_t f = 0; f < n; ++f) {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = plan.powers[idx];
            idx += f;
            if (idx >= n) idx -= n;
        }
        out[f] = k.cdot(v.data(), row.data(), n);
    }
    return out;
}

ComplexVec idft_naive(const ComplexVec& v) {
    ComplexVec out = conj_all(dft_naive(conj_all(v)));
    kernels::ops().scale(out.data(), 1.0 / static_cast<double>(v.size()), out.size());
    return out;
}

ComplexVec lagrange_units(std::size_t n) {
    if (n == 0) throw EmptyInput("lagrange units need n >= 1");
    const RootOfUnityPlan plan(n);
    ComplexVec u(n);
    for (std::size_t j = 0; j < n; ++j) {
        cplx prod{1.0, 0.0};
        for (std::size_t l = 0; l < n; ++l)
            if (l != j) prod *= plan.powers[j] - plan.powers[l];
        u[j] = 1.0 / prod;
    }
    return u;
}

ComplexVec idft_lagrange(const ComplexVec& spectrum) {
    const std::size_t n = spectrum.size();
    if (n == 0) throw EmptyInput("inverse dft of an empty vector");
    const RootOfUnityPlan plan(n);
    const ComplexVec units = lagrange_units(n);
    const auto& k = kernels::ops();

    ComplexVec coeffs(n, cplx{0.0, 0.0});
    ComplexVec row(n);  // coefficients of (X^n - 1)/(X - omega^f)
    for (std::size_t f = 0; f < n; ++f) {
        // row[q] = omega^{f(n-1-q)}; the exponent starts at (-f) mod n and
        // drops by f per step.
        std::size_t idx = f == 0 ? 0 : n - f;
        const std::size_t down = f;
        for (std::size_t q = 0; q < n; ++q) {
            row[q] = plan.powers[idx];
            idx = idx >= down ? idx - down : idx + n - down;
        }
        k.caxpy(coeffs.data(), spectrum[f] * units[f], row.data(), n);
    }
    return coeffs;
}

ComplexVec fft_radix2(const ComplexVec& v, Direction dir) {
    const std::size_t n = v.size();
    if (n == 0) throw EmptyInput("fft of an empty vector");
    if (!is_power_of_two(n))
        throw NotPowerOfTwo("radix-2 fft needs a power-of-two length, got " + std::to_string(n));

    // Bit-reversed copy.
    ComplexVec out(n);
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < bits; ++b) r |= ((j >> b) & 1) << (bits - 1 - b);
        out[r] = v[j];
    }

    const RootOfUnityPlan plan(n);
    const auto& k = kernels::ops();
    ComplexVec stage_tw;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = n / len;
        stage_tw.resize(half);
        for (std::size_t j = 0; j < half; ++j) {
            const cplx w = plan.powers[j * stride];
            stage_tw[j] = dir == Direction::Forward ? w : std::conj(w);
        }
        for (std::size_t start = 0; start < n; start += len)
            k.butterfly(&out[start], &out[start + half], stage_tw.data(), half);
    }
    if (dir == Direction::Inverse)
        k.scale(out.data(), 1.0 / static_cast<double>(n), n);
    return out;
}

namespace {

// Row/column transforms inside the prime-factor algorithm. Nested
// Good-Thomas recursion is out of scope, so composite non-power lengths
// fall back to the direct sum.
ComplexVec pfa_stage_dft(const ComplexVec& v) {
    return is_power_of_two(v.size()) ? fft_radix2(v, Direction::Forward) : dft_naive(v);
}

}  // namespace

ComplexVec fft_good_thomas(const ComplexVec& v, std::int64_t n1, std::int64_t n2) {
    const std::size_t n = v.size();
    if (n == 0) throw EmptyInput("fft of an empty vector");
    if (n1 < 1 || n2 < 1 || static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2) != n)
        throw LengthMismatch("factors " + std::to_string(n1) + "*" + std::to_string(n2) +
                             " do not multiply to the input length " + std::to_string(n));
    if (std::gcd(n1, n2) != 1)
        throw FactorsNotCoprime("factors " + std::to_string(n1) + " and " + std::to_string(n2) +
                                " share a divisor");
    if (n1 == 1 || n2 == 1) return pfa_stage_dft(v);

    const std::vector<crt::Integer> moduli = {crt::Integer(static_cast<long>(n1)),
                                              crt::Integer(static_cast<long>(n2))};
    const auto rows = static_cast<std::size_t>(n1);
    const auto cols = static_cast<std::size_t>(n2);

    // Input map: grid[(j mod n1)][(j mod n2)] = v[j].
    ComplexVec grid(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto r = crt::residues_of(crt::Integer(static_cast<unsigned long>(j)), moduli);
        grid[r[0].get_ui() * cols + r[1].get_ui()] = v[j];
    }

    // Row transforms (length n2), then column transforms (length n1).
    // No twiddles in between.
    ComplexVec scratch(cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::copy_n(grid.begin() + static_cast<std::ptrdiff_t>(r * cols), cols, scratch.begin());
        const ComplexVec t = pfa_stage_dft(scratch);
        std::copy(t.begin(), t.end(), grid.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    ComplexVec column(rows);
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t r = 0; r < rows; ++r) column[r] = grid[r * cols + c];
        const ComplexVec t = pfa_stage_dft(column);
        for (std::size_t r = 0; r < rows; ++r) grid[r * cols + c] = t[r];
    }

    // Output map: out[k] = grid[k1][k2] where k solves
    // k = k1*n2 (mod n1), k = k2*n1 (mod n2).
    ComplexVec out(n);
    for (std::size_t k1 = 0; k1 < rows; ++k1) {
        for (std::size_t k2 = 0; k2 < cols; ++k2) {
            const crt::Integer r1(static_cast<unsigned long>((k1 * cols) % rows));
            const crt::Integer r2(static_cast<unsigned long>((k2 * rows) % cols));
            const crt::CrtSolution s = crt::solve(crt::CongruenceSystem(moduli, {r1, r2}));
            out[s.value.get_ui()] = grid[k1 * cols + k2];
        }
    }
    return out;
}

std::optional<std::pair<std::int64_t, std::int64_t>> coprime_split(std::int64_t n) {
    if (n < 2) return std::nullopt;
    std::int64_t smallest = 0;
    std::int64_t rest = n;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            std::int64_t q = 1;
            while (rest % p == 0) {
                q *= p;
                rest /= p;
            }
            smallest = smallest == 0 || q < smallest ? q : smallest;
        }
    }
    if (rest > 1) smallest = smallest == 0 || rest < smallest ? rest : smallest;
    if (smallest == n) return std::nullopt;  // prime power
    return std::make_pair(smallest, n / smallest);
}

ComplexVec dft_auto(const ComplexVec& v) {
    const std::size_t n = v.size();
    if (is_power_of_two(n)) return fft_radix2(v, Direction::Forward);
    if (const auto split = coprime_split(static_cast<std::int64_t>(n)))
        return fft_good_thomas(v, split->first, split->second);
    return dft_naive(v);
}

ComplexVec idft_auto(const ComplexVec& v) {
    ComplexVec out = conj_all(dft_auto(conj_all(v)));
    kernels::ops().scale(out.data(), 1.0 / static_cast<double>(v.size()), out.size());
    return out;
}

}  // namespace crtft::dft
