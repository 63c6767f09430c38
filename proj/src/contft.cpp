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

#include "crtft/contft.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "crtft/kernels.hpp"

namespace crtft::contft {

namespace {

constexpr double pi = std::numbers::pi;

// Cyclic left rotation by half the length; since half = size/2 this is its
// own inverse (the fftshift pattern).
ComplexVec rotate_half(const ComplexVec& v, std::int64_t half) {
    const std::size_t n = v.size();
    const auto w = static_cast<std::size_t>(half);
    ComplexVec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = v[(i + w) % n];
    return out;
}

void check_length(const GridParams& grid, std::size_t got) {
    if (got != static_cast<std::size_t>(grid.size))
        throw LengthMismatch("grid expects " + std::to_string(grid.size) + " values, got " +
                             std::to_string(got));
}

}  // namespace

GridParams GridParams::create(std::int64_t n, std::int64_t m) {
    if (n < 2 || m < 2 || n % 2 != 0 || m % 2 != 0)
        throw DomainError("grid parameters must be even integers >= 2, got N=" +
                          std::to_string(n) + " M=" + std::to_string(m));
    return GridParams{n, m, n * m, n * m / 2};
}

TestFunction gaussian_function(double width) {
    TestFunction f;
    f.name = width == 1.0 ? "gaussian" : "gaussian:" + std::to_string(width);
    f.evaluator = [width](double x) { return cplx{std::exp(-pi * (x / width) * (x / width)), 0.0}; };
    f.analytic_transform = [width](double y) {
        return cplx{width * std::exp(-pi * (width * y) * (width * y)), 0.0};
    };
    return f;
}

TestFunction zero_function() {
    TestFunction f;
    f.name = "zero";
    f.evaluator = [](double) { return cplx{0.0, 0.0}; };
    f.analytic_transform = [](double) { return cplx{0.0, 0.0}; };
    return f;
}

TestFunction builtin_function(std::string_view spec) {
    if (spec == "zero") return zero_function();
    if (spec == "gaussian") return gaussian_function();
    constexpr std::string_view prefix = "gaussian:";
    if (spec.substr(0, prefix.size()) == prefix) {
        const std::string_view arg = spec.substr(prefix.size());
        double width = 0.0;
        const auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), width);
        if (ec != std::errc{} || end != arg.data() + arg.size() || !(width > 0.0))
            throw UnknownFunction("bad gaussian width '" + std::string(arg) + "'");
        return gaussian_function(width);
    }
    throw UnknownFunction("unknown test function '" + std::string(spec) +
                          "' (try gaussian, gaussian:<width>, zero)");
}

SampledFunction sample(const TestFunction& f, GridParams grid) {
    ComplexVec samples(static_cast<std::size_t>(grid.size));
    for (std::int64_t j = 0; j < grid.size; ++j) {
        const cplx v = f.evaluator(grid.x(j));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw NonFiniteSample(f.name + " is not finite at x=" + std::to_string(grid.x(j)));
        samples[static_cast<std::size_t>(j)] = v;
    }
    return SampledFunction{grid, std::move(samples)};
}

Spectrum forward(const SampledFunction& sampled) {
    const GridParams& g = sampled.grid;
    check_length(g, sampled.samples.size());
    ComplexVec values = rotate_half(dft::dft_auto(rotate_half(sampled.samples, g.half)), g.half);
    kernels::ops().scale(values.data(), 1.0 / static_cast<double>(g.big_m), values.size());
    return Spectrum{g, std::move(values)};
}

SampledFunction inverse(const Spectrum& spectrum) {
    const GridParams& g = spectrum.grid;
    check_length(g, spectrum.values.size());
    // Unnormalized conjugate transform: sum_k buf[k] omega^{-kj}.
    ComplexVec buf = rotate_half(spectrum.values, g.half);
    for (cplx& z : buf) z = std::conj(z);
    ComplexVec t = dft::dft_auto(buf);
    for (cplx& z : t) z = std::conj(z);
    ComplexVec samples = rotate_half(t, g.half);
    kernels::ops().scale(samples.data(), 1.0 / static_cast<double>(g.big_n), samples.size());
    return SampledFunction{g, std::move(samples)};
}

double dirichlet_kernel(double x, GridParams grid) {
    const double t = x / static_cast<double>(grid.big_n);
    if (std::abs(t - std::round(t)) < 1e-9)
        return static_cast<double>(grid.size) + 1.0;
    return std::sin(pi * static_cast<double>(grid.big_m) * x + pi * t) / std::sin(pi * t);
}

namespace {

// Pairwise summation; the spectral sums run over MN terms and the plain
// left-to-right order measurably loses the tail cancellations.
cplx pairwise_sum(const cplx* v, std::size_t n) {
    if (n <= 8) {
        cplx s{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

}  // namespace

cplx recover_f0(const Spectrum& spectrum) {
    return pairwise_sum(spectrum.values.data(), spectrum.values.size()) /
           static_cast<double>(spectrum.grid.big_n);
}

PoissonCheck poisson_check(const TestFunction& f, GridParams grid) {
    cplx lhs{0.0, 0.0};
    for (std::int64_t t = -grid.big_n / 2; t < grid.big_n / 2; ++t)
        lhs += f.evaluator(static_cast<double>(t));

    const Spectrum sp = forward(sample(f, grid));
    cplx rhs{0.0, 0.0};
    for (std::int64_t l = 0; l < grid.big_m; ++l)
        rhs += sp.values[static_cast<std::size_t>(l * grid.big_n)];

    return PoissonCheck{lhs, rhs, std::abs(lhs - rhs)};
}

}  // namespace crtft::contft
