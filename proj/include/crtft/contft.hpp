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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "crtft/dft.hpp"
#include "crtft/errors.hpp"

namespace crtft::contft {

using cplx = std::complex<double>;
using dft::ComplexVec;

/// Dual-grid geometry. The spatial window [-N/2, N/2] is cut into steps of
/// 1/M and the frequency window [-M/2, M/2] into steps of 1/N, giving MN
/// points each:
///   x_j = -N/2 + j/M,   y_k = -M/2 + k/N.
/// M*x_j and N*y_k then run over the integers -MN/2 .. MN/2 - 1 in order.
struct GridParams {
    std::int64_t big_n;  // N, even, >= 2
    std::int64_t big_m;  // M, even, >= 2
    std::int64_t size;   // MN
    std::int64_t half;   // w = MN/2

    static GridParams create(std::int64_t n, std::int64_t m);

    double x(std::int64_t j) const {
        return static_cast<double>(j - half) / static_cast<double>(big_m);
    }
    double y(std::int64_t k) const {
        return static_cast<double>(k - half) / static_cast<double>(big_n);
    }
};

/// f evaluated on the spatial grid: samples[j] = f(x_j).
struct SampledFunction {
    GridParams grid;
    ComplexVec samples;
};

/// Transform values on the frequency grid: values[k] ~ fhat(y_k).
struct Spectrum {
    GridParams grid;
    ComplexVec values;
};

/// A named function to push through the pipeline. analytic_transform is
/// empty when no closed-form transform is wired up.
struct TestFunction {
    std::string name;
    std::function<cplx(double)> evaluator;
    std::function<cplx(double)> analytic_transform;
};

/// exp(-pi (x/width)^2); transform width * exp(-pi (width y)^2).
TestFunction gaussian_function(double width = 1.0);
TestFunction zero_function();

/// Resolves "gaussian", "gaussian:<width>" or "zero"; throws UnknownFunction.
TestFunction builtin_function(std::string_view spec);

/// samples[j] = f(x_j); throws NonFiniteSample if the evaluator misbehaves.
SampledFunction sample(const TestFunction& f, GridParams grid);

/// values[k] = (1/M) sum_j samples[j] e^{-2 pi i (M x_j)(N y_k)/(MN)},
/// computed as: rotate the samples by w, length-MN DFT, rotate back, scale.
Spectrum forward(const SampledFunction& sampled);

/// samples[j] = (1/N) sum_k values[k] e^{+2 pi i (N y_k)(M x_j)/(MN)}.
/// Exact discrete inverse of forward up to rounding.
SampledFunction inverse(const Spectrum& spectrum);

/// sin(pi M x + pi x/N) / sin(pi x/N), continued with the value MN+1 at the
/// removable singularities x/N in Z.
double dirichlet_kernel(double x, GridParams grid);

/// (1/N) sum_k values[k]; approximates f(0) for spectra of sampled
/// rapidly-decreasing functions.
cplx recover_f0(const Spectrum& spectrum);

struct PoissonCheck {
    cplx lhs;    // sum of f over the integers in [-N/2, N/2)
    cplx rhs;    // sum of the spectrum at the integer frequencies y_{lN}
    double gap;  // |lhs - rhs|
};

/// Finite two-sided Poisson summation check on the grid.
PoissonCheck poisson_check(const TestFunction& f, GridParams grid);

}  // namespace crtft::contft
