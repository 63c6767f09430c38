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

// Command-line front end. Exit codes: 0 success, 1 usage or parse error,
// 2 domain-constraint violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "crtft/contft.hpp"
#include "crtft/crt.hpp"
#include "crtft/csv.hpp"
#include "crtft/dft.hpp"
#include "crtft/errors.hpp"

namespace {

using crtft::DomainError;
using crtft::ParseError;
using crtft::UsageError;
using crtft::dft::ComplexVec;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            items.push_back(s.substr(start));
            return items;
        }
        items.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
}

std::vector<crtft::crt::Integer> parse_integer_list(const std::string& s) {
    std::vector<crtft::crt::Integer> out;
    for (const std::string& item : split_list(s)) {
        try {
            out.emplace_back(item);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad integer '" + item + "' in list '" + s + "'");
        }
    }
    return out;
}

ComplexVec read_input(const std::string& path) {
    if (path.empty() || path == "-") return crtft::csv::read_vector(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    return crtft::csv::read_vector(in);
}

// Writes through a std::ostream chosen by path ("-" = stdout).
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file '" + path + "'");
    fn(out);
}

struct DftArgs {
    std::string input = "-";
    std::string output = "-";
    std::string method = "naive";
    std::string factors;
    bool inverse = false;
};

ComplexVec apply_inverse_of(const ComplexVec& v, const std::function<ComplexVec(const ComplexVec&)>& fwd) {
    ComplexVec c(v);
    for (auto& z : c) z = std::conj(z);
    ComplexVec t = fwd(c);
    for (auto& z : t) z = std::conj(z);
    const double s = 1.0 / static_cast<double>(t.size());
    for (auto& z : t) z *= s;
    return t;
}

int run_dft(const DftArgs& args) {
    const ComplexVec v = read_input(args.input);

    std::function<ComplexVec(const ComplexVec&)> fwd;
    if (args.method == "naive") {
        fwd = [](const ComplexVec& in) { return crtft::dft::dft_naive(in); };
    } else if (args.method == "radix2") {
        fwd = [](const ComplexVec& in) {
            return crtft::dft::fft_radix2(in, crtft::dft::Direction::Forward);
        };
    } else if (args.method == "good-thomas") {
        std::int64_t n1 = 0, n2 = 0;
        if (!args.factors.empty()) {
            const auto parts = parse_integer_list(args.factors);
            if (parts.size() != 2 || !parts[0].fits_slong_p() || !parts[1].fits_slong_p())
                throw ParseError("--factors wants two integers, e.g. 3,5");
            n1 = parts[0].get_si();
            n2 = parts[1].get_si();
        } else {
            const auto split = crtft::dft::coprime_split(static_cast<std::int64_t>(v.size()));
            if (!split)
                throw DomainError("length " + std::to_string(v.size()) +
                                  " has no coprime factorization; pass --factors or another --method");
            n1 = split->first;
            n2 = split->second;
        }
        fwd = [n1, n2](const ComplexVec& in) { return crtft::dft::fft_good_thomas(in, n1, n2); };
    } else {
        throw ParseError("unknown method '" + args.method + "'");
    }

    ComplexVec out;
    if (!args.inverse)
        out = fwd(v);
    else if (args.method == "radix2")
        out = crtft::dft::fft_radix2(v, crtft::dft::Direction::Inverse);
    else
        out = apply_inverse_of(v, fwd);

    with_output(args.output, [&](std::ostream& os) { crtft::csv::write_vector(os, out); });
    return 0;
}

struct ContftArgs {
    std::string direction;
    std::string function;
    std::string input;
    std::string output = "-";
    std::int64_t n = 16;
    std::int64_t m = 16;
};

int run_contft(const ContftArgs& args) {
    const auto grid = crtft::contft::GridParams::create(args.n, args.m);
    const std::size_t size = static_cast<std::size_t>(grid.size);

    ComplexVec data;
    if (!args.function.empty() && !args.input.empty())
        throw UsageError("--function and --input are mutually exclusive");

    if (args.direction == "forward") {
        crtft::contft::SampledFunction sf{grid, {}};
        if (!args.function.empty()) {
            sf = crtft::contft::sample(crtft::contft::builtin_function(args.function), grid);
        } else {
            sf.samples = read_input(args.input);
            if (sf.samples.size() != size)
                throw crtft::LengthMismatch("grid N*M = " + std::to_string(grid.size) +
                                            " but input has " + std::to_string(sf.samples.size()) +
                                            " rows");
        }
        const auto spectrum = crtft::contft::forward(sf);
        std::vector<double> ys(size);
        for (std::size_t k = 0; k < size; ++k) ys[k] = grid.y(static_cast<std::int64_t>(k));
        with_output(args.output,
                    [&](std::ostream& os) { crtft::csv::write_grid(os, 'y', ys, spectrum.values); });
    } else {
        if (!args.function.empty())
            throw UsageError("inverse needs --input spectrum values, not --function");
        crtft::contft::Spectrum sp{grid, read_input(args.input)};
        if (sp.values.size() != size)
            throw crtft::LengthMismatch("grid N*M = " + std::to_string(grid.size) +
                                        " but input has " + std::to_string(sp.values.size()) +
                                        " rows");
        const auto sampled = crtft::contft::inverse(sp);
        std::vector<double> xs(size);
        for (std::size_t j = 0; j < size; ++j) xs[j] = grid.x(static_cast<std::int64_t>(j));
        with_output(args.output,
                    [&](std::ostream& os) { crtft::csv::write_grid(os, 'x', xs, sampled.samples); });
    }
    return 0;
}

std::string format_complex(const std::complex<double>& z) {
    return "(" + crtft::csv::format_double(z.real()) + "," + crtft::csv::format_double(z.imag()) +
           ")";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chinese remainder theorem, DFT/FFT, and a CRT-style discretization of the "
                 "continuous Fourier transform"};
    app.require_subcommand(1);

    // crt
    std::string mod_list, res_list;
    CLI::App* crt_cmd = app.add_subcommand("crt", "Solve a system of congruences");
    crt_cmd->add_option("--mod", mod_list, "Comma-separated pairwise-coprime moduli")->required();
    crt_cmd->add_option("--res", res_list, "Comma-separated residues, one per modulus")->required();

    // dft
    DftArgs dft_args;
    CLI::App* dft_cmd = app.add_subcommand("dft", "Transform a CSV vector");
    dft_cmd->add_option("--input", dft_args.input, "Input CSV path, - for stdin");
    dft_cmd->add_option("--output", dft_args.output, "Output CSV path, - for stdout");
    dft_cmd->add_option("--method", dft_args.method, "naive, radix2 or good-thomas")
        ->check(CLI::IsMember({"naive", "radix2", "good-thomas"}));
    dft_cmd->add_option("--factors", dft_args.factors, "Coprime factor pair n1,n2 for good-thomas");
    dft_cmd->add_flag("--inverse", dft_args.inverse, "Apply the normalized inverse transform");

    // contft
    ContftArgs ft_args;
    CLI::App* ft_cmd = app.add_subcommand("contft", "Discretized continuous Fourier transform");
    ft_cmd->add_option("direction", ft_args.direction, "forward or inverse")
        ->required()
        ->check(CLI::IsMember({"forward", "inverse"}));
    ft_cmd->add_option("--function", ft_args.function, "Built-in function (gaussian[:width], zero)");
    ft_cmd->add_option("--input", ft_args.input, "CSV of N*M values, - for stdin");
    ft_cmd->add_option("--output", ft_args.output, "Output CSV path, - for stdout");
    ft_cmd->add_option("--n", ft_args.n, "Grid parameter N (even, >= 2)");
    ft_cmd->add_option("--m", ft_args.m, "Grid parameter M (even, >= 2)");

    // poisson
    std::string poisson_function = "gaussian";
    std::int64_t poisson_n = 16, poisson_m = 16;
    CLI::App* poisson_cmd = app.add_subcommand("poisson", "Finite Poisson summation check");
    poisson_cmd->add_option("--function", poisson_function, "Built-in function name");
    poisson_cmd->add_option("--n", poisson_n, "Grid parameter N");
    poisson_cmd->add_option("--m", poisson_m, "Grid parameter M");

    // dirichlet
    double dirichlet_x = 0.0;
    std::int64_t dirichlet_n = 16, dirichlet_m = 16;
    CLI::App* dirichlet_cmd = app.add_subcommand("dirichlet", "Evaluate the Dirichlet kernel");
    dirichlet_cmd->add_option("--x", dirichlet_x, "Evaluation point");
    dirichlet_cmd->add_option("--n", dirichlet_n, "Grid parameter N");
    dirichlet_cmd->add_option("--m", dirichlet_m, "Grid parameter M");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (crt_cmd->parsed()) {
            const auto moduli = parse_integer_list(mod_list);
            const auto residues = parse_integer_list(res_list);
            const auto solution = crtft::crt::solve(crtft::crt::CongruenceSystem(moduli, residues));
            const auto use = crtft::crt::use_relation(moduli);
            std::cout << "n=" << solution.value.get_str() << "\n";
            std::cout << "gamma=" << solution.gamma.get_str() << "\n";
            for (std::size_t j = 0; j < solution.unit_coeffs.size(); ++j)
                std::cout << "u_" << j << "=" << solution.unit_coeffs[j].get_str() << "\n";
            std::cout << "ell=" << solution.use_index.get_str() << "\n";
            std::cout << "use=" << crtft::crt::use_class_name(use.classification) << "\n";
            return 0;
        }
        if (dft_cmd->parsed()) return run_dft(dft_args);
        if (ft_cmd->parsed()) return run_contft(ft_args);
        if (poisson_cmd->parsed()) {
            const auto grid = crtft::contft::GridParams::create(poisson_n, poisson_m);
            const auto f = crtft::contft::builtin_function(poisson_function);
            const auto check = crtft::contft::poisson_check(f, grid);
            std::cout << "lhs=" << format_complex(check.lhs) << "\n";
            std::cout << "rhs=" << format_complex(check.rhs) << "\n";
            std::cout << "gap=" << crtft::csv::format_double(check.gap) << "\n";
            return 0;
        }
        if (dirichlet_cmd->parsed()) {
            const auto grid = crtft::contft::GridParams::create(dirichlet_n, dirichlet_m);
            std::cout << crtft::csv::format_double(crtft::contft::dirichlet_kernel(dirichlet_x, grid))
                      << "\n";
            return 0;
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
