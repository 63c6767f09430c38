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

#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "crtft/crt.hpp"
#include "support/oracles.hpp"

using crtft::crt::CongruenceSystem;
using crtft::crt::CrtSolution;
using crtft::crt::Integer;
using crtft::crt::UseClass;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

std::vector<std::uint64_t> to_u64(const std::vector<Integer>& xs) {
    std::vector<std::uint64_t> out;
    for (const Integer& x : xs) out.push_back(x.get_ui());
    return out;
}

}  // namespace

TEST_CASE("mod_inverse on the worked examples") {
    CHECK(crtft::crt::mod_inverse(1, 7) == 1);
    CHECK(crtft::crt::mod_inverse(35, 3) == 2);
    CHECK_THROWS_AS(crtft::crt::mod_inverse(2, 4), crtft::NotCoprime);
    CHECK_THROWS_AS(crtft::crt::mod_inverse(0, 5), crtft::NotCoprime);
    CHECK_THROWS_AS(crtft::crt::mod_inverse(3, 1), crtft::InvalidModulus);
    CHECK_THROWS_AS(crtft::crt::mod_inverse(3, 0), crtft::InvalidModulus);
    // negative a is reduced first: -2 = 3 (mod 5), 3*2 = 6 = 1
    CHECK(crtft::crt::mod_inverse(-2, 5) == 2);
}

TEST_CASE("mod_inverse against exhaustive search, many random coprime pairs") {
    std::mt19937_64 rng(7001);
    std::uniform_int_distribution<std::uint64_t> mdist(2, 2000);
    int done = 0;
    while (done < 10000) {
        const std::uint64_t m = mdist(rng);
        const std::uint64_t a = rng() % (10 * m) + 1;
        const auto expected = oracles::brute_force_inverse(a, m);
        if (!expected) continue;
        const Integer got = crtft::crt::mod_inverse(Integer(static_cast<unsigned long>(a)),
                                                    Integer(static_cast<unsigned long>(m)));
        CHECK(got.get_ui() == *expected);
        CHECK(got >= 1);
        CHECK(got < Integer(static_cast<unsigned long>(m)));
        ++done;
    }
}

TEST_CASE("mod_inverse with arbitrary-precision operands") {
    const Integer m("170141183460469231731687303715884105727");  // 2^127 - 1, prime
    const Integer a("123456789012345678901234567890");
    const Integer v = crtft::crt::mod_inverse(a, m);
    CHECK(v >= 1);
    CHECK(v < m);
    Integer prod = (a * v) % m;
    CHECK(prod == 1);
}

TEST_CASE("residues_of on the worked examples") {
    CHECK(crtft::crt::residues_of(23, ints({3, 5, 7})) == ints({2, 3, 2}));
    CHECK(crtft::crt::residues_of(0, ints({3, 5, 7})) == ints({0, 0, 0}));
    CHECK(crtft::crt::residues_of(1, ints({4, 9, 25})) == ints({1, 1, 1}));
    CHECK_THROWS_AS(crtft::crt::residues_of(5, ints({4, 6})), crtft::NotPairwiseCoprime);
    CHECK_THROWS_AS(crtft::crt::residues_of(5, ints({1, 3})), crtft::InvalidModulus);
    CHECK_THROWS_AS(crtft::crt::residues_of(5, {}), crtft::EmptyInput);
}

TEST_CASE("unit_coefficients frozen by the brute-force oracle") {
    CHECK(crtft::crt::unit_coefficients(ints({3, 5, 7})) == ints({2, 1, 1}));
    CHECK(crtft::crt::unit_coefficients(ints({5})) == ints({1}));
    // Exhaustive search gives 3^{-1} mod 2 = 1 and 2^{-1} mod 3 = 2.
    CHECK(crtft::crt::unit_coefficients(ints({2, 3})) == ints({1, 2}));

    // Cross-check every coefficient against the exhaustive-search oracle.
    for (const auto& moduli : {ints({3, 5, 7}), ints({2, 3}), ints({4, 9, 25}), ints({16, 27, 35})}) {
        Integer gamma = 1;
        for (const auto& m : moduli) gamma *= m;
        const auto u = crtft::crt::unit_coefficients(moduli);
        for (std::size_t j = 0; j < moduli.size(); ++j) {
            const std::uint64_t mj = moduli[j].get_ui();
            const Integer cof = gamma / moduli[j];
            const auto expect = oracles::brute_force_inverse(cof.get_ui() % mj, mj);
            REQUIRE(expect.has_value());
            CHECK(u[j].get_ui() == *expect);
        }
    }
}

TEST_CASE("use_relation classification and exactness") {
    const auto r357 = crtft::crt::use_relation(ints({3, 5, 7}));
    CHECK(r357.ell == 1);
    CHECK(r357.classification == UseClass::PositiveUse);

    const auto r5 = crtft::crt::use_relation(ints({5}));
    CHECK(r5.ell == 0);
    CHECK(r5.classification == UseClass::Degenerate);

    // {2,3}: u = {1,2}, so 1*3 + 2*2 = 7 = 1 + 1*6.
    const auto r23 = crtft::crt::use_relation(ints({2, 3}));
    CHECK(r23.ell == 1);
    CHECK(r23.classification == UseClass::PositiveUse);

    CHECK(std::string(crtft::crt::use_class_name(UseClass::PositiveUse)) == "positive use");
    CHECK(std::string(crtft::crt::use_class_name(UseClass::UniversalUse)) == "universal use");
    CHECK(std::string(crtft::crt::use_class_name(UseClass::Degenerate)) == "degenerate");
}

TEST_CASE("solve on the worked examples and the brute-force oracle") {
    const auto sol = crtft::crt::solve(CongruenceSystem(ints({3, 5, 7}), ints({2, 3, 2})));
    CHECK(sol.value == 23);
    CHECK(sol.gamma == 105);
    CHECK(sol.unit_coeffs == ints({2, 1, 1}));
    CHECK(sol.use_index == 1);
    CHECK(*oracles::brute_force_crt({3, 5, 7}, {2, 3, 2}) == 23);

    CHECK(crtft::crt::solve(CongruenceSystem(ints({9}), ints({0}))).value == 0);
    CHECK(crtft::crt::solve(CongruenceSystem(ints({4, 9, 25}), ints({1, 1, 1}))).value == 1);
}

TEST_CASE("system construction rejects bad input") {
    CHECK_THROWS_AS(CongruenceSystem(ints({4, 6}), ints({1, 1})), crtft::NotPairwiseCoprime);
    CHECK_THROWS_AS(CongruenceSystem(ints({3, 5}), ints({3, 1})), crtft::ResidueOutOfRange);
    CHECK_THROWS_AS(CongruenceSystem(ints({3, 5}), ints({-1, 1})), crtft::ResidueOutOfRange);
    CHECK_THROWS_AS(CongruenceSystem(ints({3, 5}), ints({1})), crtft::LengthMismatch);
    CHECK_THROWS_AS(CongruenceSystem({}, {}), crtft::EmptyInput);
}

TEST_CASE("solution invariants hold") {
    std::mt19937_64 rng(7002);
    const auto moduli = ints({16, 9, 5, 7, 11});
    Integer gamma = 1;
    for (const auto& m : moduli) gamma *= m;
    for (int round = 0; round < 200; ++round) {
        std::vector<Integer> residues;
        for (const auto& m : moduli)
            residues.emplace_back(static_cast<unsigned long>(rng() % m.get_ui()));
        const CrtSolution sol = crtft::crt::solve(CongruenceSystem(moduli, residues));
        CHECK(sol.value >= 0);
        CHECK(sol.value < sol.gamma);
        Integer use_sum = 0;
        for (std::size_t j = 0; j < moduli.size(); ++j) {
            CHECK(sol.unit_coeffs[j] >= 1);
            CHECK(sol.unit_coeffs[j] < moduli[j]);
            CHECK(sol.value % moduli[j] == residues[j]);
            use_sum += sol.unit_coeffs[j] * (sol.gamma / moduli[j]);
        }
        CHECK(use_sum == 1 + sol.use_index * sol.gamma);
    }
}

TEST_CASE("round-trip: solve(residues_of(n)) == n") {
    // Exhaustive below 10^4.
    for (const auto& moduli : {ints({3, 5, 7}), ints({7, 11, 13})}) {
        Integer gamma = 1;
        for (const auto& m : moduli) gamma *= m;
        for (Integer n = 0; n < gamma; ++n) {
            const auto sol = crtft::crt::solve(
                CongruenceSystem(moduli, crtft::crt::residues_of(n, moduli)));
            REQUIRE(sol.value == n);
        }
    }

    // Random draws for a gamma far beyond 64 bits.
    const auto moduli = ints({2147483647, 2147483629, 2147483587, 97, 89});
    Integer gamma = 1;
    for (const auto& m : moduli) gamma *= m;
    gmp_randclass rnd(gmp_randinit_default);
    rnd.seed(7003);
    for (int round = 0; round < 100; ++round) {
        const Integer n = rnd.get_z_range(gamma);
        const auto sol =
            crtft::crt::solve(CongruenceSystem(moduli, crtft::crt::residues_of(n, moduli)));
        REQUIRE(sol.value == n);
    }
}

TEST_CASE("solve matches the linear scan for small products") {
    std::mt19937_64 rng(7004);
    const std::vector<std::vector<Integer>> pools = {
        ints({4, 9, 25}), ints({8, 15, 49}), ints({3, 7, 5, 11, 13}), ints({32, 45, 49, 11})};
    for (const auto& moduli : pools) {
        for (int round = 0; round < 25; ++round) {
            std::vector<Integer> residues;
            for (const auto& m : moduli)
                residues.emplace_back(static_cast<unsigned long>(rng() % m.get_ui()));
            const auto sol = crtft::crt::solve(CongruenceSystem(moduli, residues));
            const auto brute = oracles::brute_force_crt(to_u64(moduli), to_u64(residues));
            REQUIRE(brute.has_value());
            CHECK(sol.value.get_ui() == *brute);
        }
    }
}

TEST_CASE("residue map is a ring homomorphism") {
    std::mt19937_64 rng(7005);
    const auto moduli = ints({16, 9, 5, 49, 11});
    Integer gamma = 1;
    for (const auto& m : moduli) gamma *= m;
    gmp_randclass rnd(gmp_randinit_default);
    rnd.seed(7006);
    for (int round = 0; round < 100; ++round) {
        const Integer a = rnd.get_z_range(gamma);
        const Integer b = rnd.get_z_range(gamma);
        const auto ra = crtft::crt::residues_of(a, moduli);
        const auto rb = crtft::crt::residues_of(b, moduli);
        const auto rsum = crtft::crt::residues_of((a + b) % gamma, moduli);
        const auto rprod = crtft::crt::residues_of((a * b) % gamma, moduli);
        for (std::size_t j = 0; j < moduli.size(); ++j) {
            CHECK(rsum[j] == (ra[j] + rb[j]) % moduli[j]);
            CHECK(rprod[j] == (ra[j] * rb[j]) % moduli[j]);
        }
    }
}
