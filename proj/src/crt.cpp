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

#include "crtft/crt.hpp"

#include <utility>

namespace crtft::crt {

namespace {

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Canonical (non-negative) remainder.
Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

void check_moduli(const std::vector<Integer>& moduli) {
    if (moduli.empty())
        throw EmptyInput("at least one modulus is required");
    for (const Integer& m : moduli)
        if (m < 2)
            throw InvalidModulus("modulus " + m.get_str() + " is below 2");
    for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i + 1; j < moduli.size(); ++j)
            if (gcd(moduli[i], moduli[j]) != 1)
                throw NotPairwiseCoprime("moduli " + moduli[i].get_str() + " and " +
                                         moduli[j].get_str() + " share a factor");
}

Integer product(const std::vector<Integer>& moduli) {
    Integer gamma = 1;
    for (const Integer& m : moduli) gamma *= m;
    return gamma;
}

}  // namespace

CongruenceSystem::CongruenceSystem(std::vector<Integer> moduli, std::vector<Integer> residues)
    : moduli_(std::move(moduli)), residues_(std::move(residues)) {
    if (moduli_.size() != residues_.size())
        throw LengthMismatch("moduli and residues differ in length");
    check_moduli(moduli_);
    for (std::size_t j = 0; j < moduli_.size(); ++j)
        if (residues_[j] < 0 || residues_[j] >= moduli_[j])
            throw ResidueOutOfRange("residue " + residues_[j].get_str() +
                                    " is not in [0, " + moduli_[j].get_str() + ")");
}

const char* use_class_name(UseClass c) {
    switch (c) {
        case UseClass::PositiveUse: return "positive use";
        case UseClass::UniversalUse: return "universal use";
        case UseClass::Degenerate: return "degenerate";
    }
    return "?";
}

Integer mod_inverse(const Integer& a, const Integer& m) {
    if (m < 2)
        throw InvalidModulus("modulus " + m.get_str() + " is below 2");
    // Iterative extended Euclid on (a mod m, m), tracking only the
    // coefficient of a.
    Integer r0 = mod(a, m), r1 = m;
    Integer s0 = 1, s1 = 0;
    while (r1 != 0) {
        Integer q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1)
        throw NotCoprime("gcd(" + mod(a, m).get_str() + ", " + m.get_str() + ") = " +
                         r0.get_str() + ", inverse does not exist");
    return mod(s0, m);  // normalize into [1, m-1]
}

std::vector<Integer> residues_of(const Integer& n, const std::vector<Integer>& moduli) {
    check_moduli(moduli);
    std::vector<Integer> r;
    r.reserve(moduli.size());
    for (const Integer& m : moduli) r.push_back(mod(n, m));
    return r;
}

std::vector<Integer> unit_coefficients(const std::vector<Integer>& moduli) {
    check_moduli(moduli);
    const Integer gamma = product(moduli);
    std::vector<Integer> u;
    u.reserve(moduli.size());
    for (const Integer& m : moduli) u.push_back(mod_inverse(gamma / m, m));
    return u;
}

UseRelation use_relation(const std::vector<Integer>& moduli) {
    const std::vector<Integer> u = unit_coefficients(moduli);
    const Integer gamma = product(moduli);
    Integer sum = 0;
    for (std::size_t j = 0; j < moduli.size(); ++j) sum += u[j] * (gamma / moduli[j]);
    // sum = 1 (mod gamma) holds by construction of the u_j, so the division
    // below is exact.
    Integer ell = (sum - 1) / gamma;
    UseClass c = ell == 0   ? UseClass::Degenerate
                 : ell == 1 ? UseClass::PositiveUse
                            : UseClass::UniversalUse;
    return UseRelation{std::move(ell), c};
}

CrtSolution solve(const CongruenceSystem& system) {
    const std::vector<Integer>& moduli = system.moduli();
    const std::vector<Integer>& residues = system.residues();
    std::vector<Integer> u = unit_coefficients(moduli);
    const Integer gamma = product(moduli);

    Integer acc = 0;
    Integer use_sum = 0;
    for (std::size_t j = 0; j < moduli.size(); ++j) {
        const Integer cofactor = gamma / moduli[j];
        acc += residues[j] * u[j] * cofactor;
        use_sum += u[j] * cofactor;
    }
    return CrtSolution{mod(acc, gamma), gamma, std::move(u), (use_sum - 1) / gamma};
}

}  // namespace crtft::crt
