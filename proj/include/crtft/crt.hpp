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

#include <gmpxx.h>

#include <string>
#include <vector>

#include "crtft/errors.hpp"

namespace crtft::crt {

/// Arbitrary-precision integer. The modulus product grows multiplicatively,
/// so everything in this module stays exact; there is no wraparound path.
using Integer = mpz_class;

/// A system of simultaneous congruences x = r_j (mod m_j) with pairwise
/// coprime moduli m_j >= 2 and canonical residues 0 <= r_j < m_j.
/// Both invariants are checked eagerly at construction.
class CongruenceSystem {
  public:
    CongruenceSystem(std::vector<Integer> moduli, std::vector<Integer> residues);

    const std::vector<Integer>& moduli() const { return moduli_; }
    const std::vector<Integer>& residues() const { return residues_; }
    std::size_t size() const { return moduli_.size(); }

  private:
    std::vector<Integer> moduli_;
    std::vector<Integer> residues_;
};

/// How the reconstruction identity sum_j u_j*(Gamma/m_j) = 1 + ell*Gamma
/// classifies: ell = 1 and ell > 1 carry their traditional names; ell = 0
/// happens exactly when the sum is literally 1 (single modulus).
enum class UseClass { Degenerate, PositiveUse, UniversalUse };

const char* use_class_name(UseClass c);

struct UseRelation {
    Integer ell;
    UseClass classification;
};

/// The solved system: the unique value below gamma = prod m_j, together with
/// the unit coefficients u_j and the use index ell of the identity above.
struct CrtSolution {
    Integer value;
    Integer gamma;
    std::vector<Integer> unit_coeffs;
    Integer use_index;
};

/// Modular inverse of a modulo m, normalized into [1, m-1].
/// Extended Euclid; throws InvalidModulus for m < 2 and NotCoprime when
/// gcd(a mod m, m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m);

/// Canonical residues (n mod m_0, ..., n mod m_{mu-1}). Moduli must be
/// pairwise coprime and >= 2.
std::vector<Integer> residues_of(const Integer& n, const std::vector<Integer>& moduli);

/// u_j = (Gamma/m_j)^{-1} mod m_j, each in [1, m_j - 1].
std::vector<Integer> unit_coefficients(const std::vector<Integer>& moduli);

/// Exact use index ell with sum_j u_j*(Gamma/m_j) = 1 + ell*Gamma.
UseRelation use_relation(const std::vector<Integer>& moduli);

/// Reconstruction: value = sum_j r_j*u_j*(Gamma/m_j) mod Gamma.
CrtSolution solve(const CongruenceSystem& system);

}  // namespace crtft::crt
