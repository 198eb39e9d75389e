#pragma once

#include <vector>

#include "trinity/bigint.hpp"
#include "trinity/factor.hpp"
#include "trinity/intpoly.hpp"

namespace trinity {

/// A prime divisor p of N(g) that passed all three congruence conditions:
/// p >= 5, p = +-1 (mod 2k) and p = +-1 (mod 12).
struct AdmissiblePrime {
    BigInt p;
    unsigned long residue_2k = 0; // p mod 2k, in {1, 2k-1}
    unsigned long residue_12 = 0; // p mod 12, in {1, 11}
    int epsilon = 0;              // +1 if p = 1 (mod 2k), -1 if p = -1 (mod 2k)
};

/// Per-factor congruence evidence (kept for composite k, where the
/// conditions are observed rather than guaranteed).
struct FactorCheck {
    BigInt p;
    unsigned exponent = 1;
    unsigned long residue_2k = 0;
    unsigned long residue_12 = 0;
    bool ok_ge5 = false;
    bool ok_mod_2k = false;
    bool ok_mod_12 = false;
    bool probable = false;

    bool admissible() const { return ok_ge5 && ok_mod_2k && ok_mod_12; }
};

struct NormReport {
    unsigned long k = 0;
    unsigned long r = 0; // phi(k)/2
    bool k_prime = false;
    IntPoly psi;
    BigInt N_g;
    std::vector<FactorPower> factorization; // of |N(g)|
    std::vector<FactorCheck> checks;        // one per prime factor
    std::vector<AdmissiblePrime> admissible;
};

/// N(g) for g = 3h + 2, h = 2cos(2*pi/k): the closed form
/// sum_{j=0}^{r} (-3)^{r-j} 2^j a_j over the coefficients a_j of Psi_k.
BigInt norm_g(unsigned long k);

/// Checks N(g) mod 9 against 2^r - 3*2^{r-1} a_{r-1}, and for prime k the
/// specialization N(g) = -2^{(k-3)/2} (mod 9).  k must be an odd prime >= 5.
bool norm_mod9_check(unsigned long k);

/// True iff N(g) is not 0 or +-1 and is coprime to 6.  k odd prime >= 5.
bool unit_check(unsigned long k);

/// Full norm analysis for odd k >= 5: N(g), its factorization and the
/// congruence screen of every prime factor.  For prime k a failing factor is
/// an implementation bug and throws verification_error; for composite k the
/// outcome is only reported.
NormReport analyze_norm(unsigned long k);

/// Admissible prime divisors of N(g), smallest first.
std::vector<AdmissiblePrime> admissible_primes(unsigned long k);

} // namespace trinity
