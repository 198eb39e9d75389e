#pragma once

#include <gmpxx.h>

#include <string>

namespace trinity {

/// Exact signed integer of unbounded magnitude.  No rounding anywhere.
using BigInt = mpz_class;

inline BigInt bigint_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt bigint_gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Binomial coefficient C(n, k) as an exact integer.
inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::string to_dec(const BigInt& v) { return v.get_str(); }

inline BigInt from_dec(const std::string& s) { return BigInt(s, 10); }

} // namespace trinity
