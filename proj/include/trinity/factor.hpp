#pragma once

#include <vector>

#include "trinity/bigint.hpp"

namespace trinity {

struct FactorPower {
    BigInt prime;
    unsigned exponent = 1;
    /// True when primality rests on Miller-Rabin with the fixed witness set
    /// beyond the deterministic 2^64 range.
    bool probable = false;

    bool operator==(const FactorPower&) const = default;
};

enum class Primality { composite, prime, probable_prime };

/// Miller-Rabin primality.  Deterministic for |n| < 2^64 (witness set
/// {2,3,5,7,11,13,17,19,23,29,31,37}); above that, the first 25 primes are
/// used as a fixed witness set and a passing n is reported probable_prime.
Primality classify_prime(const BigInt& n);

inline bool is_prime(const BigInt& n) { return classify_prime(n) != Primality::composite; }

/// Complete factorization of |n| for |n| >= 2, sorted by prime.  Trial
/// division up to 10^6, then Pollard's rho with Brent cycling.  Deterministic.
/// Throws input_error for |n| < 2.
std::vector<FactorPower> factorize(const BigInt& n);

} // namespace trinity
