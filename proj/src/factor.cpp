#include "trinity/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>

#include "trinity/errors.hpp"

namespace trinity {

namespace {

constexpr std::uint64_t kTrialBound = 1000000;

const std::vector<std::uint32_t>& small_primes() {
    static std::vector<std::uint32_t> primes;
    static std::once_flag once;
    std::call_once(once, [] {
        std::vector<bool> sieve(kTrialBound + 1, true);
        sieve[0] = sieve[1] = false;
        for (std::uint64_t i = 2; i * i <= kTrialBound; ++i)
            if (sieve[i])
                for (std::uint64_t j = i * i; j <= kTrialBound; j += i) sieve[j] = false;
        for (std::uint64_t i = 2; i <= kTrialBound; ++i)
            if (sieve[i]) primes.push_back(static_cast<std::uint32_t>(i));
    });
    return primes;
}

// One Miller-Rabin round; true means "n passes witness a".
bool mr_round(const BigInt& n, const BigInt& n1, const BigInt& d, unsigned long r,
              const BigInt& a) {
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n1) return true;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n1) return true;
    }
    return false;
}

} // namespace

Primality classify_prime(const BigInt& n_in) {
    BigInt n = abs(n_in);
    if (n < 2) return Primality::composite;
    static const unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
                                     41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (unsigned p : small) {
        if (n == p) return Primality::prime;
        if (n % p == 0) return Primality::composite;
    }

    BigInt n1 = n - 1, d = n1;
    unsigned long r = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++r;
    }

    const bool deterministic = mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
    // Witnesses {2..37} decide primality below 2^64; above, the first 25
    // primes form the fixed witness set and survivors are probable primes.
    const std::size_t nwit = deterministic ? 12 : 25;
    for (std::size_t i = 0; i < nwit; ++i) {
        if (!mr_round(n, n1, d, r, BigInt(small[i]))) return Primality::composite;
    }
    return deterministic ? Primality::prime : Primality::probable_prime;
}

namespace {

// Pollard's rho with Brent cycle detection; returns a nontrivial factor of n
// (n odd composite, not a prime power guard needed by caller).  Deterministic:
// fixed x0 = 2 and increment c scanned from 1 upward.
BigInt pollard_brent(const BigInt& n) {
    for (BigInt c(1);; ++c) {
        BigInt y(2), r(1), q(1), g(1), x, ys;
        const long m = 128;
        while (g == 1) {
            x = y;
            for (BigInt i(0); i < r; ++i) y = (y * y + c) % n;
            BigInt k(0);
            while (k < r && g == 1) {
                ys = y;
                BigInt lim = r - k;
                if (lim > m) lim = m;
                for (BigInt i(0); i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = bigint_gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                g = bigint_gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
        // cycle degenerated for this c; retry with the next increment
    }
}

void split(const BigInt& n, std::map<BigInt, FactorPower>& out) {
    if (n == 1) return;
    Primality cls = classify_prime(n);
    if (cls != Primality::composite) {
        auto it = out.find(n);
        if (it == out.end())
            out.emplace(n, FactorPower{n, 1, cls == Primality::probable_prime});
        else
            it->second.exponent += 1;
        return;
    }
    BigInt d = pollard_brent(n);
    split(d, out);
    split(n / d, out);
}

} // namespace

std::vector<FactorPower> factorize(const BigInt& n_in) {
    BigInt n = abs(n_in);
    if (n < 2) throw input_error("factorize: |n| must be >= 2");

    std::map<BigInt, FactorPower> acc;
    for (std::uint32_t p : small_primes()) {
        if (BigInt(p) * p > n) break;
        if (n % p == 0) {
            FactorPower fp;
            fp.prime = p;
            fp.exponent = 0;
            while (n % p == 0) {
                n /= p;
                ++fp.exponent;
            }
            acc[fp.prime] = fp;
        }
    }
    if (n > 1) {
        std::map<BigInt, FactorPower> rest;
        split(n, rest);
        for (auto& [p, fp] : rest) acc[p] = fp;
    }

    std::vector<FactorPower> result;
    result.reserve(acc.size());
    for (auto& [p, fp] : acc) result.push_back(fp);
    return result;
}

} // namespace trinity
