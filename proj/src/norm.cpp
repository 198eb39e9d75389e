#include "trinity/norm.hpp"

#include "trinity/errors.hpp"

namespace trinity {

namespace {

bool is_small_prime(unsigned long k) {
    if (k < 2) return false;
    for (unsigned long d = 2; d * d <= k; ++d)
        if (k % d == 0) return false;
    return true;
}

void require_odd_prime_ge5(unsigned long k, const char* who) {
    if (k < 5 || k % 2 == 0 || !is_small_prime(k))
        throw input_error(std::string(who) + ": k must be an odd prime >= 5");
}

} // namespace

BigInt norm_g(unsigned long k) {
    if (k < 3 || k % 2 == 0) throw input_error("norm_g: k must be odd and >= 3");
    const IntPoly psi = real_cyclotomic(k);
    const unsigned long r = static_cast<unsigned long>(psi.degree());
    BigInt acc(0);
    for (unsigned long j = 0; j <= r; ++j)
        acc += bigint_pow(BigInt(-3), r - j) * bigint_pow(BigInt(2), j) * psi.coeff(j);
    return acc;
}

bool norm_mod9_check(unsigned long k) {
    require_odd_prime_ge5(k, "norm_mod9_check");
    const IntPoly psi = real_cyclotomic(k);
    const unsigned long r = static_cast<unsigned long>(psi.degree());
    const BigInt N = norm_g(k);

    BigInt lhs = N % 9;
    BigInt rhs = (bigint_pow(BigInt(2), r) - 3 * bigint_pow(BigInt(2), r - 1) * psi.coeff(r - 1)) % 9;
    // Specialization for prime k (where a_{r-1} = 1): N(g) = -2^{(k-3)/2} (mod 9).
    BigInt special = (-bigint_pow(BigInt(2), (k - 3) / 2)) % 9;
    if ((rhs - special) % 9 != 0)
        throw verification_error("norm_mod9_check",
                                 "congruence specialization diverges for prime k=" + std::to_string(k));
    return (lhs - rhs) % 9 == 0;
}

bool unit_check(unsigned long k) {
    require_odd_prime_ge5(k, "unit_check");
    const BigInt N = norm_g(k);
    if (N == 0 || N == 1 || N == -1) return false;
    return bigint_gcd(N, BigInt(6)) == 1;
}

NormReport analyze_norm(unsigned long k) {
    if (k < 5 || k % 2 == 0) throw input_error("analyze_norm: k must be odd and >= 5");
    NormReport rep;
    rep.k = k;
    rep.k_prime = is_small_prime(k);
    rep.psi = real_cyclotomic(k);
    rep.r = static_cast<unsigned long>(rep.psi.degree());
    rep.N_g = norm_g(k);
    if (rep.k_prime && (rep.N_g == 0 || rep.N_g == 1 || rep.N_g == -1))
        throw verification_error("analyze_norm", "N(g) is a unit for prime k=" + std::to_string(k));
    rep.factorization = factorize(rep.N_g);

    const unsigned long kk2 = 2 * k;
    for (const FactorPower& fp : rep.factorization) {
        FactorCheck chk;
        chk.p = fp.prime;
        chk.exponent = fp.exponent;
        chk.probable = fp.probable;
        chk.residue_2k = mpz_fdiv_ui(fp.prime.get_mpz_t(), kk2);
        chk.residue_12 = mpz_fdiv_ui(fp.prime.get_mpz_t(), 12);
        chk.ok_ge5 = fp.prime >= 5;
        chk.ok_mod_2k = chk.residue_2k == 1 || chk.residue_2k == kk2 - 1;
        chk.ok_mod_12 = chk.residue_12 == 1 || chk.residue_12 == 11;
        if (rep.k_prime && !chk.admissible())
            throw verification_error(
                "admissible_primes",
                "prime factor " + to_dec(fp.prime) + " of N(g) fails a congruence for prime k=" +
                    std::to_string(k) + " (this indicates an implementation bug)");
        rep.checks.push_back(chk);
        if (chk.admissible()) {
            AdmissiblePrime ap;
            ap.p = fp.prime;
            ap.residue_2k = chk.residue_2k;
            ap.residue_12 = chk.residue_12;
            ap.epsilon = chk.residue_2k == 1 ? +1 : -1;
            if (ap.p == k)
                throw verification_error("admissible_primes", "p = k cannot occur");
            rep.admissible.push_back(ap);
        }
    }
    return rep;
}

std::vector<AdmissiblePrime> admissible_primes(unsigned long k) {
    return analyze_norm(k).admissible;
}

} // namespace trinity
