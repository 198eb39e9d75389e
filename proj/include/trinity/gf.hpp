#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trinity/bigint.hpp"
#include "trinity/factor.hpp"

namespace trinity {

/// Element of GF(p) or GF(p^2) = GF(p)[t]/(t^2 - nu): value = a0 + a1*t with
/// canonical representatives in [0, p).  a1 == 0 in degree-1 contexts.
struct FieldElem {
    std::uint64_t a0 = 0;
    std::uint64_t a1 = 0;

    bool operator==(const FieldElem&) const = default;
    // Canonical ordering used wherever "the smaller encoding" is chosen.
    auto operator<=>(const FieldElem&) const = default;
};

/// Legendre symbol by Euler's criterion, normalized to {-1, 0, +1}.
int legendre(std::uint64_t a, std::uint64_t p);

/// Immutable arithmetic context for GF(p) or GF(p^2).  In the quadratic case
/// the extension is GF(p)[t]/(t^2 - nu) with nu the smallest positive
/// quadratic nonresidue mod p, so contexts are reproducible from (p, degree)
/// alone.
class FieldCtx {
public:
    FieldCtx() = default;
    FieldCtx(std::uint64_t p, int degree);

    std::uint64_t p() const { return p_; }
    int degree() const { return degree_; }
    std::uint64_t nonresidue() const { return nu_; }
    /// Field size p^degree.
    BigInt order() const;

    FieldElem zero() const { return {0, 0}; }
    FieldElem one() const { return {1, 0}; }
    FieldElem from_int(std::int64_t v) const;
    FieldElem make(std::uint64_t a0, std::uint64_t a1) const;

    bool is_zero(const FieldElem& a) const { return a.a0 == 0 && a.a1 == 0; }
    bool in_prime_field(const FieldElem& a) const { return a.a1 == 0; }

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }
    FieldElem pow(const FieldElem& a, const BigInt& e) const;

    /// Euler-criterion square test in the full field GF(p^degree).
    bool is_square(const FieldElem& a) const;

    /// One square root of a, or nullopt if a is a nonsquare.  Tonelli-Shanks
    /// in GF(p); in GF(p^2) by reduction to norm/trace equations over GF(p).
    /// Deterministic: the returned root is the canonically smaller of the pair.
    std::optional<FieldElem> sqrt(const FieldElem& a) const;

    /// Multiplicative order via the factorization of p^degree - 1.
    BigInt element_order(const FieldElem& a) const;

    std::string str(const FieldElem& a) const;

    bool operator==(const FieldCtx& o) const {
        return p_ == o.p_ && degree_ == o.degree_ && nu_ == o.nu_;
    }

private:
    std::uint64_t p_ = 0;
    int degree_ = 1;
    std::uint64_t nu_ = 0; // quadratic nonresidue defining GF(p^2), 0 in degree 1
    std::vector<FactorPower> group_order_factors_; // factorization of p^degree - 1

    std::uint64_t padd(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t psub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pmul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t ppow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t pinv(std::uint64_t a) const;
    std::optional<std::uint64_t> psqrt(std::uint64_t a) const;
};

/// Solves 3*z^2 + 2*z + 3 = 0 (the condition 3(z + z^-1) + 2 = 0; the two
/// roots are mutual inverses) for a primitive k-th root of unity z over
/// GF(p) when p = 1 (mod 2k) or GF(p^2) when p = -1 (mod 2k).  Verifies the
/// order of z is exactly k and returns the root with the smaller canonical
/// encoding together with its context.
std::pair<FieldElem, FieldCtx> find_zeta(unsigned long k, const BigInt& p);

/// xi = -z^{(k+1)/2}, a primitive 2k-th root of unity with xi^2 = z (k odd).
/// Verifies both properties.
FieldElem xi_from_zeta(const FieldCtx& ctx, const FieldElem& zeta, unsigned long k);

} // namespace trinity
