#include "trinity/gf.hpp"

#include <cassert>

#include "trinity/errors.hpp"

namespace trinity {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

} // namespace

int legendre(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    std::uint64_t e = powmod(a, (p - 1) / 2, p);
    return e == 1 ? +1 : -1;
}

FieldCtx::FieldCtx(std::uint64_t p, int degree) : p_(p), degree_(degree) {
    if (p < 3 || p % 2 == 0 || !is_prime(BigInt(static_cast<unsigned long>(p))))
        throw input_error("FieldCtx: p must be an odd prime");
    if (degree != 1 && degree != 2) throw input_error("FieldCtx: degree must be 1 or 2");
    if (degree == 2) {
        for (std::uint64_t c = 2; c < p; ++c) {
            if (legendre(c, p) == -1) {
                nu_ = c;
                break;
            }
        }
        if (nu_ == 0) throw verification_error("FieldCtx", "no quadratic nonresidue found");
    }
    group_order_factors_ = factorize(order() - 1);
}

BigInt FieldCtx::order() const {
    BigInt q(static_cast<unsigned long>(p_));
    return degree_ == 2 ? q * q : q;
}

std::uint64_t FieldCtx::padd(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
}

std::uint64_t FieldCtx::psub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
}

std::uint64_t FieldCtx::pmul(std::uint64_t a, std::uint64_t b) const { return mulmod(a, b, p_); }

std::uint64_t FieldCtx::ppow(std::uint64_t a, std::uint64_t e) const { return powmod(a, e, p_); }

std::uint64_t FieldCtx::pinv(std::uint64_t a) const {
    if (a == 0) throw input_error("field inverse of zero");
    return ppow(a, p_ - 2);
}

FieldElem FieldCtx::from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += static_cast<std::int64_t>(p_);
    return {static_cast<std::uint64_t>(m), 0};
}

FieldElem FieldCtx::make(std::uint64_t a0, std::uint64_t a1) const {
    if (a1 != 0 && degree_ == 1) throw input_error("nonzero t-part in a degree-1 context");
    return {a0 % p_, a1 % p_};
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
    return {padd(a.a0, b.a0), padd(a.a1, b.a1)};
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
    return {psub(a.a0, b.a0), psub(a.a1, b.a1)};
}

FieldElem FieldCtx::neg(const FieldElem& a) const {
    return {a.a0 ? p_ - a.a0 : 0, a.a1 ? p_ - a.a1 : 0};
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
    if (a.a1 == 0 && b.a1 == 0) return {pmul(a.a0, b.a0), 0};
    // (a0 + a1 t)(b0 + b1 t) with t^2 = nu
    std::uint64_t c0 = padd(pmul(a.a0, b.a0), pmul(nu_, pmul(a.a1, b.a1)));
    std::uint64_t c1 = padd(pmul(a.a0, b.a1), pmul(a.a1, b.a0));
    return {c0, c1};
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
    if (is_zero(a)) throw input_error("field inverse of zero");
    if (a.a1 == 0) return {pinv(a.a0), 0};
    // conjugate over norm: (a0 - a1 t) / (a0^2 - nu a1^2)
    std::uint64_t nrm = psub(pmul(a.a0, a.a0), pmul(nu_, pmul(a.a1, a.a1)));
    std::uint64_t ninv = pinv(nrm);
    return {pmul(a.a0, ninv), pmul(p_ - a.a1, ninv)};
}

FieldElem FieldCtx::pow(const FieldElem& a, const BigInt& e_in) const {
    BigInt e = e_in;
    if (e < 0) return pow(inv(a), -e);
    FieldElem base = a, r = one();
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, base);
        base = mul(base, base);
    }
    return r;
}

bool FieldCtx::is_square(const FieldElem& a) const {
    if (is_zero(a)) return true;
    if (degree_ == 1) return legendre(a.a0, p_) == 1;
    // a^{(p^2-1)/2} = Norm(a)^{(p-1)/2}
    std::uint64_t nrm = psub(pmul(a.a0, a.a0), pmul(nu_, pmul(a.a1, a.a1)));
    return legendre(nrm, p_) == 1;
}

std::optional<std::uint64_t> FieldCtx::psqrt(std::uint64_t a) const {
    a %= p_;
    if (a == 0) return 0;
    if (legendre(a, p_) != 1) return std::nullopt;
    std::uint64_t root;
    if (p_ % 4 == 3) {
        root = ppow(a, (p_ + 1) / 4);
    } else {
        // Tonelli-Shanks with the smallest nonresidue as the generator seed.
        std::uint64_t q = p_ - 1, s = 0;
        while (q % 2 == 0) {
            q /= 2;
            ++s;
        }
        std::uint64_t zz = 2;
        while (legendre(zz, p_) != -1) ++zz;
        std::uint64_t m = s;
        std::uint64_t c = ppow(zz, q);
        std::uint64_t t = ppow(a, q);
        std::uint64_t r = ppow(a, (q + 1) / 2);
        while (t != 1) {
            std::uint64_t i = 0, t2 = t;
            while (t2 != 1) {
                t2 = pmul(t2, t2);
                ++i;
            }
            std::uint64_t b = c;
            for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = pmul(b, b);
            m = i;
            c = pmul(b, b);
            t = pmul(t, c);
            r = pmul(r, b);
        }
        root = r;
    }
    return std::min(root, p_ - root);
}

std::optional<FieldElem> FieldCtx::sqrt(const FieldElem& a) const {
    if (is_zero(a)) return zero();
    std::optional<FieldElem> found;
    if (degree_ == 1) {
        auto r = psqrt(a.a0);
        if (!r) return std::nullopt;
        found = FieldElem{*r, 0};
    } else if (a.a1 == 0) {
        if (auto r = psqrt(a.a0)) {
            found = FieldElem{*r, 0};
        } else {
            // a0 is a nonsquare in GF(p): sqrt = x1*t with nu*x1^2 = a0
            auto r1 = psqrt(pmul(a.a0, pinv(nu_)));
            if (!r1) return std::nullopt; // cannot happen: nonsquare/nonsquare is square
            found = FieldElem{0, *r1};
        }
    } else {
        // x = x0 + x1 t, x^2 = a:  x0^2 + nu x1^2 = a0, 2 x0 x1 = a1.
        // Norm(x)^2 = Norm(a), so Norm(a) must be a square in GF(p).
        std::uint64_t nrm = psub(pmul(a.a0, a.a0), pmul(nu_, pmul(a.a1, a.a1)));
        auto s = psqrt(nrm);
        if (!s) return std::nullopt;
        const std::uint64_t half = pinv(2);
        for (std::uint64_t sg = 0; sg < 2 && !found; ++sg) {
            std::uint64_t sv = sg == 0 ? *s : (*s == 0 ? 0 : p_ - *s);
            std::uint64_t u = pmul(padd(a.a0, sv), half); // candidate x0^2
            if (u == 0) continue;
            if (auto x0 = psqrt(u)) {
                std::uint64_t x1 = pmul(a.a1, pinv(pmul(2, *x0)));
                found = FieldElem{*x0, x1};
            }
        }
        if (!found) return std::nullopt;
    }
    FieldElem r = *found;
    FieldElem nr = neg(r);
    FieldElem best = std::min(r, nr);
    assert(mul(best, best) == a);
    return best;
}

BigInt FieldCtx::element_order(const FieldElem& a) const {
    if (is_zero(a)) throw input_error("element_order of zero");
    BigInt ord = order() - 1;
    for (const FactorPower& fp : group_order_factors_) {
        for (unsigned e = 0; e < fp.exponent; ++e) {
            BigInt candidate = ord / fp.prime;
            if (ord % fp.prime == 0 && pow(a, candidate) == one())
                ord = candidate;
            else
                break;
        }
    }
    return ord;
}

std::string FieldCtx::str(const FieldElem& a) const {
    if (degree_ == 1 || a.a1 == 0) return std::to_string(a.a0);
    return std::to_string(a.a0) + "+" + std::to_string(a.a1) + "t";
}

std::pair<FieldElem, FieldCtx> find_zeta(unsigned long k, const BigInt& p_big) {
    if (k < 5 || k % 2 == 0) throw input_error("find_zeta: k must be odd and >= 5");
    if (!p_big.fits_ulong_p())
        throw resource_error("find_zeta: prime too large for the field backend");
    const std::uint64_t p = p_big.get_ui();

    const std::uint64_t r2k = mpz_fdiv_ui(p_big.get_mpz_t(), 2 * k);
    int eps;
    if (r2k == 1)
        eps = +1;
    else if (r2k == 2 * k - 1)
        eps = -1;
    else
        throw input_error("find_zeta: p is not +-1 (mod 2k)");

    FieldCtx ctx(p, eps == 1 ? 1 : 2);

    // Discriminant of 3 z^2 + 2 z + 3 is -32; its residuosity mod p must
    // match the eps classification (roots lie in GF(p) iff eps = +1).
    const std::uint64_t disc = (p - 32 % p) % p;
    const int chi = legendre(disc, p);
    if (chi == 0 || (chi == 1) != (eps == 1))
        throw verification_error("find_zeta",
                                 "discriminant residuosity contradicts the eps classification");

    const FieldElem inv6 = ctx.inv(ctx.from_int(6));
    FieldElem root;
    if (eps == 1) {
        FieldElem s = *ctx.sqrt(ctx.make(disc, 0));
        FieldElem z1 = ctx.mul(ctx.add(ctx.from_int(-2), s), inv6);
        FieldElem z2 = ctx.mul(ctx.sub(ctx.from_int(-2), s), inv6);
        root = std::min(z1, z2);
    } else {
        // sqrt(disc) = w*t with w = sqrt(disc/nu) in GF(p)
        FieldElem w = *ctx.sqrt(ctx.make(
            mulmod(disc, powmod(ctx.nonresidue(), p - 2, p), p), 0));
        FieldElem s = ctx.make(0, w.a0);
        FieldElem z1 = ctx.mul(ctx.add(ctx.from_int(-2), s), inv6);
        FieldElem z2 = ctx.mul(ctx.sub(ctx.from_int(-2), s), inv6);
        root = std::min(z1, z2);
    }

    // Both roots are mutual inverses; re-check the defining relation and the
    // exact order.
    const FieldElem zinv = ctx.inv(root);
    FieldElem rel = ctx.add(ctx.mul(ctx.from_int(3), ctx.add(root, zinv)), ctx.from_int(2));
    if (!ctx.is_zero(rel))
        throw verification_error("find_zeta", "3(z + z^-1) + 2 != 0 for the computed root");
    if (ctx.element_order(root) != k)
        throw verification_error("find_zeta", "root of the quadratic does not have order k");
    return {root, ctx};
}

FieldElem xi_from_zeta(const FieldCtx& ctx, const FieldElem& zeta, unsigned long k) {
    if (k % 2 == 0) throw input_error("xi_from_zeta: k must be odd");
    if (ctx.element_order(zeta) != k)
        throw verification_error("xi_from_zeta", "zeta does not have order k");
    FieldElem xi = ctx.neg(ctx.pow(zeta, BigInt((k + 1) / 2)));
    if (!(ctx.mul(xi, xi) == zeta))
        throw verification_error("xi_from_zeta", "xi^2 != zeta");
    if (ctx.element_order(xi) != BigInt(2 * k))
        throw verification_error("xi_from_zeta", "xi does not have order 2k");
    return xi;
}

} // namespace trinity
