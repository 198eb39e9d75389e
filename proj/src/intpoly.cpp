#include "trinity/intpoly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "trinity/errors.hpp"

namespace trinity {

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(BigInt v) {
    IntPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::monomial(BigInt c, std::size_t n) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(n + 1, BigInt(0));
        p.c_[n] = std::move(c);
    }
    return p;
}

const BigInt& IntPoly::coeff(std::size_t j) const {
    static const BigInt zero(0);
    return j < c_.size() ? c_[j] : zero;
}

const BigInt& IntPoly::lc() const {
    if (c_.empty()) throw input_error("lc of zero polynomial");
    return c_.back();
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = degree(); j >= 0; --j) {
        const BigInt& a = coeff(static_cast<std::size_t>(j));
        if (a == 0) continue;
        BigInt mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (mag != 1 || j == 0) os << mag.get_str();
        if (j > 0) {
            os << "y";
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw input_error("division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree())
        throw verification_error("divide_exact", "degree(a) < degree(b)");
    std::vector<BigInt> rem(a.coeffs());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<BigInt> quot(rem.size() - db, BigInt(0));
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(), b.lc().get_mpz_t());
        if (r != 0)
            throw verification_error("divide_exact", "nonintegral quotient coefficient");
        quot[i - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
    }
    for (const auto& v : rem)
        if (v != 0) throw verification_error("divide_exact", "nonzero remainder");
    return IntPoly(std::move(quot));
}

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> d;
    for (unsigned long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

IntPoly cyclotomic(unsigned long k) {
    if (k < 1) throw input_error("cyclotomic: k must be >= 1");
    std::map<unsigned long, IntPoly> phi;
    for (unsigned long d : divisors(k)) {
        // y^d - 1 divided by the product of Phi_e over proper divisors e of d
        std::vector<BigInt> num(d + 1, BigInt(0));
        num[0] = -1;
        num[d] = 1;
        IntPoly quot{std::vector<BigInt>(std::move(num))};
        IntPoly den = IntPoly::constant(1);
        for (unsigned long e : divisors(d))
            if (e < d) den = den * phi.at(e);
        phi[d] = divide_exact(quot, den);
    }
    return phi.at(k);
}

IntPoly real_cyclotomic(unsigned long k) {
    if (k < 3) throw input_error("real_cyclotomic: k must be >= 3");
    const IntPoly phi = cyclotomic(k);
    const unsigned long r = euler_phi(k) / 2;
    assert(static_cast<unsigned long>(phi.degree()) == 2 * r);

    // Coefficient of y^{r+j} in y^r * sum_{j'} a_{j'} (y + 1/y)^{j'} is
    // sum over j' >= j with j' == j (mod 2) of a_{j'} * C(j', (j'+j)/2).
    std::vector<BigInt> a(r + 1, BigInt(0));
    for (unsigned long j = r + 1; j-- > 0;) {
        BigInt acc = phi.coeff(r + j);
        for (unsigned long jp = j + 2; jp <= r; jp += 2)
            acc -= a[jp] * binomial(jp, (jp + j) / 2);
        a[j] = acc; // C(j, j) = 1
    }
    IntPoly psi{std::vector<BigInt>(a)};

    // Re-verify the defining identity in full; a residue means an arithmetic
    // bug, not a bad input.
    IntPoly expanded;
    for (unsigned long j = 0; j <= r; ++j) {
        if (a[j] == 0) continue;
        // a_j * y^{r-j} * (y^2 + 1)^j
        std::vector<BigInt> term(r - j + 2 * j + 1, BigInt(0));
        for (unsigned long i = 0; i <= j; ++i) term[r - j + 2 * i] = a[j] * binomial(j, i);
        expanded = expanded + IntPoly(std::move(term));
    }
    if (!(expanded == phi))
        throw verification_error("real_cyclotomic",
                                 "coefficient matching left a residue for k=" + std::to_string(k));
    return psi;
}

namespace {

BigInt content(const IntPoly& p) {
    BigInt g(0);
    for (const auto& c : p.coeffs()) g = bigint_gcd(g, c);
    return g == 0 ? BigInt(1) : g;
}

IntPoly divide_by_const(const IntPoly& p, const BigInt& d) {
    std::vector<BigInt> c(p.coeffs());
    for (auto& v : c) {
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
        if (r != 0) throw verification_error("resultant", "inexact constant division");
        v = q;
    }
    return IntPoly(std::move(c));
}

// Pseudo-remainder: lc(b)^{deg a - deg b + 1} * a = q*b + rem.
IntPoly prem(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> rem(a.coeffs());
    const int da = a.degree(), db = b.degree();
    const BigInt& lb = b.lc();
    for (int i = da; i >= db; --i) {
        // multiply the running remainder by lc(b), then cancel degree i
        for (auto& v : rem) v *= lb;
        BigInt q = rem[static_cast<std::size_t>(i)];
        if (q != 0)
            for (int j = 0; j <= db; ++j)
                rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(static_cast<std::size_t>(j));
        rem[static_cast<std::size_t>(i)] = 0;
    }
    return IntPoly(std::move(rem));
}

} // namespace

BigInt resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw input_error("resultant: zero polynomial input");

    IntPoly A = f, B = g;
    int sign = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
        std::swap(A, B);
    }
    if (B.degree() == 0) {
        if (A.degree() == 0) return BigInt(1);
        return sign * bigint_pow(B.lc(), static_cast<unsigned long>(A.degree()));
    }

    const BigInt ca = content(A), cb = content(B);
    A = divide_by_const(A, ca);
    B = divide_by_const(B, cb);
    BigInt t = bigint_pow(ca, static_cast<unsigned long>(B.degree())) *
               bigint_pow(cb, static_cast<unsigned long>(A.degree()));

    BigInt gcoef(1), h(1);
    int s = sign;
    for (;;) {
        const unsigned long delta =
            static_cast<unsigned long>(A.degree() - B.degree());
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        IntPoly R = prem(A, B);
        A = B;
        B = divide_by_const(R, gcoef * bigint_pow(h, delta));
        gcoef = A.lc();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = gcoef;
        } else {
            BigInt num = bigint_pow(gcoef, delta), q, r;
            BigInt den = bigint_pow(h, delta - 1);
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (r != 0) throw verification_error("resultant", "inexact h update");
            h = q;
        }
        if (B.is_zero()) return BigInt(0);
        if (B.degree() == 0) break;
    }

    const unsigned long dA = static_cast<unsigned long>(A.degree());
    BigInt num = bigint_pow(B.lc(), dA), q, r;
    BigInt den = bigint_pow(h, dA - 1);
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw verification_error("resultant", "inexact final division");
    return s * t * q;
}

} // namespace trinity
