#pragma once

#include <cstddef>
#include <vector>

#include "trinity/bigint.hpp"

namespace trinity {

/// Dense univariate polynomial with exact integer coefficients.
/// coeff(j) is the coefficient of x^j.  The zero polynomial has an empty
/// coefficient vector and degree() == -1; otherwise the leading coefficient
/// is nonzero.  Degrees in this library stay below a few hundred, so the
/// dense representation is fine.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly constant(BigInt v);
    /// x^n with coefficient c.
    static IntPoly monomial(BigInt c, std::size_t n);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& coeff(std::size_t j) const;
    const BigInt& lc() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt eval(const BigInt& x) const;

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;

    std::string str() const; // e.g. "y^4 + y^3 + y^2 + y + 1"

private:
    void trim();
    std::vector<BigInt> c_;
};

/// Exact division a / b in Z[x].  Throws verification_error if the division
/// leaves a remainder or a nonintegral quotient coefficient.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

/// Euler's totient.
unsigned long euler_phi(unsigned long n);

/// Sorted list of divisors of n.
std::vector<unsigned long> divisors(unsigned long n);

/// k-th cyclotomic polynomial Phi_k, monic of degree phi(k), computed by
/// exact division of y^k - 1 by the product of Phi_d over proper divisors d.
IntPoly cyclotomic(unsigned long k);

/// Minimal polynomial Psi_k of 2cos(2*pi/k), monic of degree phi(k)/2, for
/// k >= 3.  Determined by the identity Phi_k(y) = y^r * Psi_k(y + 1/y) with
/// r = phi(k)/2: the coefficients are matched top degree downward against
/// Phi_k through the binomial expansion of y^r * sum a_j (y + 1/y)^j, and
/// the full identity is re-verified before returning.
IntPoly real_cyclotomic(unsigned long k);

/// Resultant of f and g, exact, via the subresultant PRS.  Convention:
/// Res(f,g) = lc(f)^{deg g} * prod over roots beta of f of g(beta),
/// i.e. the determinant of the Sylvester matrix Syl(f,g).
/// Throws input_error on zero input.
BigInt resultant(const IntPoly& f, const IntPoly& g);

} // namespace trinity
