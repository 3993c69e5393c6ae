#ifndef SEQFORM_POLY_HPP
#define SEQFORM_POLY_HPP

#include "seqform/rational.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace seqform {

/// Dense univariate polynomial with exact rational coefficients, stored
/// low-to-high. The zero polynomial has an empty coefficient vector and
/// degree -1; otherwise the leading (last) coefficient is nonzero.
class poly {
public:
    poly() = default;
    poly(const rational& constant);
    poly(int constant) : poly(rational(constant)) {}
    explicit poly(std::vector<rational> coeffs);

    /// The monomial c * x^k.
    static poly monomial(const rational& c, int k);
    /// The variable x itself.
    static poly variable() { return monomial(1, 1); }

    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    /// Coefficient of x^k; 0 beyond the degree.
    rational coeff(int k) const;
    rational leading() const;
    rational constant_term() const { return coeff(0); }
    const std::vector<rational>& coeffs() const { return c_; }

    rational operator()(const rational& x) const;

    poly operator-() const;
    poly& operator+=(const poly& o);
    poly& operator-=(const poly& o);
    friend poly operator+(poly a, const poly& b) { return a += b; }
    friend poly operator-(poly a, const poly& b) { return a -= b; }
    friend poly operator*(const poly& a, const poly& b);
    poly& operator*=(const poly& o) { return *this = *this * o; }
    poly operator*(const rational& c) const;
    poly operator/(const rational& c) const;

    friend bool operator==(const poly& a, const poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const poly& a, const poly& b) { return a.c_ != b.c_; }

    poly derivative() const;
    poly monic() const;

    /// gcd of all coefficients as a positive rational, times the sign of the
    /// leading coefficient; content of zero is 0.
    rational content() const;
    /// p / content(): integer coprime coefficients, positive leading one.
    poly primitive_part() const;

    /// p(x^m).
    poly compose_power(int m) const;
    /// p(c*x).
    poly scale_arg(const rational& c) const;
    /// Multiply by x^k.
    poly shift_up(int k) const;

    /// Total-order comparison (by degree, then coefficients); used to fix
    /// deterministic iteration orders.
    static int compare(const poly& a, const poly& b);

    std::string str(const std::string& var = "x") const;
    friend std::ostream& operator<<(std::ostream& os, const poly& p);

private:
    void trim();
    std::vector<rational> c_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws
/// std::invalid_argument if b is zero.
std::pair<poly, poly> divrem(const poly& a, const poly& b);

/// Exact division; throws std::domain_error if b does not divide a.
poly divexact(const poly& a, const poly& b);

/// Monic gcd. Throws std::invalid_argument if both inputs are zero.
poly gcd(const poly& a, const poly& b);

/// q(n) = p(n+k) as a polynomial identity.
poly shift(const poly& p, long k);

/// Resultant with respect to z of a(z) and b(z) where the coefficients of b
/// are polynomials in a second variable u (b_zcoeffs[i] is the u-polynomial
/// coefficient of z^i). The result is a polynomial in u. Computed by
/// evaluation-interpolation; exact.
poly resultant(const poly& a, const std::vector<poly>& b_zcoeffs);

/// Plain resultant of two rational polynomials in the same variable.
rational resultant(const poly& a, const poly& b);

/// Rising factorial (alpha)_n = alpha (alpha+1) ... (alpha+n-1); n >= 0.
rational pochhammer(const rational& alpha, long n);

} // namespace seqform

#endif
