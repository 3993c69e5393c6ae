#ifndef SEQFORM_RATIONAL_HPP
#define SEQFORM_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace seqform {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Values are always canonical: denominator > 0, gcd(|num|, den) = 1, and
/// zero is stored as 0/1. Backed by GMP.
class rational {
public:
    rational() : q_(0) {}
    rational(int n) : q_(n) {}
    rational(long n) : q_((signed long)n) {}
    rational(long num, long den);
    rational(const mpz_class& num, const mpz_class& den);
    explicit rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p", "-p", or "p/q" with decimal integers. Throws
    /// std::invalid_argument on malformed input or zero denominator.
    static rational from_string(const std::string& s);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_nonneg_integer() const { return is_integer() && sgn(q_) >= 0; }
    int sign() const { return sgn(q_); }

    /// Value as long; requires is_integer() and a value that fits.
    long to_long() const;

    rational operator-() const { return rational(mpq_class(-q_)); }
    rational& operator+=(const rational& o) { q_ += o.q_; return *this; }
    rational& operator-=(const rational& o) { q_ -= o.q_; return *this; }
    rational& operator*=(const rational& o) { q_ *= o.q_; return *this; }
    rational& operator/=(const rational& o);

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }
    friend rational operator/(rational a, const rational& b) { return a /= b; }

    friend bool operator==(const rational& a, const rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const rational& a, const rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const rational& a, const rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const rational& a, const rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const rational& a, const rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const rational& a, const rational& b) { return a.q_ >= b.q_; }

    rational inverse() const;
    rational abs() const { return q_ < 0 ? -*this : *this; }

    /// Integer power with arbitrary (possibly negative) exponent.
    rational pow(long e) const;

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const rational& r);

private:
    mpq_class q_;
};

} // namespace seqform

#endif
