#include "seqform/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace seqform {

rational::rational(long num, long den) {
    if (den == 0)
        throw std::invalid_argument("rational: zero denominator");
    q_ = mpq_class((signed long)num, (signed long)den);
    q_.canonicalize();
}

rational::rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0)
        throw std::invalid_argument("rational: zero denominator");
    q_ = mpq_class(num) / mpq_class(den);
}

rational rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return rational(mpz_class(s), mpz_class(1));
        return rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rational: malformed literal '" + s + "'");
    }
}

long rational::to_long() const {
    if (!is_integer())
        throw std::domain_error("rational: not an integer");
    mpz_class n = numerator();
    if (!n.fits_slong_p())
        throw std::domain_error("rational: integer does not fit in long");
    return n.get_si();
}

rational& rational::operator/=(const rational& o) {
    if (o.is_zero())
        throw std::invalid_argument("rational: division by zero");
    q_ /= o.q_;
    return *this;
}

rational rational::inverse() const {
    if (is_zero())
        throw std::invalid_argument("rational: inverse of zero");
    return rational(mpq_class(1) / q_);
}

rational rational::pow(long e) const {
    if (e == 0)
        return rational(1);
    rational base = e > 0 ? *this : inverse();
    unsigned long k = e > 0 ? (unsigned long)e : (unsigned long)(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.q_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.q_.get_den().get_mpz_t(), k);
    return rational(num, den);
}

std::string rational::str() const {
    if (is_integer())
        return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const rational& r) { return os << r.str(); }

} // namespace seqform
