#include "seqform/poly.hpp"

#include "seqform/linsolve.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace seqform {

poly::poly(const rational& constant) {
    if (!constant.is_zero())
        c_.push_back(constant);
}

poly::poly(std::vector<rational> coeffs) : c_(std::move(coeffs)) { trim(); }

poly poly::monomial(const rational& c, int k) {
    if (c.is_zero())
        return poly();
    std::vector<rational> v((std::size_t)k + 1, rational(0));
    v.back() = c;
    return poly(std::move(v));
}

void poly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

rational poly::coeff(int k) const {
    if (k < 0 || k >= (int)c_.size())
        return rational(0);
    return c_[(std::size_t)k];
}

rational poly::leading() const {
    if (c_.empty())
        return rational(0);
    return c_.back();
}

rational poly::operator()(const rational& x) const {
    rational acc(0);
    for (int i = degree(); i >= 0; --i)
        acc = acc * x + c_[(std::size_t)i];
    return acc;
}

poly poly::operator-() const {
    poly r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

poly& poly::operator+=(const poly& o) {
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

poly& poly::operator-=(const poly& o) {
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

poly operator*(const poly& a, const poly& b) {
    if (a.is_zero() || b.is_zero())
        return poly();
    std::vector<rational> v(a.c_.size() + b.c_.size() - 1, rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] += a.c_[i] * b.c_[j];
    }
    return poly(std::move(v));
}

poly poly::operator*(const rational& c) const {
    if (c.is_zero())
        return poly();
    poly r = *this;
    for (auto& k : r.c_)
        k *= c;
    return r;
}

poly poly::operator/(const rational& c) const {
    if (c.is_zero())
        throw std::invalid_argument("poly: division by zero constant");
    return *this * c.inverse();
}

poly poly::derivative() const {
    if (c_.size() <= 1)
        return poly();
    std::vector<rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        v[i - 1] = c_[i] * rational((long)i);
    return poly(std::move(v));
}

poly poly::monic() const {
    if (is_zero())
        throw std::invalid_argument("poly: monic of zero polynomial");
    return *this / leading();
}

rational poly::content() const {
    if (is_zero())
        return rational(0);
    mpz_class g(0), l(1);
    for (const auto& c : c_) {
        if (c.is_zero())
            continue;
        mpz_class num = c.numerator();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        mpz_class den = c.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    rational r{g, l};
    return leading().sign() < 0 ? -r : r;
}

poly poly::primitive_part() const {
    if (is_zero())
        return poly();
    return *this / content();
}

poly poly::compose_power(int m) const {
    if (m <= 0)
        throw std::invalid_argument("poly: compose_power needs m >= 1");
    if (is_zero())
        return poly();
    std::vector<rational> v((c_.size() - 1) * (std::size_t)m + 1, rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        v[i * (std::size_t)m] = c_[i];
    return poly(std::move(v));
}

poly poly::scale_arg(const rational& c) const {
    poly r = *this;
    rational f(1);
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] *= f;
        f *= c;
    }
    r.trim();
    return r;
}

poly poly::shift_up(int k) const {
    if (is_zero() || k == 0)
        return *this;
    std::vector<rational> v((std::size_t)k, rational(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return poly(std::move(v));
}

int poly::compare(const poly& a, const poly& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        if (a.c_[(std::size_t)i] != b.c_[(std::size_t)i])
            return a.c_[(std::size_t)i] < b.c_[(std::size_t)i] ? -1 : 1;
    }
    return 0;
}

std::string poly::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        rational c = coeff(k);
        if (c.is_zero())
            continue;
        if (first) {
            if (c.sign() < 0)
                os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        rational a = c.abs();
        if (k == 0) {
            os << a.str();
        } else {
            if (!a.is_one())
                os << a.str() << "*";
            os << var;
            if (k > 1)
                os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const poly& p) { return os << p.str(); }

std::pair<poly, poly> divrem(const poly& a, const poly& b) {
    if (b.is_zero())
        throw std::invalid_argument("poly: division by zero polynomial");
    poly q;
    poly r = a;
    rational lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        rational c = r.leading() * lead_inv;
        poly t = poly::monomial(c, k);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

poly divexact(const poly& a, const poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero())
        throw std::domain_error("poly: inexact division");
    return q;
}

poly gcd(const poly& a, const poly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("poly: gcd of two zero polynomials");
    poly x = a, y = b;
    while (!y.is_zero()) {
        poly r = divrem(x, y).second;
        x = y;
        y = r.is_zero() ? r : r.monic();
    }
    return x.monic();
}

poly shift(const poly& p, long k) {
    // Horner in (x + k)
    poly xk = poly::variable() + poly(rational(k));
    poly acc;
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * xk + poly(p.coeff(i));
    return acc;
}

namespace {

poly poly_pow(const poly& p, int e) {
    poly r(1);
    for (int i = 0; i < e; ++i)
        r = r * p;
    return r;
}

rational sylvester_resultant(const poly& a, const poly& b) {
    int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0)
        return rational(0);
    if (m == 0 && n == 0)
        return rational(1);
    if (m == 0)
        return a.leading().pow(n);
    if (n == 0)
        return b.leading().pow(m);
    int size = m + n;
    qmatrix s((std::size_t)size, std::vector<rational>((std::size_t)size, rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            s[(std::size_t)i][(std::size_t)(i + j)] = a.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            s[(std::size_t)(n + i)][(std::size_t)(i + j)] = b.coeff(n - j);
    return determinant(std::move(s));
}

poly lagrange_interpolate(const std::vector<rational>& xs, const std::vector<rational>& ys) {
    poly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        poly basis(1);
        rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j)
                continue;
            basis = basis * (poly::variable() - poly(xs[j]));
            denom *= xs[i] - xs[j];
        }
        acc += basis * (ys[i] / denom);
    }
    return acc;
}

} // namespace

rational resultant(const poly& a, const poly& b) { return sylvester_resultant(a, b); }

poly resultant(const poly& a, const std::vector<poly>& b_zcoeffs) {
    if (a.is_zero())
        throw std::invalid_argument("resultant: first argument is zero");
    std::vector<poly> b = b_zcoeffs;
    while (!b.empty() && b.back().is_zero())
        b.pop_back();
    if (b.empty())
        return poly();
    int degz = (int)b.size() - 1;
    if (degz == 0)
        return poly_pow(b[0], a.degree());
    int max_u = 0;
    for (const auto& c : b)
        max_u = std::max(max_u, std::max(0, c.degree()));
    int bound = a.degree() * max_u;
    // evaluate u at integer points where the z-degree of b does not drop
    std::vector<rational> xs, ys;
    long u = 0;
    while ((int)xs.size() < bound + 1) {
        rational pt{u};
        ++u;
        if (b.back()(pt).is_zero())
            continue;
        std::vector<rational> bc;
        bc.reserve(b.size());
        for (const auto& c : b)
            bc.push_back(c(pt));
        xs.push_back(pt);
        ys.push_back(sylvester_resultant(a, poly(std::move(bc))));
    }
    return lagrange_interpolate(xs, ys);
}

rational pochhammer(const rational& alpha, long n) {
    if (n < 0)
        throw std::invalid_argument("pochhammer: negative index");
    rational acc(1);
    rational term = alpha;
    for (long i = 0; i < n; ++i) {
        acc *= term;
        term += rational(1);
    }
    return acc;
}

} // namespace seqform
