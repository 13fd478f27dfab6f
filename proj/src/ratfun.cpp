#include "kac/ratfun.hpp"

#include <cassert>
#include <sstream>

#include "kac/errors.hpp"

namespace kac {

RationalFunction::RationalFunction(LaurentPoly numerator, LaurentPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    // split off the monomial parts so both sides are honest polynomials
    long long num_shift = num_.min_exp();
    long long den_shift = den_.min_exp();
    LaurentPoly n = num_.shifted(-num_shift);
    LaurentPoly d = den_.shifted(-den_shift);

    LaurentPoly g = poly_gcd(n, d);
    if (!g.is_one()) {
        auto [qn, rn] = poly_divmod(n, g);
        auto [qd, rd] = poly_divmod(d, g);
        assert(rn.is_zero() && rd.is_zero());
        n = std::move(qn);
        d = std::move(qd);
    }

    // scale so the denominator has coprime integer coefficients and a
    // positive constant term (its lowest exponent is 0 by construction)
    mpq_class c = poly_content(d);
    if (d.coeff(0) < 0) c = -c;
    mpq_class inv_c = 1 / c;
    num_ = n.scaled(inv_c).shifted(num_shift - den_shift);
    den_ = d.scaled(inv_c);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::adams(long long d) const {
    assert(d >= 1);
    if (d == 1) return *this;
    return RationalFunction(num_.stretched(d), den_.stretched(d));
}

mpq_class RationalFunction::at_zero() const {
    if (num_.is_zero()) return 0;
    long long low = num_.min_exp();
    if (low < 0)
        fail(ErrorKind::PoleAtZero, "pole of order " + std::to_string(-low) + " at q = 0");
    if (low > 0) return 0;
    return num_.coeff(0) / den_.coeff(0);
}

std::vector<mpq_class> RationalFunction::as_polynomial() const {
    if (num_.is_zero()) return {};
    if (num_.min_exp() < 0)
        fail(ErrorKind::NotAPolynomial,
             "negative power q^" + std::to_string(num_.min_exp()) + " in the numerator");
    auto [quot, rem] = poly_divmod(num_, den_);
    if (!rem.is_zero())
        fail(ErrorKind::NotAPolynomial, "remainder " + rem.str() + " after division by " + den_.str());
    std::vector<mpq_class> coeffs(static_cast<size_t>(quot.max_exp()) + 1, mpq_class(0));
    for (const auto& [e, v] : quot.terms()) coeffs[static_cast<size_t>(e)] = v;
    return coeffs;
}

std::string RationalFunction::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ") / (" << den_.str() << ")";
    return os.str();
}

} // namespace kac
