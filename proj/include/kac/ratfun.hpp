#pragma once

#include <string>
#include <vector>

#include "kac/laurent.hpp"

namespace kac {

// Element of Q(q) held as an exact ratio of Laurent polynomials.
//
// Canonical form, restored after every operation:
//   * numerator and denominator share no polynomial factor (gcd 1) and no
//     monomial factor q^k beyond what the numerator itself carries,
//   * the denominator has lowest exponent 0, integer coprime coefficients,
//     and a positive constant term.
// The zero function is 0/1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(long v) : num_(v), den_(1) {}
    RationalFunction(const mpq_class& v) : num_(v), den_(1) {}
    explicit RationalFunction(LaurentPoly numerator) : num_(std::move(numerator)), den_(1) { canonicalize(); }
    RationalFunction(LaurentPoly numerator, LaurentPoly denominator);

    static RationalFunction q() { return RationalFunction(LaurentPoly::q_power(1)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    // exact: a/b == c/d iff ad - cb = 0
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    // Adams operation on Q(q): substitute q -> q^d, d >= 1
    RationalFunction adams(long long d) const;

    // value at q = 0; PoleAtZero if the canonical form has a genuine pole
    mpq_class at_zero() const;

    // ascending coefficient list when the function is a polynomial in q;
    // NotAPolynomial otherwise
    std::vector<mpq_class> as_polynomial() const;

    std::string str() const;

private:
    void canonicalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

} // namespace kac
