#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace kac {

// Sparse Laurent polynomial in one variable q over exact rationals.
// Exponents may be negative; no zero coefficient is ever stored.
class LaurentPoly {
public:
    LaurentPoly() = default; // zero
    LaurentPoly(long v) { set(0, mpq_class(v)); }
    LaurentPoly(const mpq_class& v) { set(0, v); }

    static LaurentPoly monomial(const mpq_class& c, long long exp) {
        LaurentPoly p;
        p.set(exp, c);
        return p;
    }
    static LaurentPoly q_power(long long exp) { return monomial(1, exp); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }

    // lowest/highest stored exponent; poly must be nonzero
    long long min_exp() const { return c_.begin()->first; }
    long long max_exp() const { return c_.rbegin()->first; }

    mpq_class coeff(long long exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? mpq_class(0) : it->second;
    }
    const std::map<long long, mpq_class>& terms() const { return c_; }

    void set(long long exp, mpq_class v) {
        if (v == 0)
            c_.erase(exp);
        else
            c_[exp] = std::move(v);
    }
    void add_term(long long exp, const mpq_class& v) {
        auto it = c_.find(exp);
        if (it == c_.end()) {
            if (v != 0) c_.emplace(exp, v);
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, v);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, -v);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, v] : c_) r.c_.emplace(e, -v);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // multiply by q^delta
    LaurentPoly shifted(long long delta) const {
        LaurentPoly r;
        for (const auto& [e, v] : c_) r.c_.emplace(e + delta, v);
        return r;
    }
    // substitute q -> q^d; d must be nonzero (d < 0 allowed, used in tests)
    LaurentPoly stretched(long long d) const;

    LaurentPoly scaled(const mpq_class& s) const {
        LaurentPoly r;
        if (s == 0) return r;
        for (const auto& [e, v] : c_) r.c_.emplace(e, v * s);
        return r;
    }

    // evaluate at a rational point; requires min_exp() >= 0 or x != 0
    mpq_class eval(const mpq_class& x) const;

    std::string str() const;

private:
    std::map<long long, mpq_class> c_;
};

// Quotient and remainder of a by b over Q; both arguments must have no
// negative exponents and b must be nonzero.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);

// Gcd of two nonnegative-exponent polynomials, computed with a primitive
// polynomial remainder sequence over the integers. The result is an
// integer-primitive polynomial with positive leading coefficient (1 when
// the inputs are coprime; 0 only if both inputs are 0).
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

// Positive rational c such that p/c has coprime integer coefficients.
mpq_class poly_content(const LaurentPoly& p);

// prod_{i=1..m} (1 - q^i); the empty product is 1. Cached.
const LaurentPoly& q_pochhammer(long long m);

} // namespace kac
