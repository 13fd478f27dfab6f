#include "kac/laurent.hpp"

#include <cassert>
#include <deque>
#include <mutex>
#include <sstream>
#include <vector>

#include "kac/errors.hpp"

namespace kac {

LaurentPoly LaurentPoly::stretched(long long d) const {
    assert(d != 0);
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_.emplace(e * d, v);
    return r;
}

mpq_class LaurentPoly::eval(const mpq_class& x) const {
    if (c_.empty()) return 0;
    if (x == 0) {
        if (min_exp() < 0) fail(ErrorKind::PoleAtZero, "evaluating a Laurent polynomial with negative exponents at 0");
        return coeff(0);
    }
    // Horner over the exponent gaps, from the highest exponent down.
    mpq_class acc = 0;
    long long prev_exp = max_exp();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        for (long long k = prev_exp; k > it->first; --k) acc *= x;
        acc += it->second;
        prev_exp = it->first;
    }
    if (prev_exp > 0) {
        for (long long k = 0; k < prev_exp; ++k) acc *= x;
    } else if (prev_exp < 0) {
        mpq_class inv = 1 / x;
        for (long long k = 0; k < -prev_exp; ++k) acc *= inv;
    }
    return acc;
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : c_) {
        mpq_class mag = v < 0 ? mpq_class(-v) : v;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (!unit || e == 0) os << mag.get_str();
        if (e != 0) {
            if (!unit) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

// dense ascending coefficient vector for a poly with min_exp >= 0
std::vector<mpq_class> to_dense(const LaurentPoly& p) {
    if (p.is_zero()) return {};
    assert(p.min_exp() >= 0);
    std::vector<mpq_class> d(static_cast<size_t>(p.max_exp()) + 1, mpq_class(0));
    for (const auto& [e, v] : p.terms()) d[static_cast<size_t>(e)] = v;
    return d;
}

LaurentPoly from_dense(const std::vector<mpq_class>& d) {
    LaurentPoly p;
    for (size_t i = 0; i < d.size(); ++i) p.set(static_cast<long long>(i), d[i]);
    return p;
}

void trim(std::vector<mpq_class>& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

// integer-primitive part with positive leading coefficient
std::vector<mpz_class> primitive(std::vector<mpz_class> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) return p;
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (p.back() < 0) g = -g;
    for (auto& c : p) c /= g;
    return p;
}

// pseudo-remainder of a by b (b nonzero), over the integers
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    const mpz_class& lead = b.back();
    while (a.size() >= b.size()) {
        mpz_class top = a.back();
        size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lead;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= top * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

std::vector<mpz_class> to_integer(const LaurentPoly& p) {
    mpz_class den_lcm = 1;
    for (const auto& [e, v] : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
    std::vector<mpz_class> d;
    if (p.is_zero()) return d;
    d.assign(static_cast<size_t>(p.max_exp()) + 1, mpz_class(0));
    for (const auto& [e, v] : p.terms()) {
        mpq_class scaled = v * den_lcm;
        d[static_cast<size_t>(e)] = scaled.get_num();
    }
    return d;
}

} // namespace

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    assert(b.min_exp() >= 0);
    assert(a.is_zero() || a.min_exp() >= 0);
    std::vector<mpq_class> r = to_dense(a);
    std::vector<mpq_class> d = to_dense(b);
    std::vector<mpq_class> q(r.size() >= d.size() ? r.size() - d.size() + 1 : 0, mpq_class(0));
    while (r.size() >= d.size() && !r.empty()) {
        mpq_class c = r.back() / d.back();
        size_t shift = r.size() - d.size();
        q[shift] = c;
        for (size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
        trim(r);
    }
    return {from_dense(q), from_dense(r)};
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    std::vector<mpz_class> u = primitive(to_integer(a));
    std::vector<mpz_class> v = primitive(to_integer(b));
    if (u.size() < v.size()) u.swap(v);
    while (!v.empty()) {
        std::vector<mpz_class> r = primitive(pseudo_rem(u, v));
        u.swap(v);
        v.swap(r);
    }
    LaurentPoly g;
    for (size_t i = 0; i < u.size(); ++i) g.set(static_cast<long long>(i), mpq_class(u[i]));
    return g;
}

mpq_class poly_content(const LaurentPoly& p) {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, v] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
    }
    if (num_gcd == 0) return 1;
    mpq_class c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

const LaurentPoly& q_pochhammer(long long m) {
    // deque: growth must not invalidate references handed out earlier
    static std::deque<LaurentPoly> cache{LaurentPoly(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long long>(cache.size()) <= m) {
        long long i = static_cast<long long>(cache.size());
        LaurentPoly factor = LaurentPoly(1) - LaurentPoly::q_power(i);
        cache.push_back(cache.back() * factor);
    }
    return cache[static_cast<size_t>(m)];
}

} // namespace kac
