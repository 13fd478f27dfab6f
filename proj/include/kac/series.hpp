#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kac/errors.hpp"
#include "kac/numtheory.hpp"
#include "kac/rational.hpp"
#include "kac/quiver.hpp"
#include "kac/ratfun.hpp"

namespace kac {

// Coefficient-ring glue for TruncatedSeries. Two rings are supported:
// rational functions of q with the Adams operation q -> q^d, and plain
// rationals with every Adams operation the identity.
template <class C>
struct CoeffOps;

template <>
struct CoeffOps<RationalFunction> {
    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction one() { return RationalFunction(1); }
    static bool is_zero(const RationalFunction& c) { return c.is_zero(); }
    static RationalFunction adams(const RationalFunction& c, long long d) { return c.adams(d); }
    static RationalFunction from_rational(const mpq_class& r) { return RationalFunction(r); }
    static std::string str(const RationalFunction& c) { return c.str(); }
};

template <>
struct CoeffOps<mpq_class> {
    static mpq_class zero() { return mpq_class(0); }
    static mpq_class one() { return mpq_class(1); }
    static bool is_zero(const mpq_class& c) { return c == 0; }
    static mpq_class adams(const mpq_class& c, long long) { return c; }
    static mpq_class from_rational(const mpq_class& r) { return r; }
    static std::string str(const mpq_class& c) { return c.get_str(); }
};

namespace detail {

// Odometer step over the box [0, limit], last coordinate fastest.
inline bool next_in_box(DimVector& v, const DimVector& limit) {
    size_t i = v.size();
    while (i-- > 0) {
        if (v[i] < limit[i]) {
            ++v[i];
            return true;
        }
        v[i] = 0;
    }
    return false;
}

} // namespace detail

// Multivariate power series truncated to the box 0 <= alpha <= bound.
// The discarded monomials form a monomial ideal, so every operation below is
// exact arithmetic in the quotient ring; "infinite" sums and products are cut
// at index ht(bound) where all later terms land in the ideal.
template <class C>
class TruncatedSeries {
public:
    using Ops = CoeffOps<C>;

    explicit TruncatedSeries(DimVector bound) : bound_(std::move(bound)) {
        long long cells = 1;
        for (long long b : bound_) {
            if (b < 0) fail(ErrorKind::BoundMismatch, "negative entry in truncation bound");
            if (cells > 10'000'000 / (b + 1))
                fail(ErrorKind::BadConfig, "truncation box too large");
            cells *= b + 1;
        }
        stride_.assign(bound_.size(), 1);
        for (size_t i = bound_.size(); i-- > 1;) stride_[i - 1] = stride_[i] * (bound_[i] + 1);
        c_.assign((size_t)cells, Ops::zero());
    }

    static TruncatedSeries constant(const DimVector& bound, const C& v) {
        TruncatedSeries s(bound);
        s.c_[0] = v;
        return s;
    }

    static TruncatedSeries monomial(const DimVector& bound, const DimVector& alpha, const C& v) {
        TruncatedSeries s(bound);
        s.set(alpha, v);
        return s;
    }

    const DimVector& bound() const { return bound_; }
    long long height_bound() const { return height(bound_); }
    size_t cell_count() const { return c_.size(); }

    const C& at(const DimVector& alpha) const { return c_[rank(alpha)]; }
    void set(const DimVector& alpha, const C& v) { c_[rank(alpha)] = v; }
    const C& constant_term() const { return c_[0]; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const C& v) { return Ops::is_zero(v); });
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        require_same_bound(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        require_same_bound(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
        f.require_same_bound(g);
        TruncatedSeries out(f.bound_);
        // out[gamma] = sum over alpha <= gamma of f[alpha] * g[gamma - alpha];
        // ranks are linear in exponents, so rank(gamma-alpha) = rg - ra.
        DimVector gamma(f.bound_.size(), 0);
        size_t rg = 0;
        do {
            C acc = Ops::zero();
            DimVector alpha(f.bound_.size(), 0);
            size_t ra = 0;
            do {
                ra = f.rank(alpha);
                const C& fa = f.c_[ra];
                if (!Ops::is_zero(fa)) {
                    const C& gb = g.c_[rg - ra];
                    if (!Ops::is_zero(gb)) acc = acc + fa * gb;
                }
            } while (detail::next_in_box(alpha, gamma));
            out.c_[rg] = std::move(acc);
        } while (detail::next_in_box(gamma, f.bound_) && (rg = f.rank(gamma), true));
        return out;
    }

    TruncatedSeries scaled(const C& v) const {
        TruncatedSeries out(bound_);
        for (size_t i = 0; i < c_.size(); ++i)
            if (!Ops::is_zero(c_[i])) out.c_[i] = c_[i] * v;
        return out;
    }
    TruncatedSeries scaled_rational(const mpq_class& r) const {
        return scaled(Ops::from_rational(r));
    }

    bool operator==(const TruncatedSeries& o) const {
        if (bound_ != o.bound_) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    // First exponent (graded-lex) where the two series differ.
    friend std::optional<DimVector> first_difference(const TruncatedSeries& a,
                                                     const TruncatedSeries& b) {
        a.require_same_bound(b);
        for (const DimVector& alpha : dim_vectors_up_to(a.bound_))
            if (!(a.at(alpha) == b.at(alpha))) return alpha;
        return std::nullopt;
    }

    // One line per alpha in graded-lex order: "alpha TAB coefficient".
    std::string dump() const {
        std::ostringstream out;
        for (const DimVector& alpha : dim_vectors_up_to(bound_))
            out << dimvec_str(alpha) << '\t' << Ops::str(at(alpha)) << '\n';
        return out.str();
    }

private:
    void require_same_bound(const TruncatedSeries& o) const {
        if (bound_ != o.bound_) fail(ErrorKind::BoundMismatch, "series bounds differ");
    }

    size_t rank(const DimVector& alpha) const {
        if (alpha.size() != bound_.size())
            fail(ErrorKind::BoundMismatch, "exponent rank does not match series");
        size_t r = 0;
        for (size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] < 0 || alpha[i] > bound_[i])
                fail(ErrorKind::BoundMismatch, "exponent outside truncation box");
            r += (size_t)(alpha[i] * stride_[i]);
        }
        return r;
    }

    DimVector bound_;
    std::vector<long long> stride_;
    std::vector<C> c_;
};

using QqSeries = TruncatedSeries<RationalFunction>;
using QSeries = TruncatedSeries<mpq_class>;

// psi_d: a x^alpha -> psi_d(a) x^{d alpha}, terms leaving the box dropped.
template <class C>
TruncatedSeries<C> adams(const TruncatedSeries<C>& f, long long d) {
    if (d < 1) fail(ErrorKind::BadConfig, "adams index must be >= 1");
    if (d == 1) return f;
    TruncatedSeries<C> out(f.bound());
    DimVector alpha(f.bound().size(), 0);
    do {
        const C& v = f.at(alpha);
        if (CoeffOps<C>::is_zero(v)) continue;
        DimVector beta = vec_scaled(alpha, d);
        if (leq(beta, f.bound())) out.set(beta, CoeffOps<C>::adams(v, d));
    } while (detail::next_in_box(alpha, f.bound()));
    return out;
}

// Psi(f) = sum_{n>=1} psi_n(f)/n, cut exactly at n = ht(bound).
template <class C>
TruncatedSeries<C> big_psi(const TruncatedSeries<C>& f) {
    if (!CoeffOps<C>::is_zero(f.constant_term()))
        fail(ErrorKind::NonzeroConstantTerm, "big_psi needs zero constant term");
    TruncatedSeries<C> acc = f;
    for (long long n = 2; n <= f.height_bound(); ++n)
        acc += adams(f, n).scaled_rational(rat(1, n));
    return acc;
}

// Psi^{-1}(f) = sum_{n>=1} mu(n) psi_n(f)/n.
template <class C>
TruncatedSeries<C> big_psi_inv(const TruncatedSeries<C>& f) {
    if (!CoeffOps<C>::is_zero(f.constant_term()))
        fail(ErrorKind::NonzeroConstantTerm, "big_psi_inv needs zero constant term");
    TruncatedSeries<C> acc = f;
    for (long long n = 2; n <= f.height_bound(); ++n) {
        int mu = mobius(n);
        if (mu != 0) acc += adams(f, n).scaled_rational(rat(mu, n));
    }
    return acc;
}

template <class C>
TruncatedSeries<C> series_exp(const TruncatedSeries<C>& f) {
    if (!CoeffOps<C>::is_zero(f.constant_term()))
        fail(ErrorKind::BadConstantTerm, "series_exp needs zero constant term");
    TruncatedSeries<C> acc =
        TruncatedSeries<C>::constant(f.bound(), CoeffOps<C>::one());
    TruncatedSeries<C> term = acc;
    // term after step j is f^j / j!; every monomial of f^j has height >= j
    for (long long j = 1; j <= f.height_bound(); ++j) {
        term = (term * f).scaled_rational(rat(1, j));
        acc += term;
    }
    return acc;
}

template <class C>
TruncatedSeries<C> series_log(const TruncatedSeries<C>& g) {
    if (!(g.constant_term() == CoeffOps<C>::one()))
        fail(ErrorKind::BadConstantTerm, "series_log needs constant term 1");
    TruncatedSeries<C> h = g;
    h.set(DimVector(g.bound().size(), 0), CoeffOps<C>::zero());
    TruncatedSeries<C> acc(g.bound());
    TruncatedSeries<C> pw = TruncatedSeries<C>::constant(g.bound(), CoeffOps<C>::one());
    for (long long j = 1; j <= g.height_bound(); ++j) {
        pw = pw * h;
        acc += pw.scaled_rational(rat(j % 2 == 1 ? 1 : -1, j));
    }
    return acc;
}

// Exp(f) = exp(Psi(f))
template <class C>
TruncatedSeries<C> cap_exp(const TruncatedSeries<C>& f) {
    if (!CoeffOps<C>::is_zero(f.constant_term()))
        fail(ErrorKind::NonzeroConstantTerm, "cap_exp needs zero constant term");
    return series_exp(big_psi(f));
}

// Log(g) = Psi^{-1}(log(g))
template <class C>
TruncatedSeries<C> cap_log(const TruncatedSeries<C>& g) {
    return big_psi_inv(series_log(g));
}

// h^c := exp(c log h) for a coefficient exponent c
template <class C>
TruncatedSeries<C> scalar_pow(const TruncatedSeries<C>& h, const C& c) {
    return series_exp(series_log(h).scaled(c));
}

// Pow(f, g) = Exp(g Log f)
template <class C>
TruncatedSeries<C> pow_struct(const TruncatedSeries<C>& f, const C& g) {
    return cap_exp(cap_log(f).scaled(g));
}

// prod_{d=1}^{ht bound} psi_d(f)^{g_d}; exponents[d-1] supplies g_d.
template <class C>
TruncatedSeries<C> pow_product(const TruncatedSeries<C>& f, const std::vector<C>& exponents) {
    if (!(f.constant_term() == CoeffOps<C>::one()))
        fail(ErrorKind::BadConstantTerm, "pow_product needs constant term 1");
    if ((long long)exponents.size() < f.height_bound())
        fail(ErrorKind::BadConfig, "pow_product needs an exponent for each d <= ht(bound)");
    TruncatedSeries<C> acc =
        TruncatedSeries<C>::constant(f.bound(), CoeffOps<C>::one());
    for (long long d = 1; d <= f.height_bound(); ++d) {
        const C& gd = exponents[(size_t)(d - 1)];
        if (CoeffOps<C>::is_zero(gd)) continue;
        acc = acc * scalar_pow(adams(f, d), gd);
    }
    return acc;
}

// Laplacian: a x^alpha -> (alpha, alpha) a x^alpha
template <class C>
TruncatedSeries<C> delta_op(const TruncatedSeries<C>& f, const Quiver& quiver) {
    TruncatedSeries<C> out(f.bound());
    DimVector alpha(f.bound().size(), 0);
    do {
        const C& v = f.at(alpha);
        if (!CoeffOps<C>::is_zero(v))
            out.set(alpha, v * CoeffOps<C>::from_rational(rat(quiver.bilinear(alpha, alpha))));
    } while (detail::next_in_box(alpha, f.bound()));
    return out;
}

// Derivative along rho: a x^alpha -> (ht alpha) a x^alpha
template <class C>
TruncatedSeries<C> d_rho(const TruncatedSeries<C>& f) {
    TruncatedSeries<C> out(f.bound());
    DimVector alpha(f.bound().size(), 0);
    do {
        const C& v = f.at(alpha);
        if (!CoeffOps<C>::is_zero(v))
            out.set(alpha, v * CoeffOps<C>::from_rational(rat(height(alpha))));
    } while (detail::next_in_box(alpha, f.bound()));
    return out;
}

// (nabla f, nabla g) = sum_{alpha,beta} (alpha,beta) f_alpha g_beta x^{alpha+beta}
template <class C>
TruncatedSeries<C> nabla_pair(const TruncatedSeries<C>& f, const TruncatedSeries<C>& g,
                              const Quiver& quiver) {
    if (f.bound() != g.bound()) fail(ErrorKind::BoundMismatch, "series bounds differ");
    TruncatedSeries<C> out(f.bound());
    DimVector alpha(f.bound().size(), 0);
    do {
        const C& fa = f.at(alpha);
        if (CoeffOps<C>::is_zero(fa)) continue;
        DimVector room = vec_sub(f.bound(), alpha);
        DimVector beta(f.bound().size(), 0);
        do {
            const C& gb = g.at(beta);
            if (CoeffOps<C>::is_zero(gb)) continue;
            long long w = quiver.bilinear(alpha, beta);
            if (w == 0) continue;
            DimVector gamma = vec_add(alpha, beta);
            out.set(gamma, out.at(gamma) + fa * gb * CoeffOps<C>::from_rational(rat(w)));
        } while (detail::next_in_box(beta, room));
    } while (detail::next_in_box(alpha, f.bound()));
    return out;
}

} // namespace kac
