#include "kac/engine.hpp"

#include <deque>
#include <mutex>

#include "kac/errors.hpp"
#include "kac/numtheory.hpp"
#include "kac/parallel.hpp"
#include "kac/rational.hpp"

namespace kac {

namespace {

// Coefficients must be polynomials in q with integer coefficients (they
// count objects); anything else is an implementation bug, not an input error.
void require_integer_polynomial(const RationalFunction& c, const char* what,
                                const DimVector& alpha) {
    std::vector<mpq_class> coeffs;
    try {
        coeffs = c.as_polynomial();
    } catch (const Error& e) {
        fail(ErrorKind::ConsistencyFailure, std::string(what) + " coefficient at alpha=" +
                                                dimvec_str(alpha) +
                                                " is not a polynomial: " + e.what());
    }
    for (const mpq_class& v : coeffs)
        if (v.get_den() != 1)
            fail(ErrorKind::ConsistencyFailure, std::string(what) + " coefficient at alpha=" +
                                                    dimvec_str(alpha) +
                                                    " has a non-integer coefficient " +
                                                    v.get_str());
}

// Weaker requirement: the coefficient is a polynomial taking integer values
// at every integer (its Newton coefficients -- iterated differences at 0 --
// are integers).  Indecomposable counts over extension fields can have
// genuinely rational coefficients, e.g. (q^2+q+2)/2 for the double arrow at
// alpha=(2,2), while still being integer-valued at prime powers.
void require_integer_valued_polynomial(const RationalFunction& c, const char* what,
                                       const DimVector& alpha) {
    std::vector<mpq_class> coeffs;
    try {
        coeffs = c.as_polynomial();
    } catch (const Error& e) {
        fail(ErrorKind::ConsistencyFailure, std::string(what) + " coefficient at alpha=" +
                                                dimvec_str(alpha) +
                                                " is not a polynomial: " + e.what());
    }
    std::vector<mpq_class> vals;
    for (size_t t = 0; t < coeffs.size(); ++t) {
        mpq_class v = 0;
        for (size_t j = coeffs.size(); j-- > 0;) v = v * rat((long long)t) + coeffs[j];
        vals.push_back(v);
    }
    while (!vals.empty()) {
        if (vals.front().get_den() != 1)
            fail(ErrorKind::ConsistencyFailure,
                 std::string(what) + " coefficient at alpha=" + dimvec_str(alpha) +
                     " is not integer-valued (Newton coefficient " + vals.front().get_str() +
                     ")");
        for (size_t j = 0; j + 1 < vals.size(); ++j) vals[j] = vals[j + 1] - vals[j];
        vals.pop_back();
    }
}

} // namespace

RationalFunction r_lambda(const Quiver& quiver, const Multipartition& lambda) {
    if ((int)lambda.size() != quiver.vertex_count())
        fail(ErrorKind::BoundMismatch, "multipartition rank does not match quiver");
    LaurentPoly num(1), den(1);
    size_t levels = max_length(lambda);
    for (size_t k = 1; k <= levels; ++k) {
        DimVector rk = row(lambda, k);
        long long shift = -quiver.tits(rk);
        bool negate = false;
        for (size_t i = 0; i < lambda.size(); ++i) {
            long long m = part(lambda[i], k) - part(lambda[i], k + 1);
            // 1/phi_m(q^{-1}) = (-1)^m q^{m(m+1)/2} / phi_m(q)
            shift += m * (m + 1) / 2;
            if (m % 2 == 1) negate = !negate;
            den *= q_pochhammer(m);
        }
        num = num.shifted(shift);
        if (negate) num = -num;
    }
    return RationalFunction(num, den);
}

QqSeries r_series(const Quiver& quiver, const DimVector& bound) {
    std::vector<DimVector> exps = dim_vectors_up_to(bound);
    std::vector<RationalFunction> slots(exps.size());
    parallel_for(exps.size(), [&](size_t idx) {
        RationalFunction sum;
        MultipartitionStream stream(exps[idx]);
        while (auto mp = stream.next()) sum += r_lambda(quiver, *mp);
        slots[idx] = std::move(sum);
    });
    QqSeries out(bound);
    for (size_t idx = 0; idx < exps.size(); ++idx) out.set(exps[idx], slots[idx]);
    return out;
}

const LaurentPoly& phi_d_count(long long d) {
    if (d < 1) fail(ErrorKind::BadConfig, "irreducible-count index must be >= 1");
    static std::deque<LaurentPoly> cache; // deque: references stay valid as it grows
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while ((long long)cache.size() < d) {
        long long k = (long long)cache.size() + 1;
        LaurentPoly sum;
        for (long long e : divisors(k)) {
            int mu_factor = mobius(k / e);
            if (mu_factor == 0) continue;
            LaurentPoly term = LaurentPoly::q_power(e) - LaurentPoly(1);
            sum += term.scaled(mu_factor);
        }
        // integer-valued but not integer-coefficiented (degree 2 gives (q^2-q)/2)
        cache.push_back(sum.scaled(rat(1, k)));
        // self-check via the defining relation: sum_{e|k} e*count_e = q^k - 1
        LaurentPoly relation;
        for (long long e : divisors(k)) relation += cache[e - 1].scaled(rat(e));
        if (!(relation == LaurentPoly::q_power(k) - LaurentPoly(1)))
            fail(ErrorKind::ConsistencyFailure,
                 "irreducible counts violate the divisor-sum relation at degree " +
                     std::to_string(k));
    }
    return cache[d - 1];
}

QqSeries pow_generalized(const QqSeries& r, const LaurentPoly& p) {
    if (!p.is_zero() && p.min_exp() < 0)
        fail(ErrorKind::BadConfig, "power-structure exponent must be a polynomial in q");
    long long hb = r.height_bound();
    // Mobius inversion of sum_{d|n} d g_d = p(q^n)
    std::vector<RationalFunction> exps;
    for (long long d = 1; d <= hb; ++d) {
        LaurentPoly sum;
        for (long long e : divisors(d)) {
            int mu_factor = mobius(d / e);
            if (mu_factor == 0) continue;
            sum += p.stretched(e).scaled(mu_factor);
        }
        RationalFunction gd(LaurentPoly(sum), LaurentPoly(1));
        exps.push_back(gd / RationalFunction(rat(d)));
    }
    QqSeries via_product = pow_product(r, exps);
    QqSeries via_struct = pow_struct(r, RationalFunction(p));
    if (auto diff = first_difference(via_product, via_struct))
        fail(ErrorKind::ConsistencyFailure,
             "power-structure routes disagree first at alpha=" + dimvec_str(*diff));
    return via_product;
}

Engine::Engine(Quiver quiver, DimVector bound)
    : quiver_(std::move(quiver)), bound_(std::move(bound)) {
    if ((int)bound_.size() != quiver_.vertex_count())
        fail(ErrorKind::BoundMismatch, "bound rank does not match quiver");
    for (long long b : bound_)
        if (b < 0) fail(ErrorKind::BoundMismatch, "negative entry in bound");
}

const QqSeries& Engine::r() {
    if (!r_) r_ = r_series(quiver_, bound_);
    return *r_;
}

const QqSeries& Engine::m() {
    if (!m_) {
        std::vector<RationalFunction> exps;
        for (long long d = 1; d <= height(bound_); ++d)
            exps.push_back(RationalFunction(phi_d_count(d)));
        QqSeries m = pow_product(r(), exps);
        for (const DimVector& alpha : dim_vectors_up_to(bound_))
            require_integer_polynomial(m.at(alpha), "m", alpha);
        m_ = std::move(m);
    }
    return *m_;
}

const QqSeries& Engine::a() {
    if (!a_) {
        RationalFunction q_minus_1 = RationalFunction::q() - RationalFunction(1);
        QqSeries a = cap_log(r()).scaled(q_minus_1);
        for (const DimVector& alpha : dim_vectors_up_to(bound_))
            require_integer_polynomial(a.at(alpha), "a", alpha);
        a_ = std::move(a);
        check_triple_agreement();
    }
    return *a_;
}

void Engine::check_triple_agreement() {
    if (triple_checked_) return;
    const QqSeries& mm = m();
    if (auto diff = first_difference(mm, cap_exp(*a_)))
        fail(ErrorKind::ConsistencyFailure,
             "m and Exp(a) disagree first at alpha=" + dimvec_str(*diff));
    RationalFunction q_minus_1 = RationalFunction::q() - RationalFunction(1);
    if (auto diff = first_difference(mm, pow_struct(r(), q_minus_1)))
        fail(ErrorKind::ConsistencyFailure,
             "m and Pow(r, q-1) disagree first at alpha=" + dimvec_str(*diff));
    triple_checked_ = true;
}

const QqSeries& Engine::i() {
    if (!i_) {
        const QqSeries& av = a();
        QqSeries iv(bound_);
        for (const DimVector& alpha : dim_vectors_up_to(bound_)) {
            if (is_zero(alpha)) continue;
            RationalFunction sum;
            long long g = vec_gcd(alpha);
            for (long long d : divisors(g)) {
                DimVector base = *vec_divided(alpha, d);
                const RationalFunction& a_base = av.at(base);
                if (a_base.is_zero()) continue;
                for (long long k : divisors(d)) {
                    int mu_factor = mobius(k);
                    if (mu_factor == 0) continue;
                    sum += a_base.adams(d / k) * RationalFunction(rat(mu_factor, d));
                }
            }
            require_integer_valued_polynomial(sum, "i", alpha);
            iv.set(alpha, sum);
        }
        // product identity: m = prod_{alpha>0} (1 - x^alpha)^{-i_alpha},
        // i.e. m = exp(sum_alpha i_alpha sum_{k>=1} x^{k alpha} / k)
        QqSeries logs(bound_);
        for (const DimVector& alpha : dim_vectors_up_to(bound_)) {
            if (is_zero(alpha)) continue;
            const RationalFunction& ia = iv.at(alpha);
            if (ia.is_zero()) continue;
            for (long long k = 1;; ++k) {
                DimVector beta = vec_scaled(alpha, k);
                if (!leq(beta, bound_)) break;
                logs.set(beta, logs.at(beta) + ia * RationalFunction(rat(1, k)));
            }
        }
        if (auto diff = first_difference(series_exp(logs), m()))
            fail(ErrorKind::ConsistencyFailure,
                 "m and the indecomposable product disagree first at alpha=" +
                     dimvec_str(*diff));
        i_ = std::move(iv);
    }
    return *i_;
}

const QSeries& Engine::r_at_zero() {
    if (!r0_) {
        const QqSeries& rv = r();
        QSeries out(bound_);
        for (const DimVector& alpha : dim_vectors_up_to(bound_)) {
            try {
                out.set(alpha, rv.at(alpha).at_zero());
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::PoleAtZero)
                    fail(ErrorKind::PoleAtZero,
                         "r coefficient at alpha=" + dimvec_str(alpha) + ": " + e.what());
                throw;
            }
        }
        r0_ = std::move(out);
    }
    return *r0_;
}

std::vector<CriterionRecord> Engine::criterion() {
    const QSeries& r0 = r_at_zero();
    std::vector<CriterionRecord> records;
    for (const DimVector& alpha : dim_vectors_up_to(bound_)) {
        if (is_zero(alpha)) continue;
        CriterionRecord rec;
        rec.alpha = alpha;
        rec.r_at_zero = r0.at(alpha);
        rec.tits = quiver_.tits(alpha);
        rec.ht = height(alpha);
        rec.passes = rec.r_at_zero == 0 || rec.tits == rec.ht;
        records.push_back(std::move(rec));
    }
    return records;
}

std::optional<DimVector> Engine::first_negative_a() {
    const QqSeries& av = a();
    for (const DimVector& alpha : dim_vectors_up_to(bound_)) {
        for (const mpq_class& c : av.at(alpha).as_polynomial())
            if (c < 0) return alpha;
    }
    return std::nullopt;
}

} // namespace kac
