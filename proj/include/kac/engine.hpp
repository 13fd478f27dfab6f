#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kac/laurent.hpp"
#include "kac/partitions.hpp"
#include "kac/quiver.hpp"
#include "kac/ratfun.hpp"
#include "kac/series.hpp"

namespace kac {

// r_lambda(q) = prod_{k>=1} q^{-T(lambda_k)} / prod_i phi_{lambda^i_k - lambda^i_{k+1}}(q^{-1}),
// assembled with every phi_m(q^{-1}) rewritten as (-1)^m q^{-m(m+1)/2} phi_m(q).
RationalFunction r_lambda(const Quiver& quiver, const Multipartition& lambda);

// Generating series r: coefficient at alpha is the sum of r_lambda over all
// multipartitions of weight alpha. Distinct alpha are computed in parallel.
QqSeries r_series(const Quiver& quiver, const DimVector& bound);

// Number of monic irreducible polynomials of degree d over F_q, except t
// itself: Phi_d(q) = (1/d) sum_{e|d} mu(d/e) (q^e - 1). Integer-valued at
// integers but with rational coefficients for d >= 2; the defining relation
// sum_{e|d} e Phi_e = q^d - 1 is asserted. Cached.
const LaurentPoly& phi_d_count(long long d);

// Pow(r, p) for a polynomial exponent p via the product formula
// prod_d psi_d(r)^{Phi_d} with sum_{d|n} d Phi_d = p(q^n); the direct
// definition Exp(p Log r) is computed too and equality is asserted.
QqSeries pow_generalized(const QqSeries& r, const LaurentPoly& p);

struct CriterionRecord {
    DimVector alpha;
    mpq_class r_at_zero;
    long long tits = 0;
    long long ht = 0;
    bool passes = false; // r_at_zero == 0 or tits == ht
};

// Pipeline wrapper holding the generating series of one quiver at one
// truncation bound, with internal cross-checks:
//  - m is the product over irreducible-polynomial counts; every m_alpha and
//    a_alpha must be a polynomial in q with integer coefficients, and every
//    i_alpha an integer-valued polynomial (rational coefficients occur, e.g.
//    (q^2+q+2)/2 for the double arrow at alpha=(2,2));
//  - m = Exp(a) = Pow(r, q-1) exactly (first differing alpha reported);
//  - sum m_alpha x^alpha = prod_alpha (1 - x^alpha)^{-i_alpha}.
// Any violation throws ConsistencyFailure naming the exponent.
class Engine {
public:
    Engine(Quiver quiver, DimVector bound);

    const Quiver& quiver() const { return quiver_; }
    const DimVector& bound() const { return bound_; }

    const QqSeries& r();
    const QqSeries& m();
    const QqSeries& a();
    const QqSeries& i();

    // r with q = 0; PoleAtZero is annotated with the offending alpha
    const QSeries& r_at_zero();

    // one record per 0 < alpha <= bound, graded-lex order
    std::vector<CriterionRecord> criterion();

    // first alpha (graded-lex) with a negative coefficient in some a_alpha,
    // if any; reported as an observation, never asserted
    std::optional<DimVector> first_negative_a();

private:
    void check_triple_agreement();

    Quiver quiver_;
    DimVector bound_;
    std::optional<QqSeries> r_, m_, a_, i_;
    std::optional<QSeries> r0_;
    bool triple_checked_ = false;
};

} // namespace kac
