#include "kac/peterson.hpp"

#include <sstream>

#include "kac/errors.hpp"
#include "kac/numtheory.hpp"
#include "kac/rational.hpp"
#include "kac/series.hpp"

namespace kac {

std::string MultiplicityTable::dump() const {
    std::ostringstream out;
    for (const DimVector& alpha : dim_vectors_up_to(bound)) {
        if (is_zero(alpha)) continue;
        out << dimvec_str(alpha) << '\t' << mult.at(alpha).get_str() << '\n';
    }
    return out.str();
}

MultiplicityTable peterson_multiplicities(const Quiver& quiver, const DimVector& bound) {
    if ((int)bound.size() != quiver.vertex_count())
        fail(ErrorKind::BoundMismatch, "bound rank does not match quiver");
    MultiplicityTable table;
    table.bound = bound;
    for (const DimVector& alpha : dim_vectors_up_to(bound)) {
        long long ht = height(alpha);
        if (ht == 0) continue;
        if (ht == 1) { // simple root
            table.mult[alpha] = 1;
            table.cbar[alpha] = 1;
            continue;
        }
        // divisibility tail: sum_{n>1, n|alpha} (1/n) mult(alpha/n)
        mpq_class tail = 0;
        for (long long n : divisors(vec_gcd(alpha)))
            if (n > 1) tail += table.mult.at(*vec_divided(alpha, n)) / rat(n);
        // convolution over beta + gamma = alpha with beta, gamma > 0,
        // folded over the symmetric pairs
        mpq_class conv = 0;
        DimVectorStream betas(alpha);
        while (auto beta_opt = betas.next()) {
            const DimVector& beta = *beta_opt;
            if (is_zero(beta)) continue;
            DimVector gamma = vec_sub(alpha, beta);
            if (is_zero(gamma)) continue;
            if (graded_lex_less(gamma, beta)) continue; // symmetric partner already counted
            mpq_class term = table.cbar.at(beta) * table.cbar.at(gamma) *
                             rat(quiver.bilinear(beta, gamma));
            conv += (beta == gamma) ? term : 2 * term;
        }
        long long denom = quiver.bilinear(alpha, alpha) - 2 * ht;
        mpq_class abar;
        if (denom != 0) {
            abar = conv / rat(denom) - tail;
        } else if (conv == 0) {
            // (alpha,alpha) = 2 ht alpha can only happen for a non-root here,
            // so the multiplicity is 0
            abar = 0;
        } else {
            fail(ErrorKind::DegenerateRecursion,
                 "vanishing factor with nonzero convolution at alpha=" + dimvec_str(alpha));
        }
        table.mult[alpha] = abar;
        table.cbar[alpha] = abar + tail;
    }
    // theorem-backed sanity: multiplicities are nonnegative integers, and a
    // positive one at a non-simple root forces (alpha,alpha) < 2 ht alpha
    for (const auto& [alpha, value] : table.mult) {
        if (value.get_den() != 1)
            fail(ErrorKind::NonIntegral,
                 "multiplicity " + value.get_str() + " at alpha=" + dimvec_str(alpha));
        if (value < 0)
            fail(ErrorKind::ConsistencyFailure,
                 "negative multiplicity " + value.get_str() + " at alpha=" + dimvec_str(alpha));
        if (value > 0 && height(alpha) > 1 &&
            quiver.bilinear(alpha, alpha) >= 2 * height(alpha))
            fail(ErrorKind::ConsistencyFailure,
                 "positive multiplicity with (alpha,alpha) >= 2 ht at alpha=" +
                     dimvec_str(alpha));
    }
    return table;
}

DenominatorCheck denominator_check(const Quiver& quiver, const MultiplicityTable& table) {
    QSeries abar(table.bound);
    QSeries cbar(table.bound);
    for (const auto& [alpha, value] : table.mult) abar.set(alpha, value);
    for (const auto& [alpha, value] : table.cbar) cbar.set(alpha, value);

    QSeries rbar = cap_exp(abar.scaled_rational(-1));
    QSeries lhs = delta_op(rbar, quiver) - d_rho(rbar).scaled_rational(2);
    if (auto diff = first_difference(lhs, QSeries(table.bound)))
        return {false, diff, "(laplacian - 2 d_rho) Exp(-abar) = 0"};

    QSeries lhs2 = delta_op(cbar, quiver) - d_rho(cbar).scaled_rational(2);
    if (auto diff = first_difference(lhs2, nabla_pair(cbar, cbar, quiver)))
        return {false, diff, "(laplacian - 2 d_rho) cbar = (nabla cbar, nabla cbar)"};

    return {true, std::nullopt, ""};
}

HuaComparison compare_with_hua(Engine& engine, const MultiplicityTable& table) {
    if (engine.bound() != table.bound)
        fail(ErrorKind::BoundMismatch, "table bound does not match engine bound");
    const QqSeries& a = engine.a();
    HuaComparison report;
    for (const DimVector& alpha : dim_vectors_up_to(table.bound)) {
        if (is_zero(alpha)) continue;
        HuaComparisonRow row;
        row.alpha = alpha;
        row.a_at_zero = a.at(alpha).at_zero();
        row.mult = table.mult.at(alpha);
        row.equal = row.a_at_zero == row.mult;
        row.indivisible = vec_gcd(alpha) == 1;
        if (!row.equal && row.indivisible)
            fail(ErrorKind::ConsistencyFailure,
                 "constant term " + row.a_at_zero.get_str() + " differs from multiplicity " +
                     row.mult.get_str() + " at indivisible alpha=" + dimvec_str(alpha));
        report.all_equal = report.all_equal && row.equal;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace kac
