#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kac/engine.hpp"
#include "kac/quiver.hpp"

namespace kac {

// Root multiplicities of the Kac-Moody algebra attached to the quiver's
// Cartan matrix, for all 0 < alpha <= bound, together with the auxiliary
// convolution series cbar_alpha = sum_{n>=1, n|alpha} mult(alpha/n)/n.
struct MultiplicityTable {
    DimVector bound;
    std::map<DimVector, mpq_class> mult; // exact values; nonneg integers once verified
    std::map<DimVector, mpq_class> cbar;

    // "alpha TAB mult" lines in graded-lex order
    std::string dump() const;
};

// Height-inductive recursion
//   (alpha, alpha - 2 rho) abar_alpha
//     = sum_{beta+gamma=alpha} (beta,gamma) cbar_beta cbar_gamma
//       - (alpha, alpha - 2 rho) sum_{n>1} (1/n) abar_{alpha/n}
// with (rho, alpha) = ht alpha and abar = 1 at simple roots. When the factor
// (alpha,alpha) - 2 ht alpha vanishes the convolution side must vanish too
// (then the multiplicity is 0); a nonzero convolution there is
// DegenerateRecursion. Integrality and nonnegativity of every multiplicity
// are verified after the run.
MultiplicityTable peterson_multiplicities(const Quiver& quiver, const DimVector& bound);

struct DenominatorCheck {
    bool ok = true;
    std::optional<DimVector> first_bad; // first offending exponent, graded-lex
    std::string identity;               // which identity failed
};

// Independent verification of the table over plain rationals:
//   (laplacian - 2 d_rho) Exp(-abar) = 0
//   (laplacian - 2 d_rho) cbar = (nabla cbar, nabla cbar)
DenominatorCheck denominator_check(const Quiver& quiver, const MultiplicityTable& table);

struct HuaComparisonRow {
    DimVector alpha;
    mpq_class a_at_zero;
    mpq_class mult;
    bool equal = false;
    bool indivisible = false;
};

struct HuaComparison {
    std::vector<HuaComparisonRow> rows;
    bool all_equal = true;
};

// Compares a_alpha(0) from the counting pipeline against the recursion's
// multiplicities. A mismatch at indivisible alpha is a proven impossibility,
// so it throws ConsistencyFailure; divisible mismatches are only recorded.
HuaComparison compare_with_hua(Engine& engine, const MultiplicityTable& table);

} // namespace kac
