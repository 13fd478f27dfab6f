#pragma once

#include <vector>

#include <gmpxx.h>

#include "kac/engine.hpp"
#include "kac/quiver.hpp"

namespace kac {

// Arithmetic tables for F_q, q a prime in {2, 3, 5}. The axioms (both group
// laws, distributivity, inverses) are verified exhaustively on construction.
class FiniteField {
public:
    explicit FiniteField(int q);

    int q() const { return q_; }
    int add(int a, int b) const { return add_[(size_t)(a * q_ + b)]; }
    int sub(int a, int b) const { return add(a, neg_[(size_t)b]); }
    int mul(int a, int b) const { return mul_[(size_t)(a * q_ + b)]; }
    int neg(int a) const { return neg_[(size_t)a]; }
    int inv(int a) const; // a != 0

private:
    int q_;
    std::vector<int> add_, mul_, neg_, inv_;
};

// One arrow of an oriented quiver, endpoints 0-indexed.
struct Arrow {
    int from = 0;
    int to = 0;
};

// Every undirected edge i-j (i < j) becomes an arrow i -> j.
std::vector<Arrow> lex_orientation(const Quiver& quiver);
// ... or j -> i.
std::vector<Arrow> reversed_orientation(const Quiver& quiver);
// All 2^(edge count) per-edge direction choices; edge count capped at 12.
std::vector<std::vector<Arrow>> all_orientations(const Quiver& quiver);

// |GL_n(F_q)| = prod_{k<n} (q^n - q^k)
mpz_class gl_order(long long n, int q);
// |prod_i GL_{alpha_i}(F_q)|
mpz_class group_order(const DimVector& alpha, int q);

// Number of isomorphism classes of representations of the oriented quiver
// with dimension vector alpha over F_q, by Burnside's lemma:
//   (1 / |G|) sum_{g in G} |Fix(g)|,  G = prod_i GL_{alpha_i}(F_q),
// where |Fix(g)| = q^(sum over arrows of the intertwiner nullity), computed
// by Gaussian elimination. Throws BudgetExceeded when |G| (or a single
// GL enumeration) would exceed the budget; the Burnside sum must divide
// exactly or the run aborts.
mpz_class burnside_count(const Quiver& quiver, const std::vector<Arrow>& arrows,
                         const DimVector& alpha, const FiniteField& field,
                         long long budget = 10'000'000);

struct OracleCheck {
    DimVector alpha;
    int q = 0;
    mpz_class count;          // lex orientation
    mpz_class count_reversed; // reversed orientation
    mpq_class engine_value;   // m_alpha evaluated at q
    bool match = false;
};

// Evaluates the engine's m_alpha at each listed prime and compares with the
// Burnside count under two different orientations.
std::vector<OracleCheck> verify_m(Engine& engine, const DimVector& alpha,
                                  const std::vector<int>& primes,
                                  long long budget = 10'000'000);

} // namespace kac
