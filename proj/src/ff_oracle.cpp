#include "kac/ff_oracle.hpp"

#include <map>
#include <numeric>
#include <string>

#include "kac/errors.hpp"
#include "kac/parallel.hpp"
#include "kac/rational.hpp"

namespace kac {

FiniteField::FiniteField(int q) : q_(q) {
    if (q != 2 && q != 3 && q != 5)
        fail(ErrorKind::BadConfig, "field size " + std::to_string(q) + " not supported (2, 3, 5)");
    add_.resize((size_t)(q * q));
    mul_.resize((size_t)(q * q));
    neg_.resize((size_t)q);
    inv_.assign((size_t)q, -1);
    for (int a = 0; a < q; ++a) {
        neg_[(size_t)a] = (q - a) % q;
        for (int b = 0; b < q; ++b) {
            add_[(size_t)(a * q + b)] = (a + b) % q;
            mul_[(size_t)(a * q + b)] = (a * b) % q;
            if ((a * b) % q == 1) inv_[(size_t)a] = b;
        }
    }
    // exhaustive axiom verification; failure would mean q is not prime
    for (int a = 0; a < q; ++a) {
        if (add(a, 0) != a || mul(a, 1) != a || add(a, neg(a)) != 0)
            fail(ErrorKind::ConsistencyFailure, "field identity axiom failed");
        if (a != 0 && (inv_[(size_t)a] < 0 || mul(a, inv(a)) != 1))
            fail(ErrorKind::ConsistencyFailure, "missing multiplicative inverse");
        for (int b = 0; b < q; ++b) {
            if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a))
                fail(ErrorKind::ConsistencyFailure, "field commutativity axiom failed");
            if (a != 0 && b != 0 && mul(a, b) == 0)
                fail(ErrorKind::ConsistencyFailure, "zero divisor in field");
            for (int c = 0; c < q; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c)) ||
                    mul(mul(a, b), c) != mul(a, mul(b, c)) ||
                    mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                    fail(ErrorKind::ConsistencyFailure, "field associativity/distributivity failed");
            }
        }
    }
}

int FiniteField::inv(int a) const {
    if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of 0 in a finite field");
    return inv_[(size_t)a];
}

std::vector<Arrow> lex_orientation(const Quiver& quiver) {
    std::vector<Arrow> arrows;
    for (int i = 0; i < quiver.vertex_count(); ++i)
        for (int j = i + 1; j < quiver.vertex_count(); ++j)
            for (long long k = 0; k < quiver.edge_multiplicity(i, j); ++k)
                arrows.push_back({i, j});
    return arrows;
}

std::vector<Arrow> reversed_orientation(const Quiver& quiver) {
    std::vector<Arrow> arrows = lex_orientation(quiver);
    for (Arrow& a : arrows) std::swap(a.from, a.to);
    return arrows;
}

std::vector<std::vector<Arrow>> all_orientations(const Quiver& quiver) {
    std::vector<Arrow> base = lex_orientation(quiver);
    if (base.size() > 12) fail(ErrorKind::BadConfig, "too many edges for an orientation sweep");
    std::vector<std::vector<Arrow>> out;
    for (size_t mask = 0; mask < (size_t(1) << base.size()); ++mask) {
        std::vector<Arrow> arrows = base;
        for (size_t e = 0; e < arrows.size(); ++e)
            if (mask >> e & 1) std::swap(arrows[e].from, arrows[e].to);
        out.push_back(std::move(arrows));
    }
    return out;
}

mpz_class gl_order(long long n, int q) {
    mpz_class order = 1;
    mpz_class qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), (unsigned long)q, (unsigned long)n);
    mpz_class qk = 1;
    for (long long k = 0; k < n; ++k) {
        order *= qn - qk;
        qk *= q;
    }
    return order;
}

mpz_class group_order(const DimVector& alpha, int q) {
    mpz_class order = 1;
    for (long long n : alpha) order *= gl_order(n, q);
    return order;
}

namespace {

// row-major n x m matrix over F_q with entries 0..q-1
struct FMatrix {
    int rows = 0, cols = 0;
    std::vector<int> e;
    FMatrix() = default;
    FMatrix(int r, int c) : rows(r), cols(c), e((size_t)(r * c), 0) {}
    int at(int r, int c) const { return e[(size_t)(r * cols + c)]; }
    int& at(int r, int c) { return e[(size_t)(r * cols + c)]; }
};

int matrix_rank(FMatrix m, const FiniteField& F) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        int scale = F.inv(m.at(rank, col));
        for (int c = col; c < m.cols; ++c) m.at(rank, c) = F.mul(m.at(rank, c), scale);
        for (int r = rank + 1; r < m.rows; ++r) {
            int factor = m.at(r, col);
            if (factor == 0) continue;
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) = F.sub(m.at(r, c), F.mul(factor, m.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

std::vector<FMatrix> all_invertible(long long n, const FiniteField& F, long long budget) {
    if (n == 0) return {FMatrix(0, 0)}; // GL_0 is the trivial group
    long long cells = n * n;
    long long total = 1;
    for (long long i = 0; i < cells; ++i) {
        if (total > budget / F.q())
            fail(ErrorKind::BudgetExceeded,
                 "matrix enumeration needs " + std::to_string(F.q()) + "^" +
                     std::to_string(cells) + " candidates");
        total *= F.q();
    }
    std::vector<FMatrix> out;
    FMatrix m((int)n, (int)n);
    for (long long it = 0; it < total; ++it) {
        if (matrix_rank(m, F) == (int)n) out.push_back(m);
        for (size_t pos = m.e.size(); pos-- > 0;) { // odometer
            if (++m.e[pos] < F.q()) break;
            m.e[pos] = 0;
        }
    }
    return out;
}

// nullity of M -> g_to M - M g_from on (dim g_to) x (dim g_from) matrices
int intertwiner_nullity(const FMatrix& g_from, const FMatrix& g_to, const FiniteField& F) {
    int ni = g_from.rows, nj = g_to.rows;
    int dim = ni * nj;
    if (dim == 0) return 0;
    FMatrix sys(dim, dim);
    for (int r = 0; r < nj; ++r)
        for (int c = 0; c < ni; ++c) {
            int row = r * ni + c;
            for (int u = 0; u < nj; ++u)
                for (int v = 0; v < ni; ++v) {
                    int val = 0;
                    if (v == c) val = g_to.at(r, u);
                    if (u == r) val = F.sub(val, g_from.at(v, c));
                    sys.at(row, u * ni + v) = val;
                }
        }
    return dim - matrix_rank(std::move(sys), F);
}

} // namespace

mpz_class burnside_count(const Quiver& quiver, const std::vector<Arrow>& arrows,
                         const DimVector& alpha, const FiniteField& field,
                         long long budget) {
    if ((int)alpha.size() != quiver.vertex_count())
        fail(ErrorKind::BoundMismatch, "dimension vector rank does not match quiver");
    for (long long n : alpha)
        if (n < 0) fail(ErrorKind::BoundMismatch, "negative dimension");
    for (const Arrow& a : arrows)
        if (a.from < 0 || a.to < 0 || a.from >= quiver.vertex_count() ||
            a.to >= quiver.vertex_count() || a.from == a.to)
            fail(ErrorKind::BadIndex, "arrow endpoints do not fit the quiver");

    mpz_class size = group_order(alpha, field.q());
    if (size > mpz_class(static_cast<long>(budget)) || !size.fits_ulong_p())
        fail(ErrorKind::BudgetExceeded, "group of size " + size.get_str() +
                                            " exceeds budget " + std::to_string(budget));

    // one GL list per distinct vertex dimension
    std::map<long long, std::vector<FMatrix>> gl;
    for (long long n : alpha)
        if (!gl.count(n)) gl[n] = all_invertible(n, field, budget);

    // arrows sharing endpoints share their nullity; group them up front
    std::map<std::pair<int, int>, long long> pair_count;
    for (const Arrow& a : arrows) ++pair_count[{a.from, a.to}];
    std::vector<std::pair<std::pair<int, int>, long long>> pairs(pair_count.begin(),
                                                                 pair_count.end());

    size_t vertices = alpha.size();
    std::vector<const std::vector<FMatrix>*> lists(vertices);
    for (size_t v = 0; v < vertices; ++v) lists[v] = &gl[alpha[v]];
    unsigned long elements = mpz_get_ui(size.get_mpz_t());

    size_t chunks = std::min<size_t>((size_t)worker_count(), (size_t)elements);
    if (chunks == 0) chunks = 1;
    std::vector<mpz_class> partial(chunks, mpz_class(0));
    parallel_for(chunks, [&](size_t chunk) {
        unsigned long lo = elements * chunk / chunks;
        unsigned long hi = elements * (chunk + 1) / chunks;
        if (lo >= hi) return;
        // decode lo into per-vertex indices (last vertex fastest), then step
        std::vector<size_t> idx(vertices, 0);
        unsigned long rem = lo;
        for (size_t v = vertices; v-- > 0;) {
            size_t n = lists[v]->size();
            idx[v] = rem % n;
            rem /= n;
        }
        mpz_class sum = 0;
        mpz_class fixed;
        for (unsigned long it = lo; it < hi; ++it) {
            // |Fix(g)| = q^(total nullity over arrows)
            long long exponent = 0;
            for (const auto& [endpoints, count] : pairs) {
                auto [from, to] = endpoints;
                exponent += count * intertwiner_nullity((*lists[(size_t)from])[idx[(size_t)from]],
                                                        (*lists[(size_t)to])[idx[(size_t)to]],
                                                        field);
            }
            mpz_ui_pow_ui(fixed.get_mpz_t(), (unsigned long)field.q(), (unsigned long)exponent);
            sum += fixed;
            for (size_t v = vertices; v-- > 0;) { // odometer step
                if (++idx[v] < lists[v]->size()) break;
                idx[v] = 0;
            }
        }
        partial[chunk] = std::move(sum);
    });

    mpz_class total = 0;
    for (const mpz_class& p : partial) total += p;
    mpz_class classes, remainder;
    mpz_fdiv_qr(classes.get_mpz_t(), remainder.get_mpz_t(), total.get_mpz_t(), size.get_mpz_t());
    if (remainder != 0)
        fail(ErrorKind::ConsistencyFailure,
             "Burnside sum " + total.get_str() + " not divisible by group order " + size.get_str());
    return classes;
}

std::vector<OracleCheck> verify_m(Engine& engine, const DimVector& alpha,
                                  const std::vector<int>& primes, long long budget) {
    if (!leq(alpha, engine.bound()))
        fail(ErrorKind::BoundMismatch, "dimension vector outside the engine bound");
    const RationalFunction& m_alpha = engine.m().at(alpha);
    std::vector<Arrow> ahead = lex_orientation(engine.quiver());
    std::vector<Arrow> behind = reversed_orientation(engine.quiver());
    std::vector<OracleCheck> out;
    for (int q : primes) {
        FiniteField field(q);
        OracleCheck check;
        check.alpha = alpha;
        check.q = q;
        check.count = burnside_count(engine.quiver(), ahead, alpha, field, budget);
        check.count_reversed = burnside_count(engine.quiver(), behind, alpha, field, budget);
        check.engine_value = m_alpha.num().eval(rat(q)) / m_alpha.den().eval(rat(q));
        check.match = check.engine_value == check.count && check.count == check.count_reversed;
        out.push_back(std::move(check));
    }
    return out;
}

} // namespace kac
