// Acceptance gate: eight checks, one PASS/FAIL line each, exit 0 only if all
// pass. Every value compared here is exact (GMP rationals); no tolerances.
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kac/engine.hpp"
#include "kac/errors.hpp"
#include "kac/ff_oracle.hpp"
#include "kac/peterson.hpp"
#include "kac/rational.hpp"
#include "kac/series.hpp"

using namespace kac;

namespace {

struct Failure {
    std::string detail;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

Quiver a2() { return Quiver::from_json_text(R"({"vertices": 2, "edges": [[1, 2, 1]]})"); }
Quiver a3() {
    return Quiver::from_json_text(R"({"vertices": 3, "edges": [[1, 2, 1], [2, 3, 1]]})");
}
Quiver kronecker() { return Quiver::from_json_text(R"({"vertices": 2, "edges": [[1, 2, 2]]})"); }
Quiver kronecker3() { return Quiver::from_json_text(R"({"vertices": 2, "edges": [[1, 2, 3]]})"); }
Quiver example4() {
    return Quiver::from_json_text(
        R"({"vertices": 4, "edges": [[1, 2, 1], [1, 4, 2], [2, 3, 2], [3, 4, 1]]})");
}

struct Bench {
    std::string name;
    Quiver quiver;
    DimVector bound; // every benchmark bound has ht <= 6
};

std::vector<Bench> bench_set() {
    return {{"single arrow", a2(), {3, 3}},
            {"path", a3(), {2, 2, 2}},
            {"double arrow", kronecker(), {3, 3}},
            {"triple arrow", kronecker3(), {3, 3}},
            {"four-vertex", example4(), {2, 2, 1, 1}}};
}

// ---- 1: reference expansion of r(0) on the four-vertex quiver ------------

void criterion1() {
    const std::map<DimVector, int> listed = {
        {{0, 0, 0, 0}, 1},  {{0, 0, 0, 1}, -1}, {{0, 0, 1, 0}, -1}, {{0, 1, 0, 0}, -1},
        {{1, 0, 0, 0}, -1}, {{0, 1, 0, 1}, 1},  {{1, 0, 1, 0}, 1},  {{0, 0, 1, 2}, 1},
        {{0, 0, 2, 1}, 1},  {{1, 2, 0, 0}, 1},  {{2, 1, 0, 0}, 1},  {{0, 0, 2, 2}, -1},
        {{2, 2, 0, 0}, -1}, {{0, 1, 3, 0}, 1},  {{0, 3, 1, 0}, 1},  {{1, 0, 0, 3}, 1},
        {{3, 0, 0, 1}, 1},  {{0, 3, 1, 2}, -1}, {{1, 2, 0, 3}, -1}, {{2, 1, 3, 0}, -1},
        {{3, 0, 2, 1}, -1}};
    const DimVector bound = {3, 3, 3, 2};
    Engine eng(example4(), bound);
    const QSeries& r0 = eng.r_at_zero();
    size_t reproduced = 0;
    for (const DimVector& alpha : dim_vectors_up_to(bound)) {
        auto it = listed.find(alpha);
        mpq_class expect = it == listed.end() ? 0 : it->second;
        require(r0.at(alpha) == expect,
                "r(0) at alpha=" + dimvec_str(alpha) + " is " + r0.at(alpha).get_str() +
                    ", expected " + expect.get_str());
        if (it != listed.end()) ++reproduced;
    }
    // the two reference terms with a 3 in the last coordinate sit outside
    require(reproduced == 19, "expected 19 of the 21 reference terms inside the bound, saw " +
                                  std::to_string(reproduced));
    for (const DimVector& sub :
         {DimVector{1, 1, 1, 1}, DimVector{2, 2, 2, 2}, DimVector{3, 3, 3, 1}}) {
        Engine small(example4(), sub);
        for (const DimVector& alpha : dim_vectors_up_to(sub))
            require(small.r_at_zero().at(alpha) == r0.at(alpha),
                    "sub-bound " + dimvec_str(sub) + " changes r(0) at alpha=" +
                        dimvec_str(alpha));
    }
}

// ---- 2: criterion verdict on the four-vertex quiver ----------------------

void criterion2() {
    Engine eng(example4(), {2, 2, 2, 2});
    std::vector<CriterionRecord> records = eng.criterion();
    require(records.size() == 80, "expected 80 records, saw " + std::to_string(records.size()));
    for (const CriterionRecord& rec : records) {
        require(rec.passes, "criterion fails at alpha=" + dimvec_str(rec.alpha));
        if (rec.r_at_zero != 0)
            require(rec.tits == rec.ht, "nonzero r(0) with T != ht at alpha=" +
                                            dimvec_str(rec.alpha));
    }
    // spot identity beyond that box, and the full verdict at the larger bound
    require(example4().tits({0, 3, 1, 2}) == 6 && height({0, 3, 1, 2}) == 6,
            "T((0,3,1,2)) = 6 = ht spot identity failed");
    Engine big(example4(), {3, 3, 3, 2});
    for (const CriterionRecord& rec : big.criterion())
        require(rec.passes, "criterion fails at alpha=" + dimvec_str(rec.alpha));
}

// ---- 3: m = Exp(a) = Pow(r, q-1) -----------------------------------------

void criterion3() {
    for (const Bench& b : bench_set()) {
        Engine eng(b.quiver, b.bound);
        const QqSeries& mm = eng.m();
        const QqSeries& aa = eng.a();
        require(!first_difference(mm, cap_exp(aa)).has_value(), b.name + ": m differs from Exp(a)");
        RationalFunction q_minus_1 = RationalFunction::q() - RationalFunction(1);
        require(!first_difference(mm, pow_struct(eng.r(), q_minus_1)).has_value(),
                b.name + ": m differs from Pow(r, q-1)");
    }
}

// ---- 4: polynomiality and known root values ------------------------------

bool integer_coefficient_polynomial(const RationalFunction& c) {
    std::vector<mpq_class> coeffs;
    try {
        coeffs = c.as_polynomial();
    } catch (const Error&) {
        return false;
    }
    for (const mpq_class& v : coeffs)
        if (v.get_den() != 1) return false;
    return true;
}

// integer values at all integers: every iterated difference at 0 is integral
bool integer_valued_polynomial(const RationalFunction& c) {
    std::vector<mpq_class> coeffs;
    try {
        coeffs = c.as_polynomial();
    } catch (const Error&) {
        return false;
    }
    std::vector<mpq_class> vals;
    for (size_t t = 0; t < coeffs.size(); ++t) {
        mpq_class v = 0;
        for (size_t j = coeffs.size(); j-- > 0;) v = v * rat((long long)t) + coeffs[j];
        vals.push_back(v);
    }
    while (!vals.empty()) {
        if (vals.front().get_den() != 1) return false;
        for (size_t j = 0; j + 1 < vals.size(); ++j) vals[j] = vals[j + 1] - vals[j];
        vals.pop_back();
    }
    return true;
}

void criterion4() {
    for (const Bench& b : bench_set()) {
        Engine eng(b.quiver, b.bound);
        for (const DimVector& alpha : dim_vectors_up_to(b.bound)) {
            require(integer_coefficient_polynomial(eng.m().at(alpha)),
                    b.name + ": m at alpha=" + dimvec_str(alpha) + " not in Z[q]");
            require(integer_coefficient_polynomial(eng.a().at(alpha)),
                    b.name + ": a at alpha=" + dimvec_str(alpha) + " not in Z[q]");
            // indecomposable counts can have rational coefficients (the
            // double arrow gives (q^2+q+2)/2 at (2,2)) but take integer
            // values at every integer
            require(integer_valued_polynomial(eng.i().at(alpha)),
                    b.name + ": i at alpha=" + dimvec_str(alpha) + " not integer-valued");
        }
    }

    // finite type: a = 1 exactly at the positive roots, 0 elsewhere
    Engine ea(a2(), {3, 3});
    std::vector<DimVector> a2_roots = {{1, 0}, {0, 1}, {1, 1}};
    for (const DimVector& alpha : dim_vectors_up_to({3, 3})) {
        if (is_zero(alpha)) continue;
        bool is_root = false;
        for (const DimVector& r : a2_roots) is_root = is_root || alpha == r;
        require(ea.a().at(alpha) == RationalFunction(is_root ? 1 : 0),
                "single arrow: a at alpha=" + dimvec_str(alpha) + " is not " +
                    (is_root ? "1" : "0"));
    }
    Engine eb(a3(), {2, 2, 2});
    std::vector<DimVector> a3_roots = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                       {1, 1, 0}, {0, 1, 1}, {1, 1, 1}};
    for (const DimVector& alpha : dim_vectors_up_to({2, 2, 2})) {
        if (is_zero(alpha)) continue;
        bool is_root = false;
        for (const DimVector& r : a3_roots) is_root = is_root || alpha == r;
        require(eb.a().at(alpha) == RationalFunction(is_root ? 1 : 0),
                "path: a at alpha=" + dimvec_str(alpha) + " is not " + (is_root ? "1" : "0"));
    }

    Engine ek(kronecker(), {1, 1});
    LaurentPoly q_plus_1 = LaurentPoly::q_power(1) + LaurentPoly(1);
    require(ek.a().at({1, 1}) == RationalFunction(q_plus_1),
            "double arrow: a at (1,1) is not q+1");
}

// ---- 5: recursion multiplicities against the counting pipeline -----------

void criterion5() {
    for (const Bench& b : bench_set()) {
        Engine eng(b.quiver, b.bound);
        MultiplicityTable table = peterson_multiplicities(b.quiver, b.bound);
        HuaComparison hua = compare_with_hua(eng, table);
        require(hua.all_equal, b.name + ": a(0) differs from a recursion multiplicity");
        DenominatorCheck check = denominator_check(b.quiver, table);
        require(check.ok, b.name + ": differential identity failed: " + check.identity);
    }
    // fault injection: one corrupted value must flip the verification
    MultiplicityTable table = peterson_multiplicities(kronecker(), {2, 2});
    MultiplicityTable corrupted = table;
    corrupted.mult[{1, 0}] = 2;
    require(!denominator_check(kronecker(), corrupted).ok,
            "corrupted table passed the differential identities");
}

// ---- 6: finite-field counting oracle -------------------------------------

void criterion6() {
    Engine ek(kronecker(), {1, 1});
    std::vector<OracleCheck> checks = verify_m(ek, {1, 1}, {2, 3});
    require(checks.size() == 2 && checks[0].count == 4 && checks[1].count == 5,
            "double-arrow counts at q=2,3 are not 4 and 5");
    for (const OracleCheck& c : checks)
        require(c.match, "double arrow: count differs from m at q=" + std::to_string(c.q));

    Engine ea(a2(), {1, 1});
    for (const OracleCheck& c : verify_m(ea, {1, 1}, {2, 3}))
        require(c.match && c.count == 2,
                "single arrow: count differs from m at q=" + std::to_string(c.q));

    // orientation sweeps: identical counts for every direction assignment
    FiniteField f2(2);
    for (const std::vector<Arrow>& arrows : all_orientations(kronecker()))
        require(burnside_count(kronecker(), arrows, {1, 1}, f2) == 4,
                "double arrow: orientation changes the count");
    for (const std::vector<Arrow>& arrows : all_orientations(a2()))
        require(burnside_count(a2(), arrows, {1, 1}, f2) == 2,
                "single arrow: orientation changes the count");
    for (const std::vector<Arrow>& arrows : all_orientations(kronecker3()))
        require(burnside_count(kronecker3(), arrows, {1, 1}, f2) == 8,
                "triple arrow: orientation changes the count");
    // divisibility of every Burnside sum is asserted inside the counter; the
    // calls above would have thrown on a remainder
}

// ---- 7: random property suite for the series ring ------------------------

class CaseGenerator {
public:
    explicit CaseGenerator(unsigned long seed) : rng_(seed) {}

    long long draw(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng_);
    }

    DimVector draw_bound() {
        for (;;) {
            DimVector bound((size_t)draw(1, 3));
            long long ht = 0;
            for (long long& b : bound) {
                b = draw(0, 3);
                ht += b;
            }
            if (ht >= 1 && ht <= 5) return bound;
        }
    }

    Quiver draw_quiver(size_t rank) {
        std::ostringstream doc;
        doc << "{\"vertices\": " << rank << ", \"edges\": [";
        bool first = true;
        for (size_t i = 1; i <= rank; ++i)
            for (size_t j = i + 1; j <= rank; ++j) {
                long long mult = draw(0, 2);
                if (mult == 0) continue;
                if (!first) doc << ", ";
                doc << "[" << i << ", " << j << ", " << mult << "]";
                first = false;
            }
        doc << "]}";
        return Quiver::from_json_text(doc.str());
    }

    RationalFunction draw_coefficient() {
        LaurentPoly num;
        long long degree = draw(0, 2);
        for (long long e = 0; e <= degree; ++e) num.add_term(e, (long)draw(-3, 3));
        LaurentPoly den;
        switch (draw(0, 3)) {
        case 0: den = LaurentPoly(1); break;
        case 1: den = LaurentPoly(2); break;
        case 2: den = LaurentPoly(1) + LaurentPoly::q_power(1); break;
        default: den = LaurentPoly(1) + LaurentPoly::q_power(2); break;
        }
        return RationalFunction(num, den);
    }

    QqSeries draw_series(const DimVector& bound) { // zero constant term
        QqSeries f(bound);
        for (const DimVector& alpha : dim_vectors_up_to(bound)) {
            if (is_zero(alpha)) continue;
            f.set(alpha, draw_coefficient());
        }
        return f;
    }

private:
    std::mt19937 rng_;
};

void criterion7() {
    CaseGenerator gen(20260817);
    const int cases = 200;
    for (int n = 0; n < cases; ++n) {
        DimVector bound = gen.draw_bound();
        Quiver quiver = gen.draw_quiver(bound.size());
        QqSeries f = gen.draw_series(bound);
        QqSeries g = gen.draw_series(bound);
        std::string tag = "case " + std::to_string(n) + " bound=" + dimvec_str(bound);

        require(big_psi_inv(big_psi(f)) == f, tag + ": psi-inverse of psi is not the identity");
        require(big_psi(big_psi_inv(f)) == f, tag + ": psi of psi-inverse is not the identity");
        require(cap_log(cap_exp(f)) == f, tag + ": Log of Exp is not the identity");
        require(cap_exp(f + g) == cap_exp(f) * cap_exp(g), tag + ": Exp is not additive");

        QqSeries F = cap_exp(f);
        require(pow_struct(F, RationalFunction(1)) == F, tag + ": Pow(F,1) != F");
        require(pow_struct(F, RationalFunction(2)) == F * F, tag + ": Pow(F,2) != F*F");

        LaurentPoly p;
        for (long long e = 0; e <= gen.draw(0, 2); ++e) p.add_term(e, (long)gen.draw(-2, 3));
        // the product form solves the divisor-sum relation for the exponents
        require(pow_generalized(F, p) == pow_struct(F, RationalFunction(p)),
                tag + ": product and structural powers disagree");

        long long dm = gen.draw(1, 3), dn = gen.draw(1, 3);
        require(adams(adams(f, dn), dm) == adams(f, dm * dn),
                tag + ": adams operations do not compose");

        require(delta_op(series_exp(f), quiver) ==
                    series_exp(f) * (delta_op(f, quiver) + nabla_pair(f, f, quiver)),
                tag + ": second-order rule for the laplacian on exp fails");
    }
}

// ---- main ------------------------------------------------------------------

struct Step {
    int number;
    std::string pass_text;
    void (*check)();
};

} // namespace

int main() {
    std::vector<Step> steps = {
        {1, "r(0) on the four-vertex quiver reproduces all 19 reference terms below "
            "(3,3,3,2) exactly, with no extras, consistently across sub-bounds",
         criterion1},
        {2, "criterion verdict PASS up to (2,2,2,2) and (3,3,3,2); every nonzero r(0) "
            "term has T(alpha) = ht(alpha), including T((0,3,1,2)) = 6",
         criterion2},
        {3, "m = Exp(a) = Pow(r, q-1) exactly on all five benchmark quivers", criterion3},
        {4, "m and a have integer coefficients, i is integer-valued, and a matches the "
            "root data on finite types and the double arrow",
         criterion4},
        {5, "recursion multiplicities equal a(0) everywhere, differential identities "
            "hold, and injected corruption is detected",
         criterion5},
        {6, "finite-field counts equal m at q = 2, 3 under every orientation, with "
            "exact Burnside divisibility",
         criterion6},
        {7, "200 random series cases satisfy all eight ring identities exactly", criterion7},
    };

    bool all = true;
    for (const Step& step : steps) {
        std::string verdict = "PASS";
        std::string detail;
        try {
            step.check();
        } catch (const Failure& f) {
            verdict = "FAIL";
            detail = ": " + f.detail;
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = std::string(": unexpected error: ") + e.what();
        }
        all = all && verdict == "PASS";
        std::cout << "criterion " << step.number << ": " << verdict << " — " << step.pass_text
                  << detail << '\n';
    }

    // scope: the bounded checks above are the whole supported claim; nothing
    // beyond these bounds is asserted, so this line passes exactly when they do
    std::cout << "criterion 8: " << (all ? "PASS" : "FAIL")
              << " — supported scope is the bounded verifications and property suites of "
                 "criteria 1-7"
              << (all ? "" : ", which did not all pass") << '\n';
    return all ? 0 : 1;
}
