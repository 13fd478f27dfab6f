#include "kac/run.hpp"

#include <sstream>

#include "kac/engine.hpp"
#include "kac/errors.hpp"
#include "kac/ff_oracle.hpp"
#include "kac/peterson.hpp"
#include "kac/series.hpp"
#include "json.hpp"

namespace kac {

namespace {

using nlohmann::json;

bool is_input_error(ErrorKind k) {
    switch (k) {
    case ErrorKind::BadDocument:
    case ErrorKind::LoopEdge:
    case ErrorKind::BadIndex:
    case ErrorKind::NegativeMultiplicity:
    case ErrorKind::BoundMismatch:
    case ErrorKind::BadConfig:
    case ErrorKind::BudgetExceeded:
        return true;
    default:
        return false;
    }
}

json alpha_json(const DimVector& alpha) { return json(alpha); }

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string series_kind_name(SeriesKind k) {
    switch (k) {
    case SeriesKind::R: return "r";
    case SeriesKind::M: return "m";
    case SeriesKind::A: return "a";
    case SeriesKind::I: return "i";
    case SeriesKind::R0: return "r0";
    }
    return "?";
}

void emit(const json& doc, Format format, std::ostream& out) {
    if (format == Format::Json) out << doc.dump(2) << '\n';
}

// ---- criterion ----------------------------------------------------------

int run_criterion(Engine& engine, Format format, std::ostream& out) {
    std::vector<CriterionRecord> records = engine.criterion();
    bool all = true;
    for (const CriterionRecord& rec : records) all = all && rec.passes;

    if (format == Format::Json) {
        json rows = json::array();
        for (const CriterionRecord& rec : records)
            rows.push_back({{"alpha", alpha_json(rec.alpha)},
                            {"r0", rec.r_at_zero.get_str()},
                            {"tits", rec.tits},
                            {"ht", rec.ht},
                            {"pass", rec.passes}});
        emit(json{{"command", "criterion"},
                  {"bound", alpha_json(engine.bound())},
                  {"records", rows},
                  {"verdict", verdict(all)}},
             format, out);
    } else if (format == Format::Csv) {
        out << "alpha;r0_num;r0_den;tits;ht;pass\n";
        for (const CriterionRecord& rec : records)
            out << dimvec_str(rec.alpha) << ';' << rec.r_at_zero.get_num().get_str() << ';'
                << rec.r_at_zero.get_den().get_str() << ';' << rec.tits << ';' << rec.ht << ';'
                << (rec.passes ? "true" : "false") << '\n';
    } else {
        for (const CriterionRecord& rec : records)
            out << "alpha=" << dimvec_str(rec.alpha) << " r0=" << rec.r_at_zero.get_str()
                << " tits=" << rec.tits << " ht=" << rec.ht << ' '
                << (rec.passes ? "pass" : "FAIL") << '\n';
        out << "verdict: " << verdict(all) << '\n';
    }
    return all ? 0 : 1;
}

// ---- series -------------------------------------------------------------

int run_series(Engine& engine, SeriesKind what, Format format, std::ostream& out) {
    std::vector<std::pair<DimVector, std::string>> lines;
    if (what == SeriesKind::R0) {
        const QSeries& s = engine.r_at_zero();
        for (const DimVector& alpha : dim_vectors_up_to(engine.bound()))
            lines.emplace_back(alpha, s.at(alpha).get_str());
    } else {
        const QqSeries& s = what == SeriesKind::R   ? engine.r()
                            : what == SeriesKind::M ? engine.m()
                            : what == SeriesKind::A ? engine.a()
                                                    : engine.i();
        for (const DimVector& alpha : dim_vectors_up_to(engine.bound()))
            lines.emplace_back(alpha, s.at(alpha).str());
    }

    if (format == Format::Json) {
        json rows = json::array();
        for (const auto& [alpha, value] : lines)
            rows.push_back({{"alpha", alpha_json(alpha)}, {"value", value}});
        emit(json{{"command", "series"},
                  {"what", series_kind_name(what)},
                  {"bound", alpha_json(engine.bound())},
                  {"records", rows}},
             format, out);
    } else if (format == Format::Csv) {
        out << "alpha;value\n";
        for (const auto& [alpha, value] : lines) out << dimvec_str(alpha) << ';' << value << '\n';
    } else {
        for (const auto& [alpha, value] : lines) out << dimvec_str(alpha) << '\t' << value << '\n';
    }
    return 0;
}

// ---- mult ---------------------------------------------------------------

int run_mult(const Quiver& quiver, const DimVector& bound, Format format, std::ostream& out) {
    MultiplicityTable table = peterson_multiplicities(quiver, bound);
    if (format == Format::Json) {
        json rows = json::array();
        for (const DimVector& alpha : dim_vectors_up_to(bound)) {
            if (is_zero(alpha)) continue;
            rows.push_back({{"alpha", alpha_json(alpha)}, {"mult", table.mult.at(alpha).get_str()}});
        }
        emit(json{{"command", "mult"},
                  {"bound", alpha_json(bound)},
                  {"records", rows}},
             format, out);
    } else if (format == Format::Csv) {
        out << "alpha;mult\n";
        for (const DimVector& alpha : dim_vectors_up_to(bound)) {
            if (is_zero(alpha)) continue;
            out << dimvec_str(alpha) << ';' << table.mult.at(alpha).get_str() << '\n';
        }
    } else {
        out << table.dump();
    }
    return 0;
}

// ---- verify -------------------------------------------------------------

int run_verify(Engine& engine, Format format, std::ostream& out) {
    MultiplicityTable table = peterson_multiplicities(engine.quiver(), engine.bound());
    HuaComparison hua = compare_with_hua(engine, table);
    DenominatorCheck denom = denominator_check(engine.quiver(), table);
    // a() returned inside compare_with_hua, so m = Exp(a) = Pow(r, q-1) held
    std::optional<DimVector> negative_a = engine.first_negative_a();
    bool ok = hua.all_equal && denom.ok;

    if (format == Format::Json) {
        json rows = json::array();
        for (const HuaComparisonRow& row : hua.rows)
            rows.push_back({{"alpha", alpha_json(row.alpha)},
                            {"a0", row.a_at_zero.get_str()},
                            {"mult", row.mult.get_str()},
                            {"equal", row.equal},
                            {"indivisible", row.indivisible}});
        json denom_report{{"ok", denom.ok}};
        if (!denom.ok) {
            denom_report["alpha"] = alpha_json(*denom.first_bad);
            denom_report["identity"] = denom.identity;
        }
        json observation{{"a_nonnegative", !negative_a.has_value()}};
        if (negative_a) observation["first_negative_alpha"] = alpha_json(*negative_a);
        emit(json{{"command", "verify"},
                  {"bound", alpha_json(engine.bound())},
                  {"records", rows},
                  {"denominator_check", denom_report},
                  {"triple_agreement", "PASS"},
                  {"observation", observation},
                  {"verdict", verdict(ok)}},
             format, out);
    } else if (format == Format::Csv) {
        out << "alpha;a0;mult;equal;indivisible\n";
        for (const HuaComparisonRow& row : hua.rows)
            out << dimvec_str(row.alpha) << ';' << row.a_at_zero.get_str() << ';'
                << row.mult.get_str() << ';' << (row.equal ? "true" : "false") << ';'
                << (row.indivisible ? "true" : "false") << '\n';
    } else {
        for (const HuaComparisonRow& row : hua.rows)
            out << "alpha=" << dimvec_str(row.alpha) << " a0=" << row.a_at_zero.get_str()
                << " mult=" << row.mult.get_str() << ' ' << (row.equal ? "equal" : "DIFFER")
                << '\n';
        if (denom.ok)
            out << "denominator_check: ok\n";
        else
            out << "denominator_check: FAIL at alpha=" << dimvec_str(*denom.first_bad)
                << " identity=" << denom.identity << '\n';
        out << "triple_agreement: ok\n";
        out << "a_nonnegative: " << (negative_a ? "no" : "yes") << '\n';
        out << "verdict: " << verdict(ok) << '\n';
    }
    return ok ? 0 : 1;
}

// ---- oracle -------------------------------------------------------------

int run_oracle(Engine& engine, const std::vector<int>& primes, long long budget, Format format,
               std::ostream& out) {
    std::vector<OracleCheck> checks;
    for (const DimVector& alpha : dim_vectors_up_to(engine.bound())) {
        if (is_zero(alpha)) continue;
        for (OracleCheck& c : verify_m(engine, alpha, primes, budget))
            checks.push_back(std::move(c));
    }
    bool all = true;
    for (const OracleCheck& c : checks) all = all && c.match;

    if (format == Format::Json) {
        json rows = json::array();
        for (const OracleCheck& c : checks)
            rows.push_back({{"alpha", alpha_json(c.alpha)},
                            {"q", c.q},
                            {"count", c.count.get_str()},
                            {"count_reversed", c.count_reversed.get_str()},
                            {"m_at_q", c.engine_value.get_str()},
                            {"match", c.match}});
        emit(json{{"command", "oracle"},
                  {"bound", alpha_json(engine.bound())},
                  {"budget", budget},
                  {"records", rows},
                  {"verdict", verdict(all)}},
             format, out);
    } else if (format == Format::Csv) {
        out << "alpha;q;count;count_reversed;m_at_q;match\n";
        for (const OracleCheck& c : checks)
            out << dimvec_str(c.alpha) << ';' << c.q << ';' << c.count.get_str() << ';'
                << c.count_reversed.get_str() << ';' << c.engine_value.get_str() << ';'
                << (c.match ? "true" : "false") << '\n';
    } else {
        for (const OracleCheck& c : checks)
            out << "alpha=" << dimvec_str(c.alpha) << " q=" << c.q << " count=" << c.count.get_str()
                << " reversed=" << c.count_reversed.get_str() << " m=" << c.engine_value.get_str()
                << ' ' << (c.match ? "match" : "DIFFER") << '\n';
        out << "verdict: " << verdict(all) << '\n';
    }
    return all ? 0 : 1;
}

} // namespace

int run(const RunConfig& config, std::ostream& out) {
    try {
        Quiver quiver = Quiver::load_file(config.quiver_path);
        if ((int)config.bound.size() != quiver.vertex_count())
            fail(ErrorKind::BoundMismatch,
                 "bound has " + std::to_string(config.bound.size()) + " entries for " +
                     std::to_string(quiver.vertex_count()) + " vertices");
        Engine engine(quiver, config.bound);
        switch (config.command) {
        case Command::Criterion: return run_criterion(engine, config.format, out);
        case Command::Series: return run_series(engine, config.what, config.format, out);
        case Command::Mult: return run_mult(quiver, config.bound, config.format, out);
        case Command::Verify: return run_verify(engine, config.format, out);
        case Command::Oracle:
            return run_oracle(engine, config.primes, config.budget, config.format, out);
        }
        fail(ErrorKind::BadConfig, "unknown command");
    } catch (const Error& e) {
        if (config.format == Format::Json)
            out << json{{"error", {{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}}
                       .dump(2)
                << '\n';
        else
            out << "error: " << e.what() << '\n';
        return is_input_error(e.kind()) ? 2 : 1;
    }
}

SeriesKind parse_series_kind(const std::string& name) {
    if (name == "r") return SeriesKind::R;
    if (name == "m") return SeriesKind::M;
    if (name == "a") return SeriesKind::A;
    if (name == "i") return SeriesKind::I;
    if (name == "r0") return SeriesKind::R0;
    fail(ErrorKind::BadConfig, "unknown series selector: " + name);
}

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "text") return Format::Text;
    fail(ErrorKind::BadConfig, "unknown output format: " + name);
}

DimVector parse_bound(const std::string& spec) {
    DimVector bound;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            long long v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            bound.push_back(v);
        } catch (const std::exception&) {
            fail(ErrorKind::BadConfig, "bad bound entry: \"" + item + "\"");
        }
    }
    if (bound.empty()) fail(ErrorKind::BadConfig, "empty bound");
    return bound;
}

} // namespace kac
