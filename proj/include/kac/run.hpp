#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "kac/quiver.hpp"

namespace kac {

enum class Command { Criterion, Series, Mult, Verify, Oracle };
enum class SeriesKind { R, M, A, I, R0 };
enum class Format { Json, Csv, Text };

struct RunConfig {
    std::string quiver_path;
    DimVector bound;
    Command command = Command::Criterion;
    SeriesKind what = SeriesKind::R; // series command only
    Format format = Format::Text;
    std::vector<int> primes = {2, 3}; // oracle command only
    long long budget = 10'000'000;    // oracle command only
};

// Executes one command and writes the report to `out`. Output is
// byte-deterministic for a fixed config: graded-lex ordering everywhere,
// canonical rational rendering, and alphabetically ordered JSON keys (so an
// emitted JSON report re-serializes to itself).
//
// Exit status: 0 when every check passes, 1 when a check fails or an
// internal invariant is violated (reported, never absorbed), 2 on input
// errors: unreadable or invalid quiver documents, bound mismatches, bad
// configuration, and exceeded oracle budgets.
int run(const RunConfig& config, std::ostream& out);

// helpers shared with the CLI
SeriesKind parse_series_kind(const std::string& name);  // BadConfig on junk
Format parse_format(const std::string& name);           // BadConfig on junk
DimVector parse_bound(const std::string& spec);         // "2,2,1" -> {2,2,1}

} // namespace kac
