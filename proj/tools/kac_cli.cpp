// Command-line driver: parses flags into a RunConfig and delegates to run().
// Exit status: 0 all checks pass, 1 failed check, 2 input/config error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kac/errors.hpp"
#include "kac/parallel.hpp"
#include "kac/run.hpp"

namespace {

// Mirrors run()'s error report shape for errors raised before run() starts
// (all of which are configuration problems, hence exit status 2).
int emit_config_error(const kac::Error& e, kac::Format format) {
    if (format == kac::Format::Json)
        std::cout << nlohmann::json{{"error",
                                     {{"kind", kac::error_kind_name(e.kind())},
                                      {"message", e.what()}}}}
                         .dump(2)
                  << '\n';
    else
        std::cout << "error: " << e.what() << '\n';
    return 2;
}

std::vector<int> parse_field_sizes(const std::string& spec) {
    std::vector<int> sizes;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            sizes.push_back(v);
        } catch (const std::exception&) {
            kac::fail(kac::ErrorKind::BadConfig, "bad field size: \"" + item + "\"");
        }
    }
    if (sizes.empty()) kac::fail(kac::ErrorKind::BadConfig, "empty field-size list");
    return sizes;
}

void apply_thread_cap_from_env() {
    const char* env = std::getenv("KAC_THREADS");
    if (env == nullptr || *env == '\0') return;
    std::string text(env);
    long v = 0;
    try {
        size_t used = 0;
        v = std::stol(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        kac::fail(kac::ErrorKind::BadConfig, "KAC_THREADS is not an integer: \"" + text + "\"");
    }
    if (v < 1 || v > 4096)
        kac::fail(kac::ErrorKind::BadConfig, "KAC_THREADS out of range: " + text);
    kac::set_worker_cap(static_cast<int>(v));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation of quiver representation-counting series and "
                 "root multiplicities"};
    app.require_subcommand(1);

    std::string quiver_path;
    std::string bound_spec;
    std::string format_name = "text";
    std::string what_name;
    std::string q_spec = "2,3";
    long long budget = 10'000'000;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--quiver", quiver_path, "path to a quiver document (JSON)")
            ->required();
        sub->add_option("--bound", bound_spec,
                        "componentwise dimension-vector bound, e.g. 2,2,1")
            ->required();
        sub->add_option("--format", format_name, "output format: json, csv, or text");
    };

    CLI::App* criterion = app.add_subcommand(
        "criterion", "for every alpha up to the bound, check that the constant term "
                     "of r_alpha vanishes or the quadratic form equals the height");
    add_common(criterion);

    CLI::App* series = app.add_subcommand(
        "series", "print one generating series truncated at the bound");
    add_common(series);
    series->add_option("--what", what_name, "series selector: r, m, a, i, or r0")
        ->required();

    CLI::App* mult = app.add_subcommand(
        "mult", "print root multiplicities up to the bound");
    add_common(mult);

    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check root multiplicities against the series pipeline and "
                  "the denominator identities");
    add_common(verify);

    CLI::App* oracle = app.add_subcommand(
        "oracle", "recount isomorphism classes over small finite fields and compare "
                  "with the m series");
    add_common(oracle);
    oracle->add_option("--q", q_spec, "comma-separated field sizes (primes 2, 3, 5)");
    oracle->add_option("--budget", budget,
                       "largest allowed symmetry-group order for brute-force counting");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // bad usage is an input error
    }

    kac::Format format = kac::Format::Text;
    try {
        format = kac::parse_format(format_name);
    } catch (const kac::Error& e) {
        return emit_config_error(e, kac::Format::Text);
    }

    kac::RunConfig config;
    try {
        apply_thread_cap_from_env();
        config.quiver_path = quiver_path;
        config.bound = kac::parse_bound(bound_spec);
        config.format = format;
        if (criterion->parsed()) config.command = kac::Command::Criterion;
        if (series->parsed()) {
            config.command = kac::Command::Series;
            config.what = kac::parse_series_kind(what_name);
        }
        if (mult->parsed()) config.command = kac::Command::Mult;
        if (verify->parsed()) config.command = kac::Command::Verify;
        if (oracle->parsed()) {
            config.command = kac::Command::Oracle;
            config.primes = parse_field_sizes(q_spec);
            config.budget = budget;
        }
    } catch (const kac::Error& e) {
        return emit_config_error(e, format);
    }

    try {
        return kac::run(config, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
