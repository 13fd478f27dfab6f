#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kac/errors.hpp"
#include "kac/run.hpp"
#include "json.hpp"

using namespace kac;
using nlohmann::json;

namespace {

std::string data_path(const std::string& rel) { return std::string(KAC_DATA_DIR) + "/" + rel; }

std::string temp_file(const std::string& name, const std::string& content) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    return p.string();
}

RunConfig base_config(const std::string& quiver_rel, DimVector bound) {
    RunConfig config;
    config.quiver_path = data_path(quiver_rel);
    config.bound = std::move(bound);
    return config;
}

std::pair<int, std::string> run_capture(const RunConfig& config) {
    std::ostringstream out;
    int code = run(config, out);
    return {code, out.str()};
}

} // namespace

TEST_CASE("flag parsing helpers") {
    CHECK(parse_bound("1,2,3") == DimVector{1, 2, 3});
    CHECK(parse_bound("0") == DimVector{0});
    CHECK(parse_bound("3,-1") == DimVector{3, -1});
    CHECK_THROWS_WITH_AS(parse_bound("1,x"), doctest::Contains("BadConfig"), Error);
    CHECK_THROWS_WITH_AS(parse_bound("1,,2"), doctest::Contains("BadConfig"), Error);
    CHECK_THROWS_WITH_AS(parse_bound(""), doctest::Contains("BadConfig"), Error);
    CHECK_THROWS_WITH_AS(parse_bound("2.5"), doctest::Contains("BadConfig"), Error);

    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK(parse_format("text") == Format::Text);
    CHECK_THROWS_WITH_AS(parse_format("xml"), doctest::Contains("BadConfig"), Error);

    CHECK(parse_series_kind("r") == SeriesKind::R);
    CHECK(parse_series_kind("m") == SeriesKind::M);
    CHECK(parse_series_kind("a") == SeriesKind::A);
    CHECK(parse_series_kind("i") == SeriesKind::I);
    CHECK(parse_series_kind("r0") == SeriesKind::R0);
    CHECK_THROWS_WITH_AS(parse_series_kind("z"), doctest::Contains("BadConfig"), Error);
}

TEST_CASE("criterion run: exit code and all three formats") {
    RunConfig config = base_config("quivers/kronecker.json", {1, 1});

    auto [code_text, text] = run_capture(config);
    CHECK(code_text == 0);
    CHECK(text == "alpha=0,1 r0=-1 tits=1 ht=1 pass\n"
                  "alpha=1,0 r0=-1 tits=1 ht=1 pass\n"
                  "alpha=1,1 r0=0 tits=0 ht=2 pass\n"
                  "verdict: PASS\n");

    config.format = Format::Csv;
    auto [code_csv, csv] = run_capture(config);
    CHECK(code_csv == 0);
    CHECK(csv == "alpha;r0_num;r0_den;tits;ht;pass\n"
                 "0,1;-1;1;1;1;true\n"
                 "1,0;-1;1;1;1;true\n"
                 "1,1;0;1;0;2;true\n");

    config.format = Format::Json;
    auto [code_json, text_json] = run_capture(config);
    CHECK(code_json == 0);
    json doc = json::parse(text_json);
    CHECK(doc["command"] == "criterion");
    CHECK(doc["bound"] == json::array({1, 1}));
    CHECK(doc["verdict"] == "PASS");
    REQUIRE(doc["records"].size() == 3);
    CHECK(doc["records"][2]["alpha"] == json::array({1, 1}));
    CHECK(doc["records"][2]["r0"] == "0");
    CHECK(doc["records"][2]["tits"] == 0);
    CHECK(doc["records"][2]["ht"] == 2);
    CHECK(doc["records"][2]["pass"] == true);
}

TEST_CASE("emitted json is canonical and byte-deterministic") {
    RunConfig config = base_config("quivers/example.json", {1, 1, 1, 1});
    config.format = Format::Json;

    auto [code1, first] = run_capture(config);
    auto [code2, second] = run_capture(config);
    CHECK(code1 == 0);
    CHECK(first == second);
    // round-trip: parse and re-serialize reproduces the exact bytes
    CHECK(json::parse(first).dump(2) + "\n" == first);

    config.command = Command::Verify;
    config.quiver_path = data_path("quivers/kronecker.json");
    config.bound = {2, 2};
    auto [vcode1, vfirst] = run_capture(config);
    auto [vcode2, vsecond] = run_capture(config);
    CHECK(vcode1 == 0);
    CHECK(vfirst == vsecond);
    CHECK(json::parse(vfirst).dump(2) + "\n" == vfirst);
}

TEST_CASE("series run emits every lattice point") {
    RunConfig config = base_config("quivers/kronecker.json", {1, 1});
    config.command = Command::Series;
    config.what = SeriesKind::R0;

    auto [code, text] = run_capture(config);
    CHECK(code == 0);
    CHECK(text == "0,0\t1\n"
                  "0,1\t-1\n"
                  "1,0\t-1\n"
                  "1,1\t0\n");

    config.what = SeriesKind::A;
    config.format = Format::Json;
    auto [jcode, jtext] = run_capture(config);
    CHECK(jcode == 0);
    json doc = json::parse(jtext);
    CHECK(doc["command"] == "series");
    CHECK(doc["what"] == "a");
    REQUIRE(doc["records"].size() == 4);
    CHECK(doc["records"][0]["alpha"] == json::array({0, 0}));
    CHECK(doc["records"][0]["value"] == "0");
    CHECK(doc["records"][3]["value"] == "1 + q");

    config.what = SeriesKind::M;
    config.format = Format::Csv;
    auto [ccode, ctext] = run_capture(config);
    CHECK(ccode == 0);
    CHECK(ctext == "alpha;value\n"
                   "0,0;1\n"
                   "0,1;1\n"
                   "1,0;1\n"
                   "1,1;2 + q\n");
}

TEST_CASE("mult run prints the recursion table") {
    RunConfig config = base_config("quivers/kronecker.json", {1, 1});
    config.command = Command::Mult;

    auto [code, text] = run_capture(config);
    CHECK(code == 0);
    CHECK(text == "0,1\t1\n"
                  "1,0\t1\n"
                  "1,1\t1\n");

    config.format = Format::Json;
    auto [jcode, jtext] = run_capture(config);
    CHECK(jcode == 0);
    json doc = json::parse(jtext);
    CHECK(doc["command"] == "mult");
    REQUIRE(doc["records"].size() == 3);
    CHECK(doc["records"][2]["mult"] == "1");
}

TEST_CASE("verify run reports the identity checks") {
    RunConfig config = base_config("quivers/kronecker.json", {2, 2});
    config.command = Command::Verify;

    auto [code, text] = run_capture(config);
    CHECK(code == 0);
    CHECK(text.find("denominator_check: ok\n") != std::string::npos);
    CHECK(text.find("triple_agreement: ok\n") != std::string::npos);
    CHECK(text.find("a_nonnegative: yes\n") != std::string::npos);
    CHECK(text.find("verdict: PASS\n") != std::string::npos);
    CHECK(text.find("alpha=1,1 a0=1 mult=1 equal\n") != std::string::npos);

    config.format = Format::Json;
    auto [jcode, jtext] = run_capture(config);
    CHECK(jcode == 0);
    json doc = json::parse(jtext);
    CHECK(doc["verdict"] == "PASS");
    CHECK(doc["denominator_check"]["ok"] == true);
    CHECK(doc["observation"]["a_nonnegative"] == true);
    CHECK(doc["triple_agreement"] == "PASS");
}

TEST_CASE("oracle run compares engine and counts") {
    RunConfig config = base_config("quivers/kronecker.json", {1, 1});
    config.command = Command::Oracle;

    auto [code, text] = run_capture(config);
    CHECK(code == 0);
    CHECK(text == "alpha=0,1 q=2 count=1 reversed=1 m=1 match\n"
                  "alpha=0,1 q=3 count=1 reversed=1 m=1 match\n"
                  "alpha=1,0 q=2 count=1 reversed=1 m=1 match\n"
                  "alpha=1,0 q=3 count=1 reversed=1 m=1 match\n"
                  "alpha=1,1 q=2 count=4 reversed=4 m=4 match\n"
                  "alpha=1,1 q=3 count=5 reversed=5 m=5 match\n"
                  "verdict: PASS\n");

    config.format = Format::Json;
    auto [jcode, jtext] = run_capture(config);
    CHECK(jcode == 0);
    json doc = json::parse(jtext);
    CHECK(doc["command"] == "oracle");
    CHECK(doc["budget"] == 10'000'000);
    CHECK(doc["verdict"] == "PASS");
    REQUIRE(doc["records"].size() == 6);
    CHECK(doc["records"][4]["count"] == "4");
    CHECK(doc["records"][4]["match"] == true);
}

TEST_CASE("input failures exit with code 2 and an error report") {
    // unreadable document
    RunConfig config;
    config.quiver_path = "/nonexistent/quiver.json";
    config.bound = {1, 1};
    auto [code, text] = run_capture(config);
    CHECK(code == 2);
    CHECK(text.rfind("error: ", 0) == 0);

    config.format = Format::Json;
    auto [jcode, jtext] = run_capture(config);
    CHECK(jcode == 2);
    json doc = json::parse(jtext);
    CHECK(doc["error"]["kind"] == "BadDocument");
    CHECK(doc["error"]["message"].get<std::string>().size() > 0);

    // malformed json body
    config.quiver_path = temp_file("run_malformed.json", "{\"vertices\": 2,");
    auto [mcode, mtext] = run_capture(config);
    CHECK(mcode == 2);
    CHECK(json::parse(mtext)["error"]["kind"] == "BadDocument");

    // loop edge
    config.quiver_path =
        temp_file("run_loop.json", R"({"vertices": 2, "edges": [[1, 1, 1]]})");
    auto [lcode, ltext] = run_capture(config);
    CHECK(lcode == 2);
    CHECK(json::parse(ltext)["error"]["kind"] == "LoopEdge");

    // bound rank mismatch
    config.quiver_path = data_path("quivers/kronecker.json");
    config.bound = {1, 1, 1};
    auto [bcode, btext] = run_capture(config);
    CHECK(bcode == 2);
    CHECK(json::parse(btext)["error"]["kind"] == "BoundMismatch");

    // oracle budget refusal
    config.bound = {3, 1};
    config.command = Command::Oracle;
    config.primes = {2};
    config.budget = 100;
    auto [ocode, otext] = run_capture(config);
    CHECK(ocode == 2);
    json odoc = json::parse(otext);
    CHECK(odoc["error"]["kind"] == "BudgetExceeded");
    CHECK(odoc["error"]["message"].get<std::string>().find("exceeds budget 100") !=
          std::string::npos);
}
