#include <doctest.h>

#include <parahiggs/error.hpp>

#include "runner.hpp"

#include <sstream>

using namespace parahiggs;
using namespace parahiggs::cli;
using nlohmann::json;

namespace {

json base_config() {
    return json::parse(R"({"curve_f": [1, -1, 0, 0, 0, 1], "marked_points": [[0, 1], [1, 1]], "lambda": [1, 3],
                           "samples": 4, "seed": 3})");
}

const json* find_value(const json& report, const std::string& suite, const std::string& key) {
    for (const auto& s : report["suites"]) {
        if (s["name"] == suite) return &s["values"][key];
    }
    return nullptr;
}

}  // namespace

TEST_CASE("config validation") {
    CHECK_NOTHROW(parse_config(base_config()));
    const auto rejects = [](json j) { CHECK_THROWS_WITH_AS(parse_config(j), doctest::Contains("ConfigInvalid"), MathError); };
    json j = base_config();
    j["lambda"] = {1};
    rejects(j);
    j = base_config();
    j["marked_points"][0] = {0, 2};
    rejects(j);
    j = base_config();
    j["curve_f"] = {0, 0, 1, 0, 0, 1};  // x^2 (x^3 + 1) is not squarefree
    rejects(j);
    j = base_config();
    j["suites"] = {"dims", "nope"};
    rejects(j);
    j = base_config();
    j["colour"] = "blue";
    rejects(j);
    j = base_config();
    j["lambda"] = {"1/2", 3};
    rejects(j);
    j = base_config();
    j["curve_f"] = {"1", "-1", 0, 0, 0, "1/1"};
    CHECK_NOTHROW(parse_config(j));
}

TEST_CASE("report contents") {
    const auto cfg = parse_config(base_config());
    const auto r = run_suites(cfg, {"dims", "sugawara"});
    CHECK(r.passed);
    CHECK(*find_value(r.report, "dims", "base_dim") == 5);
    CHECK(*find_value(r.report, "dims", "spectral_genus") == 7);
    CHECK(*find_value(r.report, "dims", "prym_dim") == 5);
    CHECK(*find_value(r.report, "sugawara", "eigenvalues") == json({"3/4", "15/4"}));
    CHECK(r.report["suites"].size() == 2);

    json one = base_config();
    one["marked_points"] = {{0, 1}};
    one["lambda"] = {2};
    const auto r1 = run_suites(parse_config(one), {"sugawara"});
    CHECK(*find_value(r1.report, "sugawara", "eigenvalues") == json({"2"}));

    for (const auto& s : r.report["suites"]) {
        for (const auto& c : s["checks"]) {
            CHECK(c.contains("lhs"));
            CHECK(c.contains("rhs"));
        }
    }
}

TEST_CASE("empty selection and fixed order") {
    const auto cfg = parse_config(base_config());
    const auto empty = run_suites(cfg, {});
    CHECK(empty.passed);
    CHECK(empty.report["suites"].empty());
    const auto r = run_suites(cfg, {"bridge", "dims"});
    REQUIRE(r.report["suites"].size() == 2);
    CHECK(r.report["suites"][0]["name"] == "dims");
    CHECK(r.report["suites"][1]["name"] == "bridge");
}

TEST_CASE("determinism modulo timings") {
    const auto cfg = parse_config(base_config());
    const auto a = run_suites(cfg, {"dims", "hitchin", "spectral", "bridge"});
    const auto b = run_suites(cfg, {"dims", "hitchin", "spectral", "bridge"});
    CHECK(strip_timings(a.report).dump() == strip_timings(b.report).dump());
    CHECK(strip_timings(a.report).dump().find("seconds") == std::string::npos);
    // a suite's values do not depend on which other suites run
    const auto alone = run_suites(cfg, {"hitchin"});
    CHECK(strip_timings(alone.report)["suites"][0] == strip_timings(a.report)["suites"][1]);
}

TEST_CASE("exit codes") {
    std::ostringstream err;
    CHECK(run({.config_path = "/nonexistent/config.json"}, err) == 2);
    CHECK(run({.config_path = PARAHIGGS_TEST_DATA "/bad_lambda.json"}, err) == 2);
    CHECK(run({.config_path = PARAHIGGS_TEST_DATA "/empty_suites.json", .output_path = "/dev/null"}, err) == 0);
    CHECK(run({.config_path = PARAHIGGS_TEST_DATA "/g2n1_sugawara.json", .output_path = "/dev/null"}, err) == 0);
    CHECK(run({.config_path = PARAHIGGS_TEST_DATA "/g2n1_sugawara.json", .suites = {"bogus"}}, err) == 2);
}
