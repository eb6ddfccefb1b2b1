#include <doctest.h>

#include "yangian/runner.hpp"

#include <algorithm>

using namespace yangian;
using nlohmann::json;

namespace {

json base_config() {
    return json{{"theta", 1}, {"n", 2}, {"p", 0}, {"q", 1}, {"mu", {"1/3"}}, {"nu", {1}}, {"checks", {"rtt"}}};
}

const json& record(const json& report, const std::string& name) {
    for (const auto& r : report["checks"])
        if (r["name"] == name) return r;
    throw std::runtime_error("no record " + name);
}

}  // namespace

TEST_CASE("registered checks") {
    std::vector<std::string> names;
    for (const auto& c : list_checks()) {
        names.push_back(c.name);
        CHECK_FALSE(c.description.empty());
        CHECK_FALSE(c.anchor.empty());
    }
    for (const char* want : {"rtt", "braid", "appendix-x-identities", "hw-scalar", "kernel-quotient"})
        CHECK(std::find(names.begin(), names.end(), want) != names.end());
}

TEST_CASE("config parsing") {
    RunConfig c = parse_config(base_config());
    CHECK(c.mu == std::vector<Rational>{Rational(1, 3)});
    CHECK(c.truncation == 6);
    CHECK(parse_config(config_to_json(c)).mu == c.mu);

    json bad = base_config();
    bad["colour"] = 1;
    CHECK_THROWS_WITH_AS(parse_config(bad), doctest::Contains("unknown field 'colour'"), ConfigError);
    bad = base_config();
    bad.erase("nu");
    CHECK_THROWS_WITH_AS(parse_config(bad), doctest::Contains("'nu'"), ConfigError);
    bad = base_config();
    bad["mu"] = {"1/0"};
    CHECK_THROWS_AS(parse_config(bad), ConfigError);
    bad = base_config();
    bad["mu"] = {0.5};
    CHECK_THROWS_WITH_AS(parse_config(bad), doctest::Contains("'mu'"), ConfigError);
}

TEST_CASE("config validation") {
    json j = base_config();
    j["mu"] = {"1/3", "1/2"};
    CHECK_THROWS_WITH_AS(validate_config(parse_config(j)), doctest::Contains("'mu'"), ConfigError);
    j = base_config();
    j["checks"] = {"nope"};
    CHECK_THROWS_WITH_AS(validate_config(parse_config(j)), doctest::Contains("nope"), ConfigError);
    j = base_config();
    j["q"] = 2;
    j["mu"] = {"0", "1"};
    j["nu"] = {1, 1};
    CHECK_THROWS_WITH_AS(validate_config(parse_config(j)), doctest::Contains("genericity violated: μ₁−μ₂ ∈ ℤ"),
                         ConfigError);
    j["allow_nongeneric"] = true;
    CHECK_NOTHROW(validate_config(parse_config(j)));
    j["word"] = {1, 1};
    CHECK_THROWS_WITH_AS(validate_config(parse_config(j)), doctest::Contains("not reduced"), ConfigError);
}

TEST_CASE("rtt on a vector module") {
    Report rep = run(parse_config(base_config()));
    REQUIRE(rep.records.size() == 1);
    CHECK(rep.records[0].status == "pass");
    CHECK(rep.all_pass());
    json out = rep.to_json(false);
    CHECK(out["summary"]["status"] == "pass");
    CHECK_FALSE(out["checks"][0].contains("timing_ms"));
}

TEST_CASE("hw-scalar reports the closed-form value") {
    // theta = +1, two p-type factors, nu = (1, 0), n = 2, d = mu_1 - mu_2:
    // mu*_1 - mu*_2 = d + 1 and lambda*_1 - lambda*_2 = d, so
    // z = (d + 1 - 1) / (d + 1) = (4/21) / (25/21) = 4/25 for d = 4/21.
    json j{{"theta", 1}, {"n", 2}, {"p", 2}, {"q", 0}, {"mu", {"1/3", "1/7"}}, {"nu", {1, 0}}, {"checks", {"hw-scalar"}}};
    json out = run(parse_config(j)).to_json(false);
    const json& r = record(out, "hw-scalar");
    CHECK(r["status"] == "pass");
    CHECK(r["details"]["expected"] == "4/25");
    CHECK(r["details"]["observed"] == "4/25");
    CHECK(r["details"]["factors"][0]["case"] == "pp");
}

TEST_CASE("reports are deterministic and parallel runs merge in order") {
    json j{{"theta", -1}, {"n", 2}, {"p", 1}, {"q", 1}, {"mu", {"1/3", "1/7"}}, {"nu", {1, 1}},
           {"checks", {"intertwiner", "rtt", "hw-scalar", "irreducibility"}}};
    RunConfig c = parse_config(j);
    const std::string a = run(c).to_json(false).dump();
    const std::string b = run(c).to_json(false).dump();
    const std::string p = run(c, true).to_json(false).dump();
    CHECK(a == b);
    CHECK(a == p);
}

TEST_CASE("check errors are reported per record") {
    json j = base_config();
    j["checks"] = {"braid", "rtt"};
    Report rep = run(parse_config(j));
    CHECK(rep.records[0].status == "error");
    CHECK(rep.records[1].status == "pass");
    CHECK_FALSE(rep.all_pass());
}

TEST_CASE("longest word") {
    CHECK(longest_word(1).empty());
    CHECK(longest_word(2) == std::vector<int>{1});
    CHECK(longest_word(3) == std::vector<int>{1, 2, 1});
    CHECK(longest_word(4).size() == 6);
}
