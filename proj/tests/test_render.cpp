#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <set>
#include <string>

#include "eulersum/render.hpp"
#include "eulersum/verify.hpp"

using namespace eulersum;

TEST_CASE("numeric result json") {
    NumericResult r{-0.5, 1e-9, 131072};
    std::string s = render_numeric_json(r);
    auto j = nlohmann::json::parse(s);
    CHECK(j["value"] == -0.5);
    CHECK(j["error_estimate"] == 1e-9);
    CHECK(j["terms_used"] == 131072);
    // canonical: keys come out sorted
    CHECK(s.find("error_estimate") < s.find("terms_used"));
    CHECK(s.find("terms_used") < s.find("\"value\""));
}

TEST_CASE("series matrix json") {
    auto j = nlohmann::json::parse(render_series_json("phi", 3));
    CHECK(j["series"] == "phi");
    CHECK(j["max_n"] == 3);
    REQUIRE(j["matrix"].size() == 4);
    CHECK(j["matrix"][0][0] == "1");
    CHECK(j["matrix"][1][1] == "-1/12");
    CHECK(j["matrix"][3][2] == "1/10080");

    auto p1 = nlohmann::json::parse(render_series_json("psi1", 2));
    CHECK(p1["matrix"][2][2] == "-1/240");
    auto pt = nlohmann::json::parse(render_series_json("psi_tot", 2));
    CHECK(pt["matrix"][2][2] == "-1/480");

    CHECK_THROWS_AS(render_series_json("nope", 2), std::invalid_argument);
}

TEST_CASE("xi table") {
    std::string csv = render_table("xi", 4, 0, "csv");
    // header plus one row per pi-power term; all ten (n,d) pairs appear once
    CHECK(csv.substr(0, csv.find('\n')) == "n,d,alpha,pi_exp,num,den");
    std::set<std::pair<int, int>> pairs;
    std::size_t pos = csv.find('\n') + 1;
    while (pos < csv.size()) {
        std::size_t end = csv.find('\n', pos);
        std::string line = csv.substr(pos, end - pos);
        int n = std::stoi(line.substr(0, line.find(',')));
        std::string rest = line.substr(line.find(',') + 1);
        int d = std::stoi(rest.substr(0, rest.find(',')));
        pairs.insert({n, d});
        pos = end + 1;
    }
    CHECK(pairs.size() == 10);

    // deterministic: byte-identical on re-run
    CHECK(render_table("xi", 4, 0, "csv") == csv);
    CHECK(render_table("xi", 6, 0, "json") == render_table("xi", 6, 0, "json"));
}

TEST_CASE("a_alpha table") {
    auto j = nlohmann::json::parse(render_table("a_alpha", 3, 2, "json"));
    std::set<int> alphas;
    for (const auto& row : j["rows"]) {
        CHECK(row["d"] == 2);
        alphas.insert(row["alpha"].get<int>());
    }
    CHECK(alphas == std::set<int>{0, 1, 2});

    std::string csv = render_table("a_alpha", 3, 2, "csv");
    CHECK(csv.find("2,2,1,4,-1,240") != std::string::npos);  // A_1(4,2) = -pi^4/240

    CHECK_THROWS_AS(render_table("a_alpha", 3, 0, "csv"), std::invalid_argument);
    CHECK_THROWS_AS(render_table("bogus", 3, 1, "csv"), std::invalid_argument);
    CHECK_THROWS_AS(render_table("xi", 3, 0, "tsv"), std::invalid_argument);
}

TEST_CASE("verify report rendering") {
    VerifyReport rep;
    rep.suite = "exact";
    rep.checks.push_back({"demo/ok", true, "1", "1"});
    rep.checks.push_back({"demo/bad", false, "1", "2"});
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.failures() == 1);
    auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j["suite"] == "exact");
    CHECK(j["all_pass"] == false);
    REQUIRE(j["checks"].size() == 2);
    CHECK(j["checks"][1]["id"] == "demo/bad");
    CHECK(j["checks"][1]["lhs"] == "1");
    CHECK(j["checks"][1]["rhs"] == "2");
}

TEST_CASE("small suites pass end to end") {
    VerifyReport exact = run_suite("exact", 6, 3);
    CHECK(exact.all_pass());
    VerifyReport stuffle = run_suite("stuffle", 6, 3);
    CHECK(stuffle.all_pass());
    CHECK_THROWS_AS(run_suite("bogus", 6, 3), std::invalid_argument);
}
