#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fuzzhyper/instances.hpp"
#include "fuzzhyper/io.hpp"
#include "fuzzhyper/report.hpp"

using namespace fuzzhyper;

TEST_CASE("space files round-trip, accepting p/q strings and integers") {
    const char* text = R"({"labels":["a","b"],"dist":[[0,"3/2"],["3/2",0]]})";
    SpacePtr space = space_from_json(text);
    CHECK(space->size() == 2);
    CHECK(space->dist(0, 1) == Rational(3, 2));
    SpacePtr again = space_from_json(space_to_json(*space));
    CHECK(*again == *space);
}

TEST_CASE("space loader rejects non-metrics and malformed input") {
    CHECK_THROWS_AS(space_from_json("not json"), ParseError);
    CHECK_THROWS_AS(space_from_json(R"({"labels":["a"]})"), ParseError);
    CHECK_THROWS_AS(space_from_json(R"({"labels":["a","b"],"dist":[[0,0],[0,0]]})"), ParseError);
    CHECK_THROWS_AS(space_from_json(R"({"labels":["a","b"],"dist":[[0,1],[2,0]]})"), ParseError);
}

TEST_CASE("fuzzy set files enforce nesting and normality") {
    SpacePtr space = space_from_json(R"({"labels":["a","b"],"dist":[[0,1],[1,0]]})");
    StepFuzzySet u =
        fuzzy_from_json(R"({"breakpoints":["1/2","1"],"levels":[["a","b"],["a"]]})", space);
    CHECK(u.membership(0) == Rational(1));
    CHECK(u.membership(1) == Rational(1, 2));
    CHECK_THROWS_AS(
        fuzzy_from_json(R"({"breakpoints":["1/2","1"],"levels":[["a"],["a","b"]]})", space),
        ParseError);  // not nested
    CHECK_THROWS_AS(fuzzy_from_json(R"({"breakpoints":["1/2"],"levels":[["a"]]})", space),
                    ParseError);  // subnormal
    CHECK_THROWS_AS(fuzzy_from_json(R"({"breakpoints":["1"],"levels":[["zz"]]})", space),
                    ParseError);  // unknown label
    CHECK_THROWS_AS(fuzzy_from_json(R"({"breakpoints":["1"],"levels":[["a"]]})", nullptr),
                    ParseError);  // no space anywhere

    // embedded space; decimals parse exactly
    StepFuzzySet v = fuzzy_from_json(
        R"({"breakpoints":[0.5,"1"],"levels":[["a","b"],["b"]],
            "space":{"labels":["a","b"],"dist":[[0,1],[1,0]]}})");
    CHECK(v.membership(0) == Rational(1, 2));
    StepFuzzySet back = fuzzy_from_json(fuzzy_to_json(v, true));
    CHECK(back == v);
}

TEST_CASE("system files round-trip through label maps") {
    System swap = make_swap2();
    System loaded = system_from_json(system_to_json(swap));
    CHECK(*loaded.space == *swap.space);
    CHECK(loaded.image == swap.image);
    CHECK_THROWS_AS(system_from_json(R"({"space":{"labels":["a","b"],"dist":[[0,1],[1,0]]},
                                          "map":{"a":"b"}})"),
                    ParseError);  // missing source label
}

TEST_CASE("reports serialize deterministically with wall time outside the payload") {
    AnalysisReport report;
    report.suite = "demo";
    report.instance = "swap2";
    report.checks.push_back({"first", true, "", true});
    report.checks.push_back({"second", false, R"({"pair":["a","b"]})", false});
    report.wall_ms = 12.5;
    std::string payload_a = report.payload_json();
    report.wall_ms = 99.0;
    std::string payload_b = report.payload_json();
    CHECK(payload_a == payload_b);
    CHECK(payload_a.find("wall") == std::string::npos);
    CHECK(report.to_json().find("wall_time_ms") != std::string::npos);
    CHECK_FALSE(report.all_passed());
    CHECK(report.to_markdown().find("| second | false |") != std::string::npos);
}

TEST_CASE("bundled instances resolve by descriptor") {
    CHECK(instance_by_name("cycle:6").size() == 6);
    CHECK(instance_by_name("triadic_tail:3").size() == 4);
    CHECK(instance_by_name("dyadic_line:3").size() == 5);
    CHECK(instance_by_name("swap2").image == std::vector<int>{1, 0});
    CHECK_THROWS_AS(instance_by_name("nope"), ParseError);
    CHECK_THROWS_AS(instance_by_name("cycle:x"), ParseError);
}
