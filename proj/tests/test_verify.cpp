#include <catch2/catch_amalgamated.hpp>

#include "ringgraph/verify.hpp"

using namespace ringgraph;

TEST_CASE("suite names parse") {
    CHECK(parse_suite("metrics") == SuiteKind::Metrics);
    CHECK(parse_suite("all") == SuiteKind::All);
    CHECK_FALSE(parse_suite("everything").has_value());
}

TEST_CASE("tag registry") {
    CHECK(known_tag("2.4"));
    CHECK(known_tag("3.5(1)"));
    CHECK(known_tag("5.12"));
    CHECK_FALSE(known_tag("6.1"));
    CHECK_FALSE(known_tag("2.12"));
}

TEST_CASE("all suites pass on the three-point three-value model") {
    auto report = run_suite(make_model(3, 3, ArithmeticMode::PrimeField), SuiteKind::All);
    CHECK(report.ok());
    CHECK(report.count(Outcome::Fail) == 0);
    CHECK(report.count(Outcome::Boundary) == 0);
    CHECK(report.entries.size() >= 26);
    for (const auto& e : report.entries) {
        INFO(e.tag << ": " << e.note);
        CHECK(known_tag(e.tag));
        CHECK(e.outcome == Outcome::Pass);
    }
    // Field mode adds the ideal identity entries.
    bool has_ideals = false;
    for (const auto& e : report.entries)
        has_ideals |= e.tag.rfind("3.5", 0) == 0;
    CHECK(has_ideals);
}

TEST_CASE("support-mode all suite skips the ideal checks") {
    auto report = run_suite(make_model(3, 3), SuiteKind::All);
    CHECK(report.ok());
    for (const auto& e : report.entries)
        CHECK(e.tag.rfind("3.5", 0) != 0);
}

TEST_CASE("two-valued cycle suite reports the documented boundary") {
    auto report = run_suite(make_model(3, 2), SuiteKind::Cycles);
    CHECK(report.ok());
    REQUIRE(report.entries.size() == 2);
    for (const auto& e : report.entries) {
        CHECK(e.outcome == Outcome::Boundary);
        CHECK(e.note.find("no-cycle pairs") != std::string::npos);
    }
}

TEST_CASE("suite preconditions") {
    CHECK_THROWS_AS(run_suite(make_model(3, 3), SuiteKind::Ideals), UnsupportedError);
    CHECK_THROWS_AS(run_suite(make_model(1, 3), SuiteKind::Metrics), UnsupportedError);
}

TEST_CASE("report json is stable and carries no timings") {
    auto cfg = make_model(2, 3);
    auto a = report_json(run_suite(cfg, SuiteKind::Metrics));
    auto b = report_json(run_suite(cfg, SuiteKind::Metrics));
    CHECK(a.dump(2) == b.dump(2));
    CHECK(a["schema"] == 1);
    CHECK(a.dump().find("elapsed") == std::string::npos);
    CHECK(a["summary"]["fail"] == 0);
}

TEST_CASE("report text mentions every entry and a summary") {
    auto report = run_suite(make_model(2, 2), SuiteKind::Metrics);
    auto text = report_text(report);
    CHECK(text.find("summary:") != std::string::npos);
    for (const auto& e : report.entries)
        CHECK(text.find(e.tag) != std::string::npos);
}
