#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gring/report.hpp"

#include <sstream>

using namespace gring;

TEST_CASE("report json round-trips through its own parser") {
    Report r;
    r.suite = "demo";
    r.add("a.one", "first check", true, "all good", "ref.1");
    r.add("a.two", "second check", false, "broken", "ref.2");
    r.add_status("a.three", "third check", CheckStatus::warn, "odd", "ref.3");
    r.add_status("a.four", "fourth check", CheckStatus::skip, "", "ref.4");

    std::string j = r.to_json();
    Report back = Report::from_json(j);
    CHECK(back.suite == r.suite);
    REQUIRE(back.checks.size() == r.checks.size());
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
        CHECK(back.checks[i].id == r.checks[i].id);
        CHECK(back.checks[i].description == r.checks[i].description);
        CHECK(back.checks[i].status == r.checks[i].status);
        CHECK(back.checks[i].detail == r.checks[i].detail);
        CHECK(back.checks[i].ref == r.checks[i].ref);
    }
    CHECK(back.to_json() == j);
}

TEST_CASE("exit code contract") {
    Report r;
    r.suite = "s";
    r.add("ok", "fine", true);
    CHECK(r.ok());
    CHECK(r.exit_code() == 0);
    r.add_status("w", "warned", CheckStatus::warn);
    r.add_status("sk", "skipped", CheckStatus::skip);
    CHECK(r.exit_code() == 0); // warn and skip do not fail the run
    r.add("bad", "broken", false);
    CHECK(!r.ok());
    CHECK(r.exit_code() == 1);
}

TEST_CASE("table output lists every check") {
    Report r;
    r.suite = "table";
    r.add("x.count", "counted", true);
    r.add("y.count", "counted again", false, "detail here");
    std::ostringstream os;
    r.print_table(os);
    std::string text = os.str();
    CHECK(text.find("x.count") != std::string::npos);
    CHECK(text.find("y.count") != std::string::npos);
    CHECK(text.find("[fail]") != std::string::npos);
    CHECK(text.find("summary:") != std::string::npos);
}

TEST_CASE("merge accumulates checks") {
    Report a, b;
    a.suite = "a";
    a.add("one", "1", true);
    b.add("two", "2", false);
    a.merge(b);
    CHECK(a.checks.size() == 2);
    CHECK(!a.ok());
}
