#include "doctest.h"

#include <string>

#include "radalg/errors.hpp"
#include "radalg/schedule.hpp"

using namespace radalg;

TEST_SUITE("schedule") {

TEST_CASE("a single window gives Case 1 inside and Case 3 at the exit") {
    const auto s = Schedule::parse("windows:(3,8)");
    std::string cases;
    for (std::uint64_t n = 1; n <= 10; ++n) cases += to_string(s.case_of(n)).back();
    CHECK(cases == "2221113222");
    CHECK_FALSE(s.in_S(3));
    CHECK(s.in_S(4));
    CHECK(s.in_S(7));
    CHECK_FALSE(s.in_S(8));
    CHECK(s.run_length(6) == 3);
}

TEST_CASE("window validation names the offending window") {
    CHECK_THROWS_WITH_AS(Schedule::parse("windows:(2,3)"), doctest::Contains("(2,3)"), ConfigError);
    CHECK_THROWS_AS(Schedule::parse("windows:(1,5)"), ConfigError);
    CHECK_THROWS_AS(Schedule::parse("windows:(4,9)"), ConfigError);
    CHECK_THROWS_AS(Schedule::parse("windows:(2,5);(2,6)"), ConfigError);
    CHECK_THROWS_AS(Schedule::parse("nonsense"), ConfigError);
    CHECK_NOTHROW(Schedule::parse("windows:(2,5);(3,12)"));
}

TEST_CASE("printing and parsing agree") {
    for (const char* t : {"trivial", "paper", "windows:(2,5);(3,12)"}) CHECK(Schedule::parse(t).to_string() == t);
}

TEST_CASE("the paper schedule has no window below its guard") {
    const auto s = Schedule::paper();
    for (std::uint64_t n = 0; n < 64; ++n) CHECK(s.case_of(n) == StepCase::case2);
}

}
