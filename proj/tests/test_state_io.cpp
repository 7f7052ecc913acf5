#include "doctest.h"

#include <sstream>

#include "radalg/field.hpp"
#include "radalg/state_io.hpp"

using namespace radalg;

TEST_SUITE("state_io") {

TEST_CASE_TEMPLATE("round trip is exact", S, Rational, ModP) {
    ModulusScope scope(3);
    Tower<S> t(Schedule::parse("windows:(2,5);(3,12)"));
    t.build_to(13);
    std::stringstream a;
    save_state(a, t);
    const auto text = a.str();
    const auto u = load_state<S>(a);
    CHECK(u.levels() == t.levels());
    std::stringstream b;
    save_state(b, u);
    CHECK(b.str() == text);
}

TEST_CASE("loader rejects bad input") {
    ModulusScope scope(2);
    Tower<ModP> t(Schedule::trivial());
    t.build_to(3);
    std::stringstream a;
    save_state(a, t);
    const auto text = a.str();

    std::stringstream wrong_field(text);
    CHECK_THROWS_WITH_AS(load_state<Rational>(wrong_field), doctest::Contains("gf2"), ConfigError);
    std::stringstream truncated(text.substr(0, text.size() / 2));
    CHECK_THROWS_AS(load_state<ModP>(truncated), ConfigError);
    std::stringstream garbage("hello 1");
    CHECK_THROWS_AS(load_state<ModP>(garbage), ConfigError);
    std::stringstream peek(text);
    CHECK(peek_state_field(peek) == "gf2");
}

}
