#include "doctest.h"

#include <set>

#include "radalg/enumeration.hpp"
#include "radalg/field.hpp"

using namespace radalg;

TEST_SUITE("enumeration") {

TEST_CASE("degree bound") {
    CHECK(*degree_bound(1) == 324);   // 3^4 * 4
    CHECK(*degree_bound(2) == 6561);  // 3^6 * 9
    CHECK_FALSE(degree_bound(40));
    CHECK(words_up_to(2).size() == 12);
}

TEST_CASE("over GF(2) the linear polynomials fill the slots right after the bound") {
    ModulusScope scope(2);
    const PolyEnumerator<ModP> en(10000);
    // Nothing fits below 325; the seven nonzero linear forms come next, and
    // degree 2 cannot start before 6562.
    CHECK(en.count_in_Z(324) == 0);
    CHECK(en.count_in_Z(6561) == 7);
    CHECK(en.enumerate_f(325)->to_string() == "1*x");
    CHECK(en.is_in_Z(6562));
    CHECK(en.enumerate_f(6562)->degree() == 2);
    CHECK_THROWS_AS(en.enumerate_f(10001), CapExceeded);
}

TEST_CASE("over the rationals the enumeration is injective and respects the bound") {
    const PolyEnumerator<Rational> en(100000);
    std::set<std::string> seen;
    for (std::uint64_t i = 1; i <= 100000; ++i) {
        const auto f = en.enumerate_f(i);
        if (!f) continue;
        REQUIRE(i > *degree_bound(f->degree()));
        REQUIRE(seen.insert(f->to_string()).second);
        REQUIRE(en.index_of(*f) == i);
    }
    CHECK(seen.size() == en.count_in_Z(100000));
}

}
