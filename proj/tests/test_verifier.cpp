#include "doctest.h"

#include "radalg/field.hpp"
#include "radalg/verifier.hpp"

using namespace radalg;

namespace {

template <class S>
Report full_report(const char* spec, std::uint64_t depth, std::uint64_t oracle_depth) {
    Tower<S> t(Schedule::parse(spec));
    t.build_to(depth);
    Report r = check_conditions(t);
    r.merge(check_lemmas(t));
    r.add(check_case3_dual_route(t));
    r.merge(check_projection_agreement(t, build_oracle<S>(t.schedule(), oracle_depth)));
    r.merge(check_projection_agreement(t, build_oracle<S>(t.schedule(), std::min<std::uint64_t>(oracle_depth, 2),
                                                          OracleOptions{3, 256, false, false})));
    return r;
}

}  // namespace

TEST_SUITE("verifier") {

TEST_CASE_TEMPLATE("all checks pass on the test schedules", S, Rational, ModP) {
    ModulusScope scope(2);
    for (const auto& [spec, oracle] : {std::pair{"trivial", 3}, std::pair{"windows:(2,5)", 3}, std::pair{"windows:(2,4)", 3}}) {
        const auto r = full_report<S>(spec, 9, oracle);
        CAPTURE(spec);
        for (const auto& c : r.checks()) {
            CAPTURE(c.name);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("the oracle covers every word at level 3") {
    ModulusScope scope(2);
    Tower<ModP> t(Schedule::trivial());
    t.build_to(3);
    const auto r = check_projection_agreement(t, build_oracle<ModP>(t.schedule(), 3));
    CHECK(r.find("oracle_projection[xy]")->instances == 2 + 4 + 16 + 256);
}

TEST_CASE("a mismatched Case 2 choice is caught with a counterexample") {
    ModulusScope scope(2);
    Tower<ModP> t(Schedule::trivial());
    t.build_to(3);
    const auto r = check_projection_agreement(t, build_oracle<ModP>(t.schedule(), 3, OracleOptions{2, 256, true, false}));
    const auto* c = r.find("oracle_projection[xy]");
    REQUIRE(c);
    CHECK_FALSE(c->pass);
    CHECK(c->counterexample["level"] == 1);
    CHECK(c->counterexample.contains("word"));
    CHECK_FALSE(r.all_pass());
}

TEST_CASE("a reversed Case 1 order is caught") {
    ModulusScope scope(2);
    Tower<ModP> t(Schedule::parse("windows:(2,4)"));
    t.build_to(3);
    const auto r = check_projection_agreement(t, build_oracle<ModP>(t.schedule(), 3, OracleOptions{2, 256, false, true}));
    CHECK_FALSE(r.find("oracle_basis[xy]")->pass);
    CHECK(r.find("oracle_basis[xy]")->counterexample["level"] == 2);
}

TEST_CASE("the oracle refuses oversized levels") {
    CHECK_THROWS_WITH_AS(build_oracle<Rational>(Schedule::trivial(), 4), doctest::Contains("65536"), CapExceeded);
}

TEST_CASE("a corrupted table is reported") {
    ModulusScope scope(2);
    Tower<ModP> t(Schedule::trivial());
    t.build_to(5);
    auto levels = t.levels();
    levels[3].mu.entries[levels[3].m2_index.value() * 2].push_back({0, one<ModP>()});
    const Tower<ModP> bad(t.schedule(), levels);
    const auto r = check_conditions(bad);
    CHECK_FALSE(r.find("case2_m2_kill")->pass);
    CHECK(r.find("case2_m2_kill")->counterexample["level"] == 3);
}

TEST_CASE("window exit recomputed densely") {
    ModulusScope scope(2);
    Tower<ModP> t(Schedule::parse("windows:(2,4)"));
    t.build_to(5);
    const auto c = check_case3_dual_route(t);
    CHECK(c.instances == 1);
    CHECK(c.pass);
}

TEST_CASE("growth checks") {
    ModulusScope scope(2);
    Tower<ModP> t(Schedule::trivial());
    t.build_to(8);
    const auto r = check_growth(t, growth_table(t, 8, 8), 4, 5);
    CHECK(r.all_pass());
}

}
