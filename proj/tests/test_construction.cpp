#include "doctest.h"

#include <random>

#include "radalg/construction.hpp"
#include "radalg/field.hpp"
#include "radalg/poly.hpp"

using namespace radalg;

namespace {

template <class S>
Vector<S> vec(std::initializer_list<int> xs) {
    Vector<S> v;
    for (int x : xs) v.push_back(S::parse(std::to_string(x)));
    return v;
}

}  // namespace

TEST_SUITE("construction") {

TEST_CASE_TEMPLATE("level one of the trivial schedule", S, Rational, ModP) {
    ModulusScope scope(2);
    Tower<S> t(Schedule::trivial());
    t.build_to(3);
    // w(1,0) = y has coordinates (0,1), so y is kept and every word starting
    // with x is pushed into U(2); V(2) = span{yy, yx}.
    CHECK(t.project(Monomial::from_string("yy")) == vec<S>({1, 0}));
    CHECK(t.project(Monomial::from_string("yx")) == vec<S>({0, 1}));
    CHECK(t.project(Monomial::from_string("xy")) == vec<S>({0, 0}));
    CHECK(t.project(Monomial::from_string("xz")) == vec<S>({0, 0}));
    CHECK(t.unfold(3, 0).to_string() == "yyyyyyyy");
    CHECK(t.unfold(3, 1).to_string() == "yyyyyyyx");
}

TEST_CASE("dimension profiles") {
    ModulusScope scope(2);
    const auto dims = [](const char* spec, std::uint64_t depth) {
        Tower<ModP> t(Schedule::parse(spec));
        t.build_to(depth);
        std::vector<std::size_t> d;
        for (const auto& l : t.levels()) d.push_back(l.dim);
        return d;
    };
    CHECK(dims("trivial", 16) == std::vector<std::size_t>(17, 2));
    CHECK(dims("windows:(3,8)", 10) == std::vector<std::size_t>{2, 2, 2, 2, 2, 4, 16, 256, 2, 2, 2});
    CHECK(dims("windows:(2,5);(3,12)", 13) ==
          std::vector<std::size_t>{2, 2, 2, 4, 16, 2, 2, 2, 2, 4, 16, 256, 2, 2});
}

TEST_CASE("recursive slots agree with projecting the expanded w-words") {
    ModulusScope scope(2);
    for (const char* spec : {"trivial", "windows:(2,5)"}) {
        Tower<ModP> t(Schedule::parse(spec));
        t.build_to(4);
        for (std::uint64_t n = 0; n <= 4; ++n) {
            const std::size_t len = std::size_t{1} << n;
            for (std::size_t i = 0; i <= len; ++i)
                CHECK(t.project_poly(w_poly<ModP>(len, i)) == t.level(n).wproj_vector(i));
        }
    }
}

TEST_CASE("projection is multiplicative through the tables") {
    Tower<Rational> t(Schedule::parse("windows:(2,5)"));
    t.build_to(7);
    std::mt19937_64 rng(5);
    for (std::uint64_t n = 1; n <= 7; ++n)
        for (int s = 0; s < 8; ++s) {
            Monomial u, v;
            for (std::size_t k = 0; k < (std::size_t{1} << (n - 1)); ++k) {
                u.push_back(static_cast<Letter>(rng() % 2));
                v.push_back(static_cast<Letter>(rng() % 2));
            }
            CHECK(t.project(u * v) == mu_apply<Rational>(t.level(n).mu, t.project(u), t.project(v)));
        }
}

TEST_CASE("only the relevant slots are nonzero") {
    ModulusScope scope(2);
    Tower<ModP> t(Schedule::parse("windows:(3,8)"));
    t.build_to(9);
    CHECK(t.level(7).nonzero_slots.size() == 9);
    CHECK(t.level(0).nonzero_slots == std::vector<std::uint64_t>{0, 1});
    CHECK_THROWS(t.project(Monomial::from_string("xyz")));
}

TEST_CASE("residual provider feeds the window exit") {
    using Q = Rational;
    const Q o = one<Q>(), z{};
    auto p = std::make_shared<const ResidualProvider<Q>>(std::vector<std::array<Q, 3>>{{o, z, z}, {z, o, z}});
    Tower<Q> t(Schedule::parse("windows:(3,8)"), p);
    t.build_to(9);
    const auto& exit = t.level(8);
    CHECK(exit.produced_by == StepCase::case3);
    CHECK(exit.provider_vectors.size() == 2);
    for (const auto& f : exit.provider_vectors) CHECK(is_zero(mu_apply_tensor<Q>(exit.mu, f)));
    CHECK(exit.dim == 2);
}

}
