#include "doctest.h"

#include <random>

#include "radalg/field.hpp"
#include "radalg/poly.hpp"
#include "radalg/word.hpp"

using namespace radalg;

TEST_SUITE("words") {

TEST_CASE("monomials pack across block boundaries") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::string s;
        const std::size_t len = rng() % 100;
        for (std::size_t k = 0; k < len; ++k) s.push_back("xyz"[rng() % 3]);
        const auto m = Monomial::from_string(s);
        CHECK(m.to_string() == (s.empty() ? "1" : s));
        const std::size_t cut = len == 0 ? 0 : rng() % len;
        CHECK((m.slice(0, cut) * m.slice(cut, len - cut)) == m);
        CHECK(m.has_z() == (s.find('z') != std::string::npos));
    }
}

TEST_CASE("xy index is the binary reading with y as 1") {
    CHECK(Monomial::from_index(0b011, 3).to_string() == "xyy");
    CHECK(*Monomial::from_string("yxy").xy_index() == 0b101);
    CHECK_FALSE(Monomial::from_string("xz").xy_index());
}

TEST_CASE("ordering is by length, then lexicographic") {
    CHECK(Monomial::from_string("z") < Monomial::from_string("xx"));
    CHECK(Monomial::from_string("xy") < Monomial::from_string("yx"));
}

TEST_CASE("polynomial text round-trips") {
    for (const char* t : {"1*x", "1*xy + 1*yx", "2*x + -1/3*yzx", "0"}) {
        const auto p = Poly<Rational>::parse(t);
        CHECK(Poly<Rational>::parse(p.to_string()) == p);
    }
    CHECK(Poly<Rational>::parse("1*xy + 1*yx").to_string() == "1*xy + 1*yx");
    CHECK_THROWS(Poly<Rational>::parse("1*xq"));
}

TEST_CASE("w-words have binomially many terms and match the expansion") {
    const std::size_t binom8[] = {1, 8, 28, 56, 70, 56, 28, 8, 1};
    for (std::size_t i = 0; i <= 8; ++i) CHECK(w_poly<Rational>(8, i).terms().size() == binom8[i]);
    const auto ex = expand_binomial<Rational>(3);
    REQUIRE(ex.size() == 9);
    // Coefficient of X^i collects the words with i letters y.
    for (std::size_t i = 0; i <= 8; ++i) CHECK(ex[i] == w_poly<Rational>(8, 8 - i));
    CHECK_THROWS_AS(w_poly<Rational>(32, 1), CapExceeded);
}

TEST_CASE("multiplication concatenates and distributes") {
    const auto f = Poly<Rational>::parse("1*x + 1*y");
    const auto g = f * f;
    CHECK(g.to_string() == "1*xx + 1*xy + 1*yx + 1*yy");
    CHECK(f.pow(3).component(3).terms().size() == 8);
}

}
