#include "doctest.h"

#include "radalg/field.hpp"

using namespace radalg;

TEST_SUITE("field") {

TEST_CASE("rationals reduce and round-trip through text") {
    const auto a = Rational::parse("-6/4");
    CHECK(a.to_string() == "-3/2");
    CHECK(Rational::parse(a.to_string()) == a);
    CHECK((a * a.inverse()).to_string() == "1");
    CHECK((Rational::parse("1/3") + Rational::parse("1/6")).to_string() == "1/2");
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational{}.inverse());
}

TEST_CASE("GF(p) arithmetic agrees with integer arithmetic mod p") {
    ModulusScope scope(7);
    for (std::uint32_t a = 0; a < 7; ++a)
        for (std::uint32_t b = 0; b < 7; ++b) {
            CHECK((ModP::nth(a) * ModP::nth(b)).to_string() == std::to_string(a * b % 7));
            CHECK((ModP::nth(a) - ModP::nth(b)).to_string() == std::to_string((a + 7 - b) % 7));
        }
    for (std::uint32_t a = 1; a < 7; ++a) CHECK(ModP::nth(a) * ModP::nth(a).inverse() == one<ModP>());
    CHECK(ModP::parse("-1").to_string() == "6");
    CHECK(*ModP::cardinality() == 7);
}

TEST_CASE("modulus scope restores the previous modulus") {
    const auto before = ModP::modulus();
    {
        ModulusScope scope(5);
        CHECK(ModP::field_name() == "gf5");
    }
    CHECK(ModP::modulus() == before);
}

}
