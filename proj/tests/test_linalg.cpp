#include "doctest.h"

#include <random>
#include <set>

#include "radalg/field.hpp"
#include "radalg/linalg.hpp"

using namespace radalg;

namespace {

// Number of distinct vectors in the GF(3)-span, by listing all combinations.
std::size_t span_size_gf3(const std::vector<Vector<ModP>>& vs, std::size_t dim) {
    std::set<std::vector<std::uint32_t>> seen;
    std::size_t combos = 1;
    for (std::size_t k = 0; k < vs.size(); ++k) combos *= 3;
    for (std::size_t c = 0; c < combos; ++c) {
        Vector<ModP> acc(dim);
        std::size_t r = c;
        for (const auto& v : vs) {
            axpy(acc, ModP::nth(r % 3), v);
            r /= 3;
        }
        std::vector<std::uint32_t> key;
        for (const auto& s : acc) key.push_back(static_cast<std::uint32_t>(std::stoul(s.to_string())));
        seen.insert(key);
    }
    return seen.size();
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rank matches the size of the span over GF(3)") {
    ModulusScope scope(3);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t dim = 1 + rng() % 5, count = rng() % 6;
        std::vector<Vector<ModP>> vs;
        for (std::size_t k = 0; k < count; ++k) {
            Vector<ModP> v(dim);
            for (auto& s : v) s = ModP::nth(rng() % 3);
            vs.push_back(v);
        }
        std::size_t expected = 1, size = span_size_gf3(vs, dim);
        std::size_t r = 0;
        while (expected < size) {
            expected *= 3;
            ++r;
        }
        CHECK(rank_of<ModP>(dim, vs) == r);
    }
}

TEST_CASE("reduced echelon form is canonical") {
    using Q = Rational;
    const auto q = [](const char* s) { return Q::parse(s); };
    const std::vector<Vector<Q>> a{{q("1"), q("2"), q("3")}, {q("0"), q("1"), q("1")}};
    const std::vector<Vector<Q>> b{{q("1"), q("3"), q("4")}, {q("2"), q("4"), q("6")}};
    CHECK(span_of<Q>(3, a) == span_of<Q>(3, b));
    CHECK(span_of<Q>(3, a).contains({q("3"), q("7"), q("10")}));
    CHECK_FALSE(span_of<Q>(3, a).contains({q("0"), q("0"), q("1")}));
}

TEST_CASE("solve_combination recovers coefficients") {
    using Q = Rational;
    const auto q = [](const char* s) { return Q::parse(s); };
    const std::vector<Vector<Q>> gens{{q("1"), q("1"), q("0")}, {q("0"), q("1"), q("1")}};
    const auto c = solve_combination<Q>(3, gens, {q("2"), q("1/2"), q("-3/2")});
    REQUIRE(c);
    CHECK((*c)[0] == q("2"));
    CHECK((*c)[1] == q("-3/2"));
    CHECK_FALSE(solve_combination<Q>(3, gens, {q("1"), q("0"), q("0")}));
}

TEST_CASE("greedy avoiding subspace has codimension two and misses the avoided plane") {
    ModulusScope scope(2);
    const std::size_t dim = 6;
    std::vector<Vector<ModP>> units;
    for (std::size_t e = 0; e < dim; ++e) units.push_back(unit_vector<ModP>(dim, e));
    Vector<ModP> a(dim), b(dim);
    a[0] = a[3] = one<ModP>();
    b[1] = b[3] = b[5] = one<ModP>();
    const std::vector<Vector<ModP>> must{unit_vector<ModP>(dim, 2)};
    const auto g = greedy_max_avoiding<ModP>(units, must, {a, b}, RowBasis<ModP>(dim));
    CHECK(g.rank() == dim - 2);
    RowBasis<ModP> probe = g;
    CHECK(probe.insert(a));
    CHECK(probe.insert(b));
    CHECK(g.contains(must[0]));

    // The coordinate fast path selects the same subspace.
    const auto fast = greedy_max_avoiding_coordinates<ModP>(dim, must, {a, b});
    CHECK(fast.to_row_basis() == g);
    CHECK(fast.kept.size() == 2);
}

}
