// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "radalg/enumeration.hpp"
#include "radalg/field.hpp"
#include "radalg/quotient.hpp"
#include "radalg/state_io.hpp"
#include "radalg/verifier.hpp"

using namespace radalg;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome from_report(const Report& r) {
    for (const auto& c : r.checks())
        if (!c.pass) return {false, c.name + " " + c.counterexample.dump()};
    return {true, std::to_string(r.checks().size()) + " checks"};
}

template <FieldScalar S>
Tower<S> tower(const char* spec, std::uint64_t depth) {
    Tower<S> t(Schedule::parse(spec));
    t.build_to(depth);
    return t;
}

template <FieldScalar S>
Report oracle_report(const Tower<S>& t) {
    Report r = check_projection_agreement(t, build_oracle<S>(t.schedule(), 3));
    r.merge(check_projection_agreement(t, build_oracle<S>(t.schedule(), 2, OracleOptions{3, 256, false, false})));
    return r;
}

// 1. Recursive projection equals the explicit oracle on every word.
template <FieldScalar S>
Outcome oracle_equivalence() {
    Report r;
    for (const char* spec : {"trivial", "windows:(2,5)"}) r.merge(oracle_report(tower<S>(spec, 3)));
    return from_report(r);
}

const std::pair<const char*, std::uint64_t> configurations[] = {
    {"trivial", 16}, {"windows:(3,8)", 14}, {"windows:(2,5);(3,12)", 14}};

// 2. Structural conditions at every level.
template <FieldScalar S>
Outcome conditions() {
    Report r;
    for (const auto& [spec, depth] : configurations) {
        const auto t = tower<S>(spec, depth);
        r.merge(check_conditions(t));
        r.add(check_case3_dual_route(t));
    }
    return from_report(r);
}

// 3. Dimension profile across the window (3,8).
Outcome window_profile() {
    const auto t = tower<ModP>("windows:(3,8)", 10);
    std::ostringstream os;
    for (std::uint64_t n = 4; n <= 8; ++n) os << (n > 4 ? "," : "") << t.level(n).dim;
    return {os.str() == "2,4,16,256,2", "dims at levels 4..8: " + os.str()};
}

// 4. Nonzero projected w-words of rank >= 2 at every level up to 16.
Outcome nonnil() {
    const auto w = nonnil_witness(tower<ModP>("trivial", 16));
    const bool ok = w.levels.size() == 17 && w.all_nonempty && w.all_rank_two && w.certified_log_exponent == 14;
    return {ok, "certified exponent 2^" + std::to_string(w.certified_log_exponent.value_or(0))};
}

// 5. Rank lemmas everywhere and congruences against explicit expansion.
template <FieldScalar S>
Outcome lemmas() {
    Report r;
    for (const auto& [spec, depth] : configurations) r.merge(check_lemmas(tower<S>(spec, depth)));
    for (const char* spec : {"trivial", "windows:(2,5)", "windows:(2,4)"}) {
        const auto o = oracle_report(tower<S>(spec, 3));
        for (const auto& c : o.checks())
            if (c.name.find("congruence") != std::string::npos) r.add(c);
    }
    return from_report(r);
}

// 6. Membership spot values; the witness is re-verified by fresh expansion.
template <FieldScalar S>
Outcome membership() {
    const auto t = tower<S>("trivial", 4);
    const auto z = e_member(t, HomogPoly<S>::monomial(Monomial::from_string("z")));
    const auto zz = e_member(t, HomogPoly<S>::monomial(Monomial::from_string("zz")));
    const auto f = w_poly<S>(2, 1);
    const auto w = e_member(t, f);
    if (z.verdict != Verdict::in_ideal || zz.verdict != Verdict::in_ideal) return {false, "z or z^2 not in_ideal"};
    if (w.verdict != Verdict::not_in_ideal || !w.witness) return {false, "w(2,1) not refuted"};
    const auto border = multiply(multiply(HomogPoly<S>::monomial(w.witness->u), f), HomogPoly<S>::monomial(w.witness->v));
    const auto p = t.pair_project_poly(border);
    return {p == w.witness->projection && !is_zero(p),
            "witness u=" + w.witness->u.to_string() + " v=" + w.witness->v.to_string()};
}

// 7. Growth table, bound and repeatability.
Outcome growth() {
    const auto t = tower<ModP>("trivial", 10);
    const auto a = growth_table(t, 10, 10, 4);
    const auto b = growth_table(t, 10, 10, 1);
    const auto r = check_growth(t, a, 4, 6);
    bool same = a.rows.size() == b.rows.size();
    for (std::size_t k = 0; same && k < a.rows.size(); ++k) same = a.rows[k].cumulative == b.rows[k].cumulative;
    std::ostringstream os;
    for (const auto& row : a.rows) os << (row.d > 1 ? "," : "") << row.cumulative;
    if (!same) return {false, "tables differ between runs"};
    auto o = from_report(r);
    o.detail = "cumulative " + os.str() + "; " + o.detail;
    return o;
}

// 8. Telescoping identity for truncated quasi-inverses.
Outcome telescoping() {
    std::mt19937_64 rng(8);
    const auto random_word = [&](std::size_t len) {
        Monomial m;
        for (std::size_t k = 0; k < len; ++k) m.push_back(static_cast<Letter>(rng() % 3));
        return m;
    };
    for (int trial = 0; trial < 20; ++trial) {
        Poly<Rational> f;
        for (int k = 0; k < 4; ++k) {
            const auto c = Rational::parse(std::to_string(static_cast<int>(rng() % 9) - 4) + "/" + std::to_string(1 + rng() % 4));
            f += Poly<Rational>(HomogPoly<Rational>::monomial(random_word(1 + rng() % 3), c));
        }
        const std::size_t D = 1 + rng() % 8;
        auto expected = f.pow(D + 1);
        if (D % 2 == 1) expected = -expected;
        if (quasi_residual(f, truncated_quasi_inverse(f, D)) != expected)
            return {false, "f = " + f.to_string() + ", D = " + std::to_string(D)};
    }
    return {true, "20 random cases"};
}

// 9. Enumerator: degree inequality, injectivity, and a surjectivity probe.
Outcome enumerator() {
    const PolyEnumerator<Rational> q(100000);
    std::set<std::string> seen;
    for (std::uint64_t i = 1; i <= 100000; ++i) {
        const auto f = q.enumerate_f(i);
        if (!f) continue;
        if (i <= *degree_bound(f->degree())) return {false, "bound fails at " + std::to_string(i)};
        if (!seen.insert(f->to_string()).second) return {false, "repeat at " + std::to_string(i)};
    }
    ModulusScope scope(2);
    const PolyEnumerator<ModP> g(1000);
    std::size_t found = 0;
    for (const char* t : {"1*x", "1*y", "1*z", "1*x + 1*y", "1*x + 1*z", "1*y + 1*z", "1*x + 1*y + 1*z"})
        found += g.index_of(Poly<ModP>::parse(t)).has_value();
    return {found == 7, std::to_string(seen.size()) + " rational polynomials placed; " + std::to_string(found) +
                            "/7 linear GF(2) polynomials below 1000"};
}

// 10. Identical configurations give identical state and reports.
Outcome determinism() {
    const auto once = [] {
        const auto t = tower<Rational>("windows:(2,5);(3,12)", 14);
        std::ostringstream os;
        save_state(os, t);
        Report r = check_conditions(t, VerifyOptions{5, 16, 12});
        r.merge(check_lemmas(t));
        os << r.to_json().dump();
        return os.str();
    };
    const auto a = once(), b = once();
    return {a == b, std::to_string(a.size()) + " bytes compared"};
}

}  // namespace

int main() {
    ModulusScope scope(2);
    int failures = 0;
    const auto run = [&](int id, const std::string& what, const std::function<Outcome()>& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << std::setw(2) << id << ": " << what << " [" << o.detail
                  << "] (" << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
    };
    const auto both = [](Outcome a, Outcome b) {
        return Outcome{a.pass && b.pass, "Q: " + a.detail + "; GF(2): " + b.detail};
    };
    run(1, "recursive projection matches the explicit oracle", [&] { return both(oracle_equivalence<Rational>(), oracle_equivalence<ModP>()); });
    run(2, "construction conditions at every level", [&] { return both(conditions<Rational>(), conditions<ModP>()); });
    run(3, "dimension profile across window (3,8)", window_profile);
    run(4, "non-nilpotency witness up to level 16", nonnil);
    run(5, "rank lemmas and congruences", [&] { return both(lemmas<Rational>(), lemmas<ModP>()); });
    run(6, "membership spot values", [&] { return both(membership<Rational>(), membership<ModP>()); });
    run(7, "growth bound over GF(2)", growth);
    run(8, "telescoping identity", telescoping);
    run(9, "polynomial enumeration", enumerator);
    run(10, "determinism", determinism);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
