#pragma once

// Executable checks of the construction: structural conditions at every
// level, the rank lemmas, and an explicit brute-force oracle that rebuilds
// U(2^n) and V(2^n) as subspaces of the full word space for small n.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "radalg/construction.hpp"
#include "radalg/errors.hpp"
#include "radalg/linalg.hpp"
#include "radalg/poly.hpp"
#include "radalg/quotient.hpp"
#include "radalg/report.hpp"
#include "radalg/schedule.hpp"
#include "radalg/sparse.hpp"

namespace radalg {

// ---------------------------------------------------------------------------
// Explicit oracle. Words of length len over an alphabet of size A (x, y and
// optionally z) are indexed by their base-A digits, most significant first.

struct OracleOptions {
    unsigned alphabet = 2;
    std::size_t max_ambient = 256;
    bool swap_case2 = false;     // test fixture: opposite m1/m2 choice
    bool reverse_case1 = false;  // test fixture: reversed product order
};

template <FieldScalar S>
struct OracleLevel {
    std::uint64_t n = 0;
    std::optional<StepCase> produced_by;
    std::size_t length = 1;
    std::size_t ambient = 0;
    RowBasis<S> U;
    RowBasis<S> T;                    // A U + U A of the previous level; empty at level 0
    std::vector<std::size_t> vwords;  // word indices of the V basis, in basis order
    std::optional<std::pair<std::uint64_t, std::uint64_t>> case2_slots;
};

template <FieldScalar S>
struct OracleState {
    unsigned alphabet = 2;
    std::vector<OracleLevel<S>> levels;
};

inline Monomial oracle_word(std::size_t index, std::size_t length, unsigned alphabet) {
    std::vector<Letter> letters(length);
    for (std::size_t k = length; k-- > 0;) {
        letters[k] = static_cast<Letter>(index % alphabet);
        index /= alphabet;
    }
    Monomial m;
    for (auto l : letters) m.push_back(l);
    return m;
}

inline std::size_t oracle_index(const Monomial& m, unsigned alphabet) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < m.size(); ++k) idx = idx * alphabet + static_cast<std::size_t>(m[k]);
    return idx;
}

namespace detail {

inline std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t k = 0; k < e; ++k) r *= b;
    return r;
}

// The sum of all {x,y}-words of the given length with exactly i letters x.
template <FieldScalar S>
Vector<S> oracle_w(std::size_t length, std::size_t i, unsigned alphabet) {
    const std::size_t amb = ipow(alphabet, length);
    Vector<S> v(amb);
    for (std::size_t w = 0; w < amb; ++w) {
        std::size_t x = 0, z = 0, r = w;
        for (std::size_t k = 0; k < length; ++k, r /= alphabet) {
            x += r % alphabet == 0;
            z += r % alphabet == 2;
        }
        if (z == 0 && x == i) v[w] = one<S>();
    }
    return v;
}

// Coordinates of v modulo U in the basis given by the V words.
template <FieldScalar S>
std::optional<std::vector<S>> oracle_coordinates(const OracleLevel<S>& l, const Vector<S>& v) {
    std::vector<Vector<S>> gens;
    for (auto w : l.vwords) gens.push_back(l.U.residual(unit_vector<S>(l.ambient, w)));
    return solve_combination<S>(l.ambient, gens, l.U.residual(v));
}

template <FieldScalar S>
Vector<S> from_poly(const HomogPoly<S>& f, unsigned alphabet) {
    Vector<S> v(ipow(alphabet, f.degree()));
    for (const auto& [m, c] : f.terms()) v[oracle_index(m, alphabet)] += c;
    return v;
}

}  // namespace detail

template <FieldScalar S>
OracleState<S> build_oracle(const Schedule& sched, std::uint64_t depth, const OracleOptions& opt = {}) {
    if (opt.alphabet != 2 && opt.alphabet != 3) throw std::invalid_argument("oracle alphabet must be 2 or 3");
    OracleState<S> st;
    st.alphabet = opt.alphabet;
    const unsigned A = opt.alphabet;
    {
        OracleLevel<S> l0;
        l0.ambient = A;
        l0.U = RowBasis<S>(A);
        l0.T = RowBasis<S>(A);
        if (A == 3) l0.U.insert(unit_vector<S>(3, 2));
        l0.vwords = {0, 1};
        st.levels.push_back(std::move(l0));
    }
    for (std::uint64_t n = 0; n < depth; ++n) {
        const auto& prev = st.levels.back();
        const std::size_t amb = prev.ambient;
        if (amb > opt.max_ambient / amb) {
            const double mb = static_cast<double>(amb) * amb * amb * amb * sizeof(S) / 1e6;
            throw CapExceeded("explicit oracle at level " + std::to_string(n + 1) + " needs ambient dimension " +
                              std::to_string(amb * amb) + " (about " + std::to_string(static_cast<long long>(mb)) +
                              " MB for a dense basis); the cap is " + std::to_string(opt.max_ambient));
        }
        OracleLevel<S> next;
        next.n = n + 1;
        next.length = prev.length * 2;
        next.ambient = amb * amb;
        next.T = RowBasis<S>(next.ambient);
        for (const auto& u : prev.U.rows())
            for (std::size_t a = 0; a < amb; ++a) {
                Vector<S> left(next.ambient), right(next.ambient);
                for (std::size_t p = 0; p < amb; ++p) {
                    left[p * amb + a] = u[p];
                    right[a * amb + p] = u[p];
                }
                next.T.insert(left);
                next.T.insert(right);
            }
        next.U = next.T;
        const std::size_t d = prev.vwords.size();
        const auto c = sched.case_of(n);
        next.produced_by = c;
        if (c == StepCase::case1) {
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) next.vwords.push_back(prev.vwords[a] * amb + prev.vwords[b]);
            if (opt.reverse_case1) std::reverse(next.vwords.begin(), next.vwords.end());
        } else if (c == StepCase::case2) {
            if (d != 2) throw InvariantViolation("oracle: Case 2 needs dim V = 2");
            std::optional<std::uint64_t> i, j;
            Vector<S> wi;
            for (std::size_t k = 0; k <= prev.length && !j; ++k) {
                auto w = detail::oracle_w<S>(prev.length, k, A);
                if (!i) {
                    if (prev.U.contains(w)) continue;
                    i = k;
                    wi = std::move(w);
                    continue;
                }
                RowBasis<S> probe = prev.U;
                probe.insert(wi);
                if (!probe.contains(w)) j = k;
            }
            if (!i || !j) throw InvariantViolation("oracle: w-words have rank below 2 at level " + std::to_string(n));
            const auto coords = detail::oracle_coordinates(prev, wi);
            std::size_t m1 = (*coords)[0].is_zero() ? 1 : 0;
            if (opt.swap_case2) m1 = 1 - m1;
            const std::size_t m2 = 1 - m1;
            for (std::size_t b = 0; b < d; ++b)
                next.U.insert(unit_vector<S>(next.ambient, prev.vwords[m2] * amb + prev.vwords[b]));
            next.vwords = {prev.vwords[m1] * amb + prev.vwords[m1], prev.vwords[m1] * amb + prev.vwords[m2]};
            next.case2_slots = std::make_pair(*i, *j);
        } else {
            throw CapExceeded("the window exit at level " + std::to_string(n) +
                              " is beyond the explicit oracle; see the Case 3 dual-route check");
        }
        st.levels.push_back(std::move(next));
    }
    return st;
}

/// Self-checks of the oracle (complement, absorption, z, congruences) and
/// word-by-word agreement with the recursive projection.
template <FieldScalar S>
Report check_projection_agreement(const Tower<S>& tower, const OracleState<S>& oracle) {
    const unsigned A = oracle.alphabet;
    const std::string tag = A == 3 ? "[xyz]" : "[xy]";
    CheckResult labels{"oracle_basis" + tag, "engine basis monomials equal the oracle's V basis, in order"};
    CheckResult agree{"oracle_projection" + tag, "recursive projection equals explicit reduction modulo U for every word"};
    CheckResult compl_{"oracle_complement" + tag, "U + V = A and U ∩ V = 0 in explicit coordinates"};
    CheckResult absorb{"oracle_absorption" + tag, "A U + U A lies in the next U"};
    CheckResult rank9{"oracle_w_rank" + tag, "w-words have rank >= 2 modulo U"};
    CheckResult zk{"oracle_z_in_U" + tag, "every word containing z lies in U"};
    CheckResult sq{"oracle_square_congruence" + tag,
                   "w(2^(n+1),2i) - w(2^n,i) w(2^n,i) lies in T at Case 2 levels"};
    CheckResult cr{"oracle_cross_congruence" + tag,
                   "w(2^(n+1),i+j) - w_i w_j - w_j w_i lies in T + K w_i w_i at Case 2 levels"};

    for (const auto& l : oracle.levels) {
        if (l.n > tower.depth()) break;
        // Basis monomials.
        ++labels.instances;
        std::vector<std::string> engine_words, oracle_words;
        for (std::size_t a = 0; a < tower.level(l.n).dim; ++a)
            engine_words.push_back(tower.unfold(l.n, static_cast<std::uint32_t>(a)).to_string());
        for (auto w : l.vwords) oracle_words.push_back(oracle_word(w, l.length, A).to_string());
        if (engine_words != oracle_words)
            labels.fail(Json{{"level", l.n}, {"engine", engine_words}, {"oracle", oracle_words}});

        // Complement.
        ++compl_.instances;
        RowBasis<S> all = l.U;
        for (auto w : l.vwords) all.insert(unit_vector<S>(l.ambient, w));
        if (all.rank() != l.ambient || l.U.rank() + l.vwords.size() != l.ambient)
            compl_.fail(Json{{"level", l.n}, {"rank_U", l.U.rank()}, {"dim_V", l.vwords.size()}, {"ambient", l.ambient}});

        // Absorption into this level's U.
        if (l.n > 0) {
            ++absorb.instances;
            for (const auto& t : l.T.rows())
                if (!l.U.contains(t)) {
                    absorb.fail(Json{{"level", l.n}, {"generator", to_json(t)}});
                    break;
                }
        }

        // Rank of the w-family.
        ++rank9.instances;
        RowBasis<S> wr(l.ambient);
        for (std::size_t i = 0; i <= l.length; ++i) wr.insert(l.U.residual(detail::oracle_w<S>(l.length, i, A)));
        if (wr.rank() < 2) rank9.fail(Json{{"level", l.n}, {"rank", wr.rank()}});

        // Word-by-word projection.
        std::vector<Vector<S>> gens;
        for (auto w : l.vwords) gens.push_back(l.U.residual(unit_vector<S>(l.ambient, w)));
        for (std::size_t w = 0; w < l.ambient; ++w) {
            const auto word = oracle_word(w, l.length, A);
            ++agree.instances;
            const auto r = l.U.residual(unit_vector<S>(l.ambient, w));
            const auto coords = solve_combination<S>(l.ambient, gens, r);
            const auto engine = tower.project(word);
            if (!coords || *coords != engine)
                agree.fail(Json{{"level", l.n},
                                {"word", word.to_string()},
                                {"engine", to_json(engine)},
                                {"oracle", coords ? to_json(*coords) : Json("not in V + U")}});
            if (word.has_z()) {
                ++zk.instances;
                if (!is_zero(r)) zk.fail(Json{{"level", l.n}, {"word", word.to_string()}});
            }
        }
    }

    // Congruences at Case 2 levels with both ends inside the oracle.
    for (std::size_t k = 1; k < oracle.levels.size(); ++k) {
        const auto& next = oracle.levels[k];
        if (next.produced_by != StepCase::case2 || !next.case2_slots) continue;
        const auto& prev = oracle.levels[k - 1];
        const auto [i, j] = *next.case2_slots;
        const auto wi = w_poly<S>(prev.length, i, 64);
        const auto wj = w_poly<S>(prev.length, j, 64);
        const auto lhs2i = detail::from_poly(w_poly<S>(next.length, 2 * i, 64), A);
        const auto sq_prod = detail::from_poly(multiply(wi, wi), A);
        ++sq.instances;
        Vector<S> diff = lhs2i;
        axpy(diff, -one<S>(), sq_prod);
        if (!next.T.contains(diff)) sq.fail(Json{{"level", prev.n}, {"i", i}});

        ++cr.instances;
        Vector<S> d2 = detail::from_poly(w_poly<S>(next.length, i + j, 64), A);
        axpy(d2, -one<S>(), detail::from_poly(multiply(wi, wj), A));
        axpy(d2, -one<S>(), detail::from_poly(multiply(wj, wi), A));
        RowBasis<S> tq = next.T;
        tq.insert(sq_prod);
        if (!tq.contains(d2)) cr.fail(Json{{"level", prev.n}, {"i", i}, {"j", j}});
    }

    Report r;
    for (auto* c : {&labels, &agree, &compl_, &absorb, &rank9}) r.add(std::move(*c));
    if (A == 3) r.add(std::move(zk));
    r.add(std::move(sq));
    r.add(std::move(cr));
    return r;
}

// ---------------------------------------------------------------------------
// Structural conditions on the recursive data.

struct VerifyOptions {
    std::uint64_t seed = 0;
    std::size_t samples = 16;
    std::uint64_t sample_depth = 12;  // random-word checks stop here
};

template <FieldScalar S>
std::size_t wproj_rank(const LevelData<S>& l) {
    RowBasis<S> b(l.dim);
    for (auto i : l.nonzero_slots) b.insert(l.wproj_vector(i));
    return b.rank();
}

namespace detail {

inline Monomial random_word(std::mt19937_64& rng, std::size_t len, bool with_z) {
    Monomial m;
    for (std::size_t k = 0; k < len; ++k) m.push_back(static_cast<Letter>(rng() % (with_z ? 3 : 2)));
    return m;
}

}  // namespace detail

template <FieldScalar S>
Report check_conditions(const Tower<S>& tower, const VerifyOptions& opt = {}) {
    const auto& sched = tower.schedule();
    CheckResult c1{"v_dim_outside_windows", "dim V(2^n) = 2 for n outside S"};
    CheckResult c2{"v_dim_inside_windows", "dim V(2^(e-i-1+j)) = 2^(2^j) for j = 1..i-1"};
    CheckResult c3{"v_spanned_by_monomials", "basis labels are distinct pairs of parent basis monomials"};
    CheckResult c4{"provider_absorbed", "F-provider components project to zero at the window exit"};
    CheckResult c5{"complement", "each basis monomial projects to its own unit vector"};
    CheckResult c6{"product_absorption", "projection of uv is mu applied to the projections of u and v"};
    CheckResult c7{"nested_products", "every basis monomial is a product of two parent basis monomials"};
    CheckResult c8{"case2_m2_kill", "mu(m2, b) = 0 for every b at Case 2 levels"};
    CheckResult c1i{"case1_identity", "Case 1 squares the dimension with the identity table"};
    CheckResult c9{"w_rank_bound", "rank of the projected w-words >= 2 + (run of S-levels ending at n) - 1"};
    CheckResult c10{"z_killed", "words containing z project to zero"};

    std::mt19937_64 rng(opt.seed);
    for (const auto& l : tower.levels()) {
        const auto n = l.n;
        if (!sched.in_S(n)) {
            ++c1.instances;
            if (l.dim != 2) c1.fail(Json{{"level", n}, {"dim", l.dim}});
        }
        if (const auto w = sched.window_containing(n)) {
            const auto j = n - w->first();
            if (j >= 1 && j + 1 <= w->i) {
                ++c2.instances;
                const std::size_t want = std::size_t{1} << (std::size_t{1} << j);
                if (l.dim != want) c2.fail(Json{{"level", n}, {"dim", l.dim}, {"expected", want}});
            }
        }
        // Condition on the w-rank.
        ++c9.instances;
        const auto run = sched.run_length(n);
        const std::size_t need = 2 + (run > 0 ? run - 1 : 0);
        const auto rank = wproj_rank(l);
        if (rank < need) c9.fail(Json{{"level", n}, {"rank", rank}, {"required", need}});

        if (n == 0) {
            ++c10.instances;
            if (!is_zero(tower.project(Monomial::from_string("z")))) c10.fail(Json{{"level", 0}, {"word", "z"}});
            continue;
        }
        const auto& prev = tower.level(n - 1);
        ++c3.instances;
        ++c7.instances;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
        for (std::size_t a = 0; a < l.vbasis.size(); ++a) {
            const auto& lab = l.vbasis[a];
            if (lab.left >= prev.dim || lab.right >= prev.dim)
                c7.fail(Json{{"level", n}, {"index", a}, {"left", lab.left}, {"right", lab.right}});
            seen.emplace_back(lab.left, lab.right);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) c3.fail(Json{{"level", n}, {"reason", "repeated label"}});

        ++c5.instances;
        for (std::size_t a = 0; a < l.vbasis.size(); ++a) {
            const auto& lab = l.vbasis[a];
            if (lab.left >= prev.dim || lab.right >= prev.dim) continue;
            const SparseVector<S> unit{{static_cast<std::uint32_t>(a), one<S>()}};
            if (l.mu.at(lab.left, lab.right) != unit) {
                c5.fail(Json{{"level", n}, {"index", a}});
                break;
            }
        }
        if (n <= opt.sample_depth && l.dim <= 16) {
            for (std::size_t a = 0; a < l.dim; ++a)
                if (tower.project(tower.unfold(n, static_cast<std::uint32_t>(a))) != unit_vector<S>(l.dim, a)) {
                    c5.fail(Json{{"level", n}, {"index", a}, {"reason", "unfolded monomial does not project to its unit vector"}});
                    break;
                }
        }

        if (l.produced_by == StepCase::case2) {
            ++c8.instances;
            if (!l.m2_index || !l.m1_index || *l.m1_index == *l.m2_index) {
                c8.fail(Json{{"level", n}, {"reason", "m1/m2 not recorded"}});
            } else {
                for (std::size_t b = 0; b < prev.dim; ++b)
                    if (!l.mu.at(*l.m2_index, b).empty()) {
                        c8.fail(Json{{"level", n}, {"b", b}});
                        break;
                    }
            }
        }
        if (l.produced_by == StepCase::case1) {
            ++c1i.instances;
            if (l.dim != prev.dim * prev.dim || l.mu != BilinearTable<S>::identity(prev.dim))
                c1i.fail(Json{{"level", n}, {"dim", l.dim}, {"parent_dim", prev.dim}});
        }
        if (l.produced_by == StepCase::case3) {
            for (std::size_t k = 0; k < l.provider_vectors.size(); ++k) {
                ++c4.instances;
                const auto img = mu_apply_tensor<S>(l.mu, l.provider_vectors[k]);
                if (!is_zero(img)) c4.fail(Json{{"level", n}, {"component", k}, {"image", to_json(img)}});
            }
        }
        if (n <= opt.sample_depth) {
            const std::size_t half = std::size_t{1} << (n - 1);
            for (std::size_t s = 0; s < opt.samples; ++s) {
                const auto u = detail::random_word(rng, half, s % 4 == 3);
                const auto v = detail::random_word(rng, half, false);
                ++c6.instances;
                const auto lhs = tower.project(u * v);
                const auto rhs = mu_apply<S>(l.mu, tower.project(u), tower.project(v));
                if (lhs != rhs) c6.fail(Json{{"level", n}, {"u", u.to_string()}, {"v", v.to_string()}});
                auto zw = detail::random_word(rng, 2 * half, true);
                zw = zw.slice(0, 2 * half - 1) * Monomial::from_string("z");
                const auto pos = rng() % (2 * half);
                Monomial moved;
                for (std::size_t k = 0; k < 2 * half; ++k) moved.push_back(k == pos ? Letter::z : zw[k]);
                ++c10.instances;
                if (!is_zero(tower.project(moved))) c10.fail(Json{{"level", n}, {"word", moved.to_string()}});
            }
        }
    }
    Report r;
    for (auto* c : {&c1, &c2, &c3, &c4, &c5, &c6, &c7, &c8, &c1i, &c9, &c10}) r.add(std::move(*c));
    return r;
}

// ---------------------------------------------------------------------------
// Rank lemmas and congruences in V (x) V coordinates.

template <FieldScalar S>
Report check_lemmas(const Tower<S>& tower) {
    CheckResult ext{"extend_rank", "rank of the next W-family modulo T >= rank of the projected w-words + 1"};
    CheckResult c2{"case2_rank", "at Case 2 levels the W-family has rank >= 2 modulo T + m2 V"};
    CheckResult sq{"square_congruence", "slot 2i of the next W-family equals w_i (x) w_i modulo T"};
    CheckResult cr{"cross_congruence", "slot i+j equals w_i (x) w_j + w_j (x) w_i modulo T + K w_i (x) w_i"};

    for (std::uint64_t n = 0; n + 1 <= tower.depth(); ++n) {
        const auto& l = tower.level(n);
        const auto& next = tower.level(n + 1);
        const auto conv = convolve_tensor(l);
        ++ext.instances;
        SparseRowBasis<S> sb;
        for (const auto& [k, v] : conv) sb.insert(v);
        const auto r = wproj_rank(l);
        if (sb.rank() < r + 1) ext.fail(Json{{"level", n}, {"rank", r}, {"next_rank_mod_T", sb.rank()}});

        if (next.produced_by != StepCase::case2) continue;
        const std::size_t d = l.dim;
        const auto m2 = next.m2_index.value_or(0);
        ++c2.instances;
        SparseRowBasis<S> q;
        for (const auto& [k, v] : conv) {
            SparseVector<S> cut;
            for (const auto& e : v)
                if (e.first / d != m2) cut.push_back(e);
            q.insert(cut);
        }
        if (q.rank() < 2) c2.fail(Json{{"level", n}, {"rank", q.rank()}});

        if (!next.selected_slots) continue;
        const auto [i, j] = *next.selected_slots;
        const auto slot = [&](std::uint64_t k) {
            for (const auto& [s, v] : conv)
                if (s == k) return to_dense(v, d * d);
            return Vector<S>(d * d);
        };
        const auto wi = l.wproj(i);
        const auto wj = l.wproj(j);
        const auto ii = tensor<S>(wi, wi);
        ++sq.instances;
        if (slot(2 * i) != ii) sq.fail(Json{{"level", n}, {"i", i}, {"slot", to_json(slot(2 * i))}, {"square", to_json(ii)}});
        ++cr.instances;
        auto diff = slot(i + j);
        axpy(diff, -one<S>(), tensor<S>(wi, wj));
        axpy(diff, -one<S>(), tensor<S>(wj, wi));
        RowBasis<S> span_ii(d * d);
        span_ii.insert(ii);
        if (!span_ii.contains(diff)) cr.fail(Json{{"level", n}, {"i", i}, {"j", j}, {"difference", to_json(diff)}});
    }
    Report rep;
    for (auto* c : {&ext, &c2, &sq, &cr}) rep.add(std::move(*c));
    return rep;
}

/// Recomputes every window exit with dense vectors and the general greedy
/// subspace routine, and compares with the stored level.
template <FieldScalar S>
CheckResult check_case3_dual_route(const Tower<S>& tower, std::size_t max_tensor_dim = 4096) {
    CheckResult c{"case3_dual_route", "window exits agree with a dense general-greedy recomputation"};
    for (std::uint64_t n = 0; n + 1 <= tower.depth(); ++n) {
        const auto& next = tower.level(n + 1);
        if (next.produced_by != StepCase::case3) continue;
        const auto& l = tower.level(n);
        const std::size_t d = l.dim, dd = d * d;
        if (dd > max_tensor_dim) continue;
        ++c.instances;
        // Dense W-family by direct double loop over slots.
        const std::size_t slots = 2 * (l.slot_count() - 1) + 1;
        std::vector<Vector<S>> fam(slots, Vector<S>(dd));
        for (std::size_t a = 0; a < l.slot_count(); ++a)
            for (std::size_t b = 0; b < l.slot_count(); ++b) {
                const auto t = tensor<S>(l.wproj(a), l.wproj(b));
                for (std::size_t e = 0; e < dd; ++e) fam[a + b][e] += t[e];
            }
        RowBasis<S> sel(dd);
        for (const auto& f : next.provider_vectors) sel.insert(f);
        std::vector<std::size_t> chosen;
        for (std::size_t k = 0; k < slots && chosen.size() < 2; ++k)
            if (sel.insert(fam[k])) chosen.push_back(k);
        if (chosen.size() < 2 || !next.selected_slots ||
            *next.selected_slots != std::pair<std::uint64_t, std::uint64_t>(chosen[0], chosen[1])) {
            c.fail(Json{{"level", n}, {"reason", "different w1/w2 selection"}});
            continue;
        }
        std::vector<Vector<S>> cands;
        for (std::size_t e = 0; e < dd; ++e) cands.push_back(unit_vector<S>(dd, e));
        const auto P = greedy_max_avoiding<S>(cands, next.provider_vectors, {fam[chosen[0]], fam[chosen[1]]},
                                              RowBasis<S>(dd));
        if (P.rank() + 2 != dd) {
            c.fail(Json{{"level", n}, {"reason", "P does not have codimension 2"}, {"rank", P.rank()}});
            continue;
        }
        // The stored table must vanish exactly on P and send e_c to its
        // coordinates modulo P along the chosen monomials.
        bool ok = true;
        for (const auto& row : P.rows())
            if (!is_zero(mu_apply_tensor<S>(next.mu, row))) ok = false;
        std::vector<std::size_t> picks;
        {
            RowBasis<S> probe = P;
            for (std::size_t e = 0; e < dd && picks.size() < 2; ++e)
                if (probe.insert(unit_vector<S>(dd, e))) picks.push_back(e);
        }
        const auto label = [&](std::size_t e) { return BasisLabel{static_cast<std::uint32_t>(e / d), static_cast<std::uint32_t>(e % d)}; };
        if (picks.size() != 2 || next.vbasis != std::vector<BasisLabel>{label(picks[0]), label(picks[1])}) ok = false;
        for (std::size_t e = 0; e < dd && ok; ++e) {
            const auto img = mu_apply_tensor<S>(next.mu, unit_vector<S>(dd, e));
            Vector<S> rest = unit_vector<S>(dd, e);
            axpy(rest, -img[0], unit_vector<S>(dd, picks[0]));
            axpy(rest, -img[1], unit_vector<S>(dd, picks[1]));
            if (!P.contains(rest)) ok = false;
        }
        for (std::size_t k = 0; k < slots && ok; ++k)
            if (mu_apply_tensor<S>(next.mu, fam[k]) != next.wproj_vector(k)) ok = false;
        if (!ok) c.fail(Json{{"level", n}, {"reason", "stored table or basis differs from the recomputation"}});
    }
    return c;
}

template <FieldScalar S>
Report check_growth(const Tower<S>& tower, const GrowthTable& table, std::uint64_t fit_point = 4,
                    std::uint64_t brute_force_degree = 6) {
    CheckResult one_{"growth_degree_one", "dim P(1) = 2"};
    CheckResult mono{"growth_monotone", "cumulative dimensions are non-decreasing"};
    CheckResult bound{"growth_bound", "cumulative dim <= C n^2 log(n)^3 with C fitted at the fit point"};
    CheckResult brute{"growth_bruteforce", "dim P(d) equals the rank over explicitly enumerated borders"};
    for (const auto& r : table.rows) {
        if (r.d == 1) {
            ++one_.instances;
            if (r.dim != 2) one_.fail(Json{{"d", 1}, {"dim", r.dim}});
        }
        if (r.d <= brute_force_degree) {
            ++brute.instances;
            const auto b = border_functionals_bruteforce(tower, r.d).rank();
            if (b != r.dim) brute.fail(Json{{"d", r.d}, {"dim", r.dim}, {"bruteforce", b}});
        }
    }
    if (table.rows.size() >= fit_point) {
        const auto g = check_growth_bound(table, fit_point);
        mono.instances = bound.instances = table.rows.size();
        if (!g.non_decreasing) mono.fail(Json{{"reason", "decreasing cumulative"}});
        if (!g.bound_holds) bound.fail(Json{{"d", *g.violation}, {"C", static_cast<double>(g.C)}});
    }
    Report rep;
    for (auto* c : {&one_, &mono, &bound, &brute}) rep.add(std::move(*c));
    return rep;
}

}  // namespace radalg
