#pragma once

// Level-by-level construction of the complements V(2^n) of U(2^n). Only the
// V side is stored: basis labels, the table mu giving the V(2^n) coordinates
// of products of two parent basis monomials, and the projected w-words.
// The projection of a word of length 2^n is computed by splitting it at the
// midpoint and combining the two halves through mu.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "radalg/errors.hpp"
#include "radalg/field.hpp"
#include "radalg/linalg.hpp"
#include "radalg/poly.hpp"
#include "radalg/schedule.hpp"
#include "radalg/sparse.hpp"
#include "radalg/word.hpp"

namespace radalg {

/// Level 0: `left` is the letter (x = 0, y = 1). Higher levels: indices of the
/// two parent basis monomials whose product is this basis monomial.
struct BasisLabel {
    std::uint32_t left = 0;
    std::uint32_t right = 0;
    bool operator==(const BasisLabel&) const = default;
};

/// Bilinear map K^in x K^in -> K^out given on pairs of basis vectors.
template <FieldScalar S>
struct BilinearTable {
    std::size_t in_dim = 0;
    std::size_t out_dim = 0;
    std::vector<SparseVector<S>> entries;  // index a * in_dim + b

    const SparseVector<S>& at(std::size_t a, std::size_t b) const { return entries[a * in_dim + b]; }

    static BilinearTable zero(std::size_t in_dim, std::size_t out_dim) {
        return BilinearTable{in_dim, out_dim, std::vector<SparseVector<S>>(in_dim * in_dim)};
    }

    static BilinearTable identity(std::size_t in_dim) {
        auto t = zero(in_dim, in_dim * in_dim);
        for (std::size_t k = 0; k < t.entries.size(); ++k) t.entries[k] = {{static_cast<std::uint32_t>(k), one<S>()}};
        return t;
    }

    bool operator==(const BilinearTable&) const = default;
};

template <FieldScalar S>
Vector<S> mu_apply(const BilinearTable<S>& mu, std::span<const S> u, std::span<const S> v) {
    Vector<S> out(mu.out_dim);
    for (std::size_t p = 0; p < u.size(); ++p) {
        if (u[p].is_zero()) continue;
        for (std::size_t q = 0; q < v.size(); ++q) {
            if (v[q].is_zero()) continue;
            const auto& e = mu.at(p, q);
            if (e.empty()) continue;
            const S c = u[p] * v[q];
            for (const auto& [o, s] : e) out[o] += c * s;
        }
    }
    return out;
}

/// Dense u (x) v with index p * |v| + q.
template <FieldScalar S>
Vector<S> tensor(std::span<const S> u, std::span<const S> v) {
    Vector<S> out(u.size() * v.size());
    for (std::size_t p = 0; p < u.size(); ++p) {
        if (u[p].is_zero()) continue;
        for (std::size_t q = 0; q < v.size(); ++q)
            if (!v[q].is_zero()) out[p * v.size() + q] = u[p] * v[q];
    }
    return out;
}

/// Applies a bilinear table to a vector of V (x) V coordinates.
template <FieldScalar S>
Vector<S> mu_apply_tensor(const BilinearTable<S>& mu, std::span<const S> t) {
    Vector<S> out(mu.out_dim);
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (t[k].is_zero()) continue;
        for (const auto& [o, s] : mu.entries[k]) out[o] += t[k] * s;
    }
    return out;
}

template <FieldScalar S>
struct LevelData {
    std::uint64_t n = 0;
    std::optional<StepCase> produced_by;  // empty at level 0
    std::size_t dim = 0;
    std::vector<BasisLabel> vbasis;
    BilinearTable<S> mu;               // parent x parent -> this level; empty at level 0
    std::vector<S> wproj_data;         // slot i occupies [i * dim, (i + 1) * dim)
    std::vector<std::uint64_t> nonzero_slots;
    std::optional<std::uint32_t> m1_index, m2_index;           // parent indices, Case 2
    std::optional<std::pair<std::uint64_t, std::uint64_t>> selected_slots;  // (i, j) or (w1, w2)
    std::vector<Vector<S>> provider_vectors;  // Case 3 only, parent (x) parent coordinates
    std::string provider_name;

    std::size_t slot_count() const { return dim == 0 ? 0 : wproj_data.size() / dim; }
    std::span<const S> wproj(std::size_t i) const { return {wproj_data.data() + i * dim, dim}; }
    Vector<S> wproj_vector(std::size_t i) const {
        const auto s = wproj(i);
        return Vector<S>(s.begin(), s.end());
    }

    bool operator==(const LevelData&) const = default;
};

template <FieldScalar S>
std::vector<std::uint64_t> find_nonzero_slots(const std::vector<S>& data, std::size_t dim) {
    std::vector<std::uint64_t> out;
    if (dim == 0) return out;
    for (std::size_t i = 0; i * dim < data.size(); ++i)
        for (std::size_t c = 0; c < dim; ++c)
            if (!data[i * dim + c].is_zero()) {
                out.push_back(i);
                break;
            }
    return out;
}

/// Source of the spaces that Case 3 must push into U. Returned vectors are in
/// V(2^n) (x) V(2^n) coordinates.
template <FieldScalar S>
class FProvider {
public:
    virtual ~FProvider() = default;
    virtual std::string name() const = 0;
    virtual std::vector<Vector<S>> components(unsigned i, std::uint64_t n,
                                              std::span<const LevelData<S>> levels) const = 0;
};

template <FieldScalar S>
class ZeroProvider final : public FProvider<S> {
public:
    std::string name() const override { return "zero"; }
    std::vector<Vector<S>> components(unsigned, std::uint64_t, std::span<const LevelData<S>>) const override {
        return {};
    }
};

/// Extension hook, not a model of any particular F-space construction. For a
/// linear form g with truncated quasi-inverse h of length 2^(n+1) - 1, the
/// residual g + h + gh is +-g^(2^(n+1)); the provider returns the pair
/// projections of these powers for the first i - 1 forms.
template <FieldScalar S>
class ResidualProvider final : public FProvider<S> {
public:
    /// Each form is (coefficient of x, of y, of z).
    explicit ResidualProvider(std::vector<std::array<S, 3>> forms) : forms_(std::move(forms)) {}

    std::string name() const override { return "residual"; }

    std::vector<Vector<S>> components(unsigned i, std::uint64_t n,
                                      std::span<const LevelData<S>> levels) const override {
        std::vector<Vector<S>> out;
        const std::size_t s = std::min<std::size_t>(forms_.size(), i == 0 ? 0 : i - 1);
        for (std::size_t k = 0; k < s; ++k) {
            // z projects to zero at level 0.
            Vector<S> p{forms_[k][0], forms_[k][1]};
            for (std::uint64_t l = 1; l <= n; ++l) p = mu_apply<S>(levels[l].mu, p, p);
            out.push_back(tensor<S>(p, p));
        }
        return out;
    }

    const std::vector<std::array<S, 3>>& forms() const { return forms_; }

private:
    std::vector<std::array<S, 3>> forms_;
};

/// vbasis = [x, y]; z lies in U(1); w(1,0) = y and w(1,1) = x.
template <FieldScalar S>
LevelData<S> init_level0() {
    LevelData<S> l;
    l.n = 0;
    l.dim = 2;
    l.vbasis = {BasisLabel{0, 0}, BasisLabel{1, 0}};
    l.wproj_data = {S{}, one<S>(), one<S>(), S{}};
    l.nonzero_slots = {0, 1};
    return l;
}

namespace detail {

template <FieldScalar S>
std::vector<std::pair<std::uint64_t, SparseVector<S>>> sparse_slots(const LevelData<S>& l) {
    std::vector<std::pair<std::uint64_t, SparseVector<S>>> out;
    out.reserve(l.nonzero_slots.size());
    for (auto i : l.nonzero_slots) out.emplace_back(i, to_sparse<S>(l.wproj(i)));
    return out;
}

}  // namespace detail

/// Slot k of the result is sum over a + b = k of mu(wproj[a], wproj[b]), the
/// projection of w(2^(n+1), k) once mu is the next level's table.
template <FieldScalar S>
std::vector<S> convolve_w(const LevelData<S>& prev, const BilinearTable<S>& mu) {
    if (mu.in_dim != prev.dim) throw std::invalid_argument("convolve_w: table does not match the level dimension");
    const std::size_t od = mu.out_dim;
    const std::size_t slots = 2 * (prev.slot_count() - 1) + 1;
    std::vector<S> out(slots * od);
    const auto sl = detail::sparse_slots(prev);
    for (const auto& [a, va] : sl)
        for (const auto& [b, vb] : sl) {
            S* dst = out.data() + (a + b) * od;
            for (const auto& [p, up] : va)
                for (const auto& [q, vq] : vb) {
                    const auto& e = mu.at(p, q);
                    if (e.empty()) continue;
                    const S c = up * vq;
                    for (const auto& [o, s] : e) dst[o] += c * s;
                }
        }
    return out;
}

/// The W-family of the next level modulo T: slot k in V (x) V coordinates,
/// listing only nonzero slots in increasing order.
template <FieldScalar S>
std::vector<std::pair<std::uint64_t, SparseVector<S>>> convolve_tensor(const LevelData<S>& prev) {
    const auto d = static_cast<std::uint32_t>(prev.dim);
    std::map<std::uint64_t, std::map<std::uint32_t, S>> acc;
    const auto sl = detail::sparse_slots(prev);
    for (const auto& [a, va] : sl)
        for (const auto& [b, vb] : sl) {
            auto& dst = acc[a + b];
            for (const auto& [p, up] : va) {
                SparseVector<S> row;
                row.reserve(vb.size());
                for (const auto& [q, vq] : vb) row.emplace_back(p * d + q, vq);
                accumulate(dst, up, row);
            }
        }
    std::vector<std::pair<std::uint64_t, SparseVector<S>>> out;
    for (const auto& [k, m] : acc)
        if (!m.empty()) out.emplace_back(k, from_map(m));
    return out;
}

namespace detail {

template <FieldScalar S>
LevelData<S> finish_level(const LevelData<S>& prev, StepCase c, std::vector<BasisLabel> vbasis,
                          BilinearTable<S> mu) {
    LevelData<S> l;
    l.n = prev.n + 1;
    l.produced_by = c;
    l.dim = vbasis.size();
    l.vbasis = std::move(vbasis);
    l.wproj_data = convolve_w(prev, mu);
    l.mu = std::move(mu);
    l.nonzero_slots = find_nonzero_slots(l.wproj_data, l.dim);
    return l;
}

template <FieldScalar S>
LevelData<S> step_case1(const LevelData<S>& prev) {
    const auto d = static_cast<std::uint32_t>(prev.dim);
    std::vector<BasisLabel> vb;
    vb.reserve(std::size_t{d} * d);
    for (std::uint32_t a = 0; a < d; ++a)
        for (std::uint32_t b = 0; b < d; ++b) vb.push_back({a, b});
    return finish_level(prev, StepCase::case1, std::move(vb), BilinearTable<S>::identity(d));
}

template <FieldScalar S>
LevelData<S> step_case2(const LevelData<S>& prev) {
    if (prev.dim != 2)
        throw InvariantViolation("Case 2 at level " + std::to_string(prev.n) + " needs dim V = 2, found " +
                                 std::to_string(prev.dim));
    std::optional<std::uint64_t> i, j;
    for (auto k : prev.nonzero_slots) {
        if (!i) {
            i = k;
            continue;
        }
        const auto wi = prev.wproj(*i);
        const auto wk = prev.wproj(k);
        if (!(wi[0] * wk[1] - wi[1] * wk[0]).is_zero()) {
            j = k;
            break;
        }
    }
    if (!i || !j)
        throw InvariantViolation("Case 2 at level " + std::to_string(prev.n) +
                                 ": the projected w-words do not have rank 2");
    // m1 must have a nonzero coefficient in wproj[i]; ties keep basis order.
    const std::uint32_t m1 = prev.wproj(*i)[0].is_zero() ? 1 : 0;
    const std::uint32_t m2 = 1 - m1;
    auto mu = BilinearTable<S>::zero(2, 2);
    mu.entries[m1 * 2 + m1] = {{0, one<S>()}};
    mu.entries[m1 * 2 + m2] = {{1, one<S>()}};
    auto l = finish_level(prev, StepCase::case2, {{m1, m1}, {m1, m2}}, std::move(mu));
    l.m1_index = m1;
    l.m2_index = m2;
    l.selected_slots = std::make_pair(*i, *j);
    return l;
}

template <FieldScalar S>
LevelData<S> step_case3(std::span<const LevelData<S>> levels, const Schedule& sched, const FProvider<S>& fp) {
    const auto& prev = levels.back();
    const auto n = prev.n;
    const auto window = sched.window_param(n);
    if (!window) throw InvariantViolation("Case 3 at level " + std::to_string(n) + " is not a window exit");
    const std::size_t d = prev.dim;
    const std::size_t dd = d * d;

    auto fbar = fp.components(*window, n, levels);
    if (fbar.size() >= *window)
        throw ProviderError("F-provider '" + fp.name() + "' returned " + std::to_string(fbar.size()) +
                            " components at window i = " + std::to_string(*window) + "; at most i - 1 allowed");
    for (const auto& f : fbar)
        if (f.size() != dd)
            throw ProviderError("F-provider '" + fp.name() + "' returned a vector of length " +
                                std::to_string(f.size()) + ", expected " + std::to_string(dd));

    // w1, w2: first W-slots independent modulo the provider span.
    SparseRowBasis<S> sel;
    for (const auto& f : fbar) sel.insert(to_sparse<S>(f));
    std::vector<std::pair<std::uint64_t, SparseVector<S>>> chosen;
    for (auto& [k, v] : convolve_tensor(prev)) {
        if (!sel.insert(v)) continue;
        chosen.emplace_back(k, std::move(v));
        if (chosen.size() == 2) break;
    }
    if (chosen.size() < 2)
        throw InvariantViolation("Case 3 at level " + std::to_string(n) +
                                 ": fewer than two W-slots independent modulo the F-provider span");

    const std::array<Vector<S>, 2> avoid{to_dense(chosen[0].second, dd), to_dense(chosen[1].second, dd)};
    const auto greedy = greedy_max_avoiding_coordinates<S>(dd, fbar, avoid);

    // Work modulo the accepted coordinates: only the kept ones remain, and P
    // restricts to the span of the provider vectors there.
    const auto& kept = greedy.kept;
    const std::size_t kk = kept.size();
    const auto restrict = [&](const Vector<S>& v) {
        Vector<S> r(kk);
        for (std::size_t t = 0; t < kk; ++t) r[t] = v[kept[t]];
        return r;
    };
    RowBasis<S> pk(kk);
    for (const auto& f : fbar) pk.insert(restrict(f));
    if (kk - pk.rank() != 2)
        throw InvariantViolation("Case 3 at level " + std::to_string(n) + ": P has codimension " +
                                 std::to_string(kk - pk.rank()) + ", expected 2");

    std::vector<std::size_t> pick;  // positions in kept
    {
        RowBasis<S> probe = pk;
        for (std::size_t t = 0; t < kk && pick.size() < 2; ++t)
            if (probe.insert(unit_vector<S>(kk, t))) pick.push_back(t);
    }
    std::vector<Vector<S>> gens{unit_vector<S>(kk, pick[0]), unit_vector<S>(kk, pick[1])};
    gens.insert(gens.end(), pk.rows().begin(), pk.rows().end());

    auto mu = BilinearTable<S>::zero(d, 2);
    for (std::size_t t = 0; t < kk; ++t) {
        const auto coeffs = solve_combination<S>(kk, gens, unit_vector<S>(kk, t));
        if (!coeffs) throw InvariantViolation("Case 3: kept coordinate outside V + P");
        SparseVector<S> e;
        for (std::uint32_t o = 0; o < 2; ++o)
            if (!(*coeffs)[o].is_zero()) e.emplace_back(o, (*coeffs)[o]);
        mu.entries[kept[t]] = std::move(e);
    }

    const auto c1 = kept[pick[0]], c2 = kept[pick[1]];
    std::vector<BasisLabel> vb{{static_cast<std::uint32_t>(c1 / d), static_cast<std::uint32_t>(c1 % d)},
                               {static_cast<std::uint32_t>(c2 / d), static_cast<std::uint32_t>(c2 % d)}};
    auto l = finish_level(prev, StepCase::case3, std::move(vb), std::move(mu));
    l.selected_slots = std::make_pair(chosen[0].first, chosen[1].first);
    l.provider_vectors = std::move(fbar);
    l.provider_name = fp.name();
    return l;
}

}  // namespace detail

/// Builds level n + 1 from levels 0..n according to the case at n.
template <FieldScalar S>
LevelData<S> step(std::span<const LevelData<S>> levels, const Schedule& sched, const FProvider<S>& fp) {
    const auto& prev = levels.back();
    switch (sched.case_of(prev.n)) {
        case StepCase::case1: return detail::step_case1(prev);
        case StepCase::case2: return detail::step_case2(prev);
        case StepCase::case3: return detail::step_case3(levels, sched, fp);
    }
    throw InvariantViolation("unknown case");
}

/// Levels 0..depth of the construction together with projection queries.
template <FieldScalar S>
class Tower {
public:
    explicit Tower(Schedule sched, std::shared_ptr<const FProvider<S>> provider = nullptr)
        : sched_(std::move(sched)),
          provider_(provider ? std::move(provider) : std::make_shared<const ZeroProvider<S>>()) {
        levels_.push_back(init_level0<S>());
    }

    /// Adopts prebuilt levels (for example loaded from a state file).
    Tower(Schedule sched, std::vector<LevelData<S>> levels, std::shared_ptr<const FProvider<S>> provider = nullptr)
        : sched_(std::move(sched)),
          provider_(provider ? std::move(provider) : std::make_shared<const ZeroProvider<S>>()),
          levels_(std::move(levels)) {
        if (levels_.empty()) throw std::invalid_argument("a tower needs at least level 0");
    }

    void build_to(std::uint64_t depth) {
        while (this->depth() < depth) levels_.push_back(step<S>(levels_, sched_, *provider_));
    }

    const Schedule& schedule() const { return sched_; }
    const FProvider<S>& provider() const { return *provider_; }
    const std::vector<LevelData<S>>& levels() const { return levels_; }
    const LevelData<S>& level(std::uint64_t n) const { return levels_.at(n); }
    std::uint64_t depth() const { return levels_.size() - 1; }

    /// Coordinates in V(2^n) of a word of length 2^n modulo U(2^n).
    Vector<S> project(const Monomial& w) const {
        const auto n = level_of_length(w.size(), "project");
        return project_at(w, 0, n);
    }

    /// Coordinates modulo U(2^n) of the subword w[pos, pos + 2^n).
    Vector<S> project_at(const Monomial& w, std::size_t pos, std::uint64_t n) const {
        if (n == 0) {
            Vector<S> v(2);
            const auto l = w[pos];
            if (l != Letter::z) v[static_cast<std::size_t>(l)] = one<S>();
            return v;
        }
        const std::size_t half = std::size_t{1} << (n - 1);
        const auto& lv = levels_.at(n);
        auto left = project_at(w, pos, n - 1);
        if (is_zero(left)) return Vector<S>(lv.dim);
        auto right = project_at(w, pos + half, n - 1);
        if (is_zero(right)) return Vector<S>(lv.dim);
        return mu_apply<S>(lv.mu, left, right);
    }

    Vector<S> project_poly(const HomogPoly<S>& f) const {
        const auto n = level_of_length(f.degree(), "project_poly");
        Vector<S> out(levels_.at(n).dim);
        for (const auto& [m, c] : f.terms()) axpy(out, c, project_at(m, 0, n));
        return out;
    }

    /// Coordinates in V(2^n) (x) V(2^n) of a word of length 2^(n+1) modulo T(2^(n+1)).
    Vector<S> pair_project(const Monomial& w) const {
        const auto n1 = level_of_length(w.size(), "pair_project", 1);
        const auto n = n1 - 1;
        const std::size_t half = std::size_t{1} << n;
        const auto left = project_at(w, 0, n);
        const std::size_t d = levels_.at(n).dim;
        if (is_zero(left)) return Vector<S>(d * d);
        return tensor<S>(left, project_at(w, half, n));
    }

    Vector<S> pair_project_poly(const HomogPoly<S>& f) const {
        const auto n1 = level_of_length(f.degree(), "pair_project_poly", 1);
        const std::size_t d = levels_.at(n1 - 1).dim;
        Vector<S> out(d * d);
        for (const auto& [m, c] : f.terms()) axpy(out, c, pair_project(m));
        return out;
    }

    /// The monomial of length 2^n named by basis index `index` at level n.
    Monomial unfold(std::uint64_t n, std::uint32_t index) const {
        const auto& l = levels_.at(n);
        const auto& label = l.vbasis.at(index);
        if (n == 0) return Monomial::from_string(label.left == 0 ? "x" : "y");
        return unfold(n - 1, label.left) * unfold(n - 1, label.right);
    }

private:
    std::uint64_t level_of_length(std::size_t len, const char* what, std::uint64_t extra = 0) const {
        if (len == 0 || (len & (len - 1)) != 0)
            throw std::invalid_argument(std::string(what) + ": degree " + std::to_string(len) +
                                        " is not a power of two; use ideal membership for general degrees");
        const auto n = static_cast<std::uint64_t>(std::countr_zero(len));
        if (n < extra || n - extra > depth())
            throw std::invalid_argument(std::string(what) + ": words of length " + std::to_string(len) +
                                        " need levels built to depth " + std::to_string(n - extra) +
                                        ", have " + std::to_string(depth()));
        return n;
    }

    Schedule sched_;
    std::shared_ptr<const FProvider<S>> provider_;
    std::vector<LevelData<S>> levels_;
};

}  // namespace radalg
