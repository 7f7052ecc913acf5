#pragma once

// Arithmetic in P = Ā/E. A homogeneous f of degree n with 2^m <= n < 2^(m+1)
// lies in E(n) iff u f v projects to zero modulo T(2^(m+2)) for every border
// pair (u, v) of total length 2^(m+2) - n.

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "radalg/construction.hpp"
#include "radalg/errors.hpp"
#include "radalg/field.hpp"
#include "radalg/linalg.hpp"
#include "radalg/poly.hpp"

namespace radalg {

enum class Verdict { in_ideal, not_in_ideal, unknown };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::in_ideal: return "in_ideal";
        case Verdict::not_in_ideal: return "not_in_ideal";
        case Verdict::unknown: return "unknown";
    }
    return "?";
}

template <FieldScalar S>
struct BorderWitness {
    std::size_t j = 0;
    Monomial u, v;
    Vector<S> projection;
};

template <FieldScalar S>
struct MembershipVerdict {
    Verdict verdict = Verdict::in_ideal;
    std::size_t degree = 0;
    bool exhaustive = true;
    std::uint64_t pairs_tested = 0;
    std::uint64_t pairs_total = 0;  // saturates at UINT64_MAX
    std::optional<BorderWitness<S>> witness;
};

struct MembershipOptions {
    std::uint64_t budget = std::uint64_t{1} << 18;  // largest exhaustive border count
    std::uint64_t seed = 0;
};

/// m with 2^m <= n < 2^(m+1).
inline std::uint64_t floor_log2(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("floor_log2(0)");
    return 63 - static_cast<std::uint64_t>(std::countl_zero(n));
}

/// Levels needed to decide membership in degree n.
inline std::uint64_t required_depth(std::uint64_t n) { return floor_log2(n) + 1; }

template <FieldScalar S>
Vector<S> bordered_projection(const Tower<S>& tower, const Monomial& u, const HomogPoly<S>& f, const Monomial& v) {
    Vector<S> out;
    for (const auto& [w, c] : f.terms()) {
        auto p = tower.pair_project(u * w * v);
        if (out.empty()) out.assign(p.size(), S{});
        axpy(out, c, p);
    }
    return out;
}

template <FieldScalar S>
MembershipVerdict<S> e_member(const Tower<S>& tower, const HomogPoly<S>& f, const MembershipOptions& opt = {}) {
    MembershipVerdict<S> res;
    res.degree = f.degree();
    if (f.is_zero()) return res;
    const std::uint64_t n = f.degree();
    if (n == 0) throw std::invalid_argument("E is defined in positive degrees only");
    const auto m = floor_log2(n);
    if (tower.depth() < m + 1)
        throw std::invalid_argument("membership in degree " + std::to_string(n) + " needs levels built to depth " +
                                    std::to_string(m + 1) + ", have " + std::to_string(tower.depth()));
    const std::uint64_t total = std::uint64_t{1} << (m + 2);
    const std::uint64_t L = total - n;
    // Borders containing z vanish through the level-0 projection; only
    // {x,y}-borders are enumerated.
    res.pairs_total = L >= 58 ? UINT64_MAX : (L + 1) << L;

    const auto test = [&](std::size_t j, std::uint64_t ui, std::uint64_t vi) {
        const auto u = Monomial::from_index(ui, j);
        const auto v = Monomial::from_index(vi, L - j);
        auto p = bordered_projection(tower, u, f, v);
        ++res.pairs_tested;
        if (is_zero(p)) return false;
        res.verdict = Verdict::not_in_ideal;
        res.witness = BorderWitness<S>{j, u, v, std::move(p)};
        return true;
    };

    if (res.pairs_total <= opt.budget) {
        res.exhaustive = true;
        for (std::size_t j = 0; j <= L; ++j)
            for (std::uint64_t ui = 0; ui < (std::uint64_t{1} << j); ++ui)
                for (std::uint64_t vi = 0; vi < (std::uint64_t{1} << (L - j)); ++vi)
                    if (test(j, ui, vi)) return res;
        return res;
    }
    res.exhaustive = false;
    std::mt19937_64 rng(opt.seed ^ (n * 0x9e3779b97f4a7c15ull));
    std::uniform_int_distribution<std::uint64_t> pick_j(0, L);
    for (std::uint64_t s = 0; s < opt.budget; ++s) {
        const auto j = static_cast<std::size_t>(pick_j(rng));
        const auto bits = [&](std::size_t len) { return len == 0 ? 0 : rng() >> (64 - len); };
        const auto ui = bits(j);
        const auto vi = bits(L - j);
        if (test(j, ui, vi)) return res;
    }
    res.verdict = Verdict::unknown;
    return res;
}

/// An element of P, represented by a polynomial without constant term.
template <FieldScalar S>
class PElement {
public:
    PElement() = default;
    explicit PElement(Poly<S> rep) : rep_(std::move(rep)) {
        if (rep_.has_constant_term()) throw std::invalid_argument("elements of P have no constant term");
    }
    static PElement parse(std::string_view text) { return PElement(Poly<S>::parse(text)); }

    const Poly<S>& rep() const { return rep_; }
    PElement operator+(const PElement& o) const { return PElement(rep_ + o.rep_); }
    PElement operator-(const PElement& o) const { return PElement(rep_ - o.rep_); }
    PElement operator*(const PElement& o) const { return PElement(rep_ * o.rep_); }
    PElement scaled(const S& a) const { return PElement(rep_.scaled(a)); }
    PElement pow(std::size_t k) const {
        if (k == 0) throw std::invalid_argument("P has no unit");
        return PElement(rep_.pow(k));
    }
    std::string to_string() const { return rep_.to_string(); }

private:
    Poly<S> rep_;
};

template <FieldScalar S>
struct ZeroTest {
    Verdict verdict = Verdict::in_ideal;
    std::vector<MembershipVerdict<S>> components;
};

template <FieldScalar S>
ZeroTest<S> p_is_zero(const Tower<S>& tower, const PElement<S>& f, const MembershipOptions& opt = {}) {
    ZeroTest<S> out;
    bool unknown = false;
    for (const auto& [d, h] : f.rep().components()) {
        out.components.push_back(e_member(tower, h, opt));
        const auto v = out.components.back().verdict;
        if (v == Verdict::not_in_ideal) out.verdict = Verdict::not_in_ideal;
        if (v == Verdict::unknown) unknown = true;
    }
    if (out.verdict != Verdict::not_in_ideal && unknown) out.verdict = Verdict::unknown;
    return out;
}

struct NilpotencyResult {
    std::optional<std::size_t> power;          // smallest k with f^k in E
    std::optional<std::size_t> inconclusive;   // first k whose verdict was unknown
    std::vector<Verdict> verdicts;             // verdict of f^k for k = 1, 2, ...
};

template <FieldScalar S>
NilpotencyResult nilpotency_search(const Tower<S>& tower, const PElement<S>& f, std::size_t max_power,
                                   const MembershipOptions& opt = {}) {
    NilpotencyResult out;
    if (f.rep().is_zero()) {
        out.power = 1;
        out.verdicts.push_back(Verdict::in_ideal);
        return out;
    }
    PElement<S> g = f;
    for (std::size_t k = 1; k <= max_power; ++k) {
        if (k > 1) g = g * f;
        const auto v = p_is_zero(tower, g, opt).verdict;
        out.verdicts.push_back(v);
        if (v == Verdict::unknown && !out.inconclusive) out.inconclusive = k;
        if (v == Verdict::in_ideal) {
            out.power = k;
            break;
        }
    }
    return out;
}

struct WitnessLevel {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> nonzero_slots;
    std::size_t rank = 0;
};

struct NonnilWitness {
    std::vector<WitnessLevel> levels;
    bool all_nonempty = true;
    bool all_rank_two = true;
    std::optional<std::uint64_t> certified_log_exponent;  // k with (x+Xy)^(2^k) not in E[X]
};

/// At each level the nonzero projected w-words show (x+Xy)^(2^n) is not in
/// U(2^n)[X]; since T(2^n) lies in U(2^n), (x+Xy)^(2^(n-2)) is not in E[X].
template <FieldScalar S>
NonnilWitness nonnil_witness(const Tower<S>& tower) {
    NonnilWitness out;
    for (const auto& l : tower.levels()) {
        WitnessLevel wl;
        wl.n = l.n;
        wl.nonzero_slots = l.nonzero_slots;
        RowBasis<S> b(l.dim);
        for (auto i : l.nonzero_slots) b.insert(l.wproj_vector(i));
        wl.rank = b.rank();
        out.all_nonempty = out.all_nonempty && !wl.nonzero_slots.empty();
        out.all_rank_two = out.all_rank_two && wl.rank >= 2;
        out.levels.push_back(std::move(wl));
    }
    const auto depth = tower.depth();
    if (out.all_nonempty && depth >= 2) out.certified_log_exponent = depth - 2;
    return out;
}

/// g = sum_{k=1..D} (-1)^k f^k, so that f + g + fg = (-1)^D f^(D+1).
template <FieldScalar S>
Poly<S> truncated_quasi_inverse(const Poly<S>& f, std::size_t D) {
    if (f.has_constant_term()) throw std::invalid_argument("quasi-inverse needs a polynomial without constant term");
    Poly<S> g;
    Poly<S> power = f;
    for (std::size_t k = 1; k <= D; ++k) {
        if (k > 1) power = power * f;
        g += k % 2 ? -power : power;
    }
    return g;
}

template <FieldScalar S>
Poly<S> quasi_residual(const Poly<S>& f, const Poly<S>& g) {
    return f + g + f * g;
}

template <FieldScalar S>
using PMatrix = std::vector<std::vector<PElement<S>>>;

template <FieldScalar S>
PMatrix<S> matrix_multiply(const PMatrix<S>& a, const PMatrix<S>& b) {
    const std::size_t n = a.size();
    PMatrix<S> c(n, std::vector<PElement<S>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly<S> acc;
            for (std::size_t k = 0; k < n; ++k) acc += a[i][k].rep() * b[k][j].rep();
            c[i][j] = PElement<S>(std::move(acc));
        }
    return c;
}

struct MatrixPowerRow {
    std::size_t power = 0;
    std::vector<std::vector<Verdict>> entries;
    Verdict overall = Verdict::in_ideal;
};

struct MatrixDemo {
    std::vector<MatrixPowerRow> powers;
    std::optional<std::size_t> vanishing_power;
};

template <FieldScalar S>
MatrixDemo matrix_power_demo(const Tower<S>& tower, const PMatrix<S>& m, std::size_t max_power,
                             const MembershipOptions& opt = {}) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("matrix must be square");
    MatrixDemo out;
    PMatrix<S> p = m;
    for (std::size_t k = 1; k <= max_power; ++k) {
        if (k > 1) p = matrix_multiply(p, m);
        MatrixPowerRow r;
        r.power = k;
        bool unknown = false;
        for (const auto& row : p) {
            r.entries.emplace_back();
            for (const auto& e : row) {
                const auto v = p_is_zero(tower, e, opt).verdict;
                r.entries.back().push_back(v);
                if (v == Verdict::not_in_ideal) r.overall = Verdict::not_in_ideal;
                if (v == Verdict::unknown) unknown = true;
            }
        }
        if (r.overall != Verdict::not_in_ideal && unknown) r.overall = Verdict::unknown;
        const bool vanished = r.overall == Verdict::in_ideal;
        out.powers.push_back(std::move(r));
        if (vanished) {
            out.vanishing_power = k;
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Growth. dim P(d) is the rank of the functionals w -> lambda(pair projection
// of u w v) on the {x,y}-words of length d (words with z lie in E). Instead of
// enumerating borders, the span of these functionals is assembled from the
// spaces of maps w -> pi_k(u w v) for a window inside a block of length 2^k.

struct GrowthRow {
    std::uint64_t d = 0;
    std::uint64_t dim = 0;
    std::uint64_t cumulative = 0;
};

struct GrowthTable {
    std::vector<GrowthRow> rows;
    std::optional<std::string> cap_note;
};

namespace detail {

template <FieldScalar S>
class ContextSpaces {
public:
    explicit ContextSpaces(const Tower<S>& tower) : tower_(tower) {}

    /// Basis (flattened d_k x 2^len matrices, row-major) of
    /// span{ w -> pi_k(u w v) : |u| = a, |u w v| = 2^k }.
    const RowBasis<S>& maps(std::uint64_t k, std::uint64_t a, std::uint64_t len) {
        const auto key = std::make_tuple(k, a, len);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        auto b = compute(k, a, len);
        return memo_.emplace(key, std::move(b)).first->second;
    }

    std::size_t dim(std::uint64_t k) const { return tower_.level(k).dim; }

private:
    RowBasis<S> compute(std::uint64_t k, std::uint64_t a, std::uint64_t len) {
        const std::size_t dk = dim(k);
        const std::size_t cols = std::size_t{1} << len;
        RowBasis<S> out(dk * cols);
        const std::uint64_t block = std::uint64_t{1} << k;
        if (len == block) {
            Vector<S> m(dk * cols);
            for (std::size_t w = 0; w < cols; ++w) {
                const auto p = tower_.project(Monomial::from_index(w, len));
                for (std::size_t o = 0; o < dk; ++o) m[o * cols + w] = p[o];
            }
            out.insert(m);
            return out;
        }
        const std::uint64_t half = block / 2;
        const std::size_t dp = dim(k - 1);
        const auto& mu = tower_.level(k).mu;
        if (a + len <= half || a >= half) {
            const bool left = a + len <= half;
            const auto& inner = maps(k - 1, left ? a : a - half, len);
            for (const auto& row : inner.rows())
                for (std::size_t c = 0; c < dp; ++c) {
                    Vector<S> g(dk * cols);
                    for (std::size_t s = 0; s < dp; ++s) {
                        const auto& e = left ? mu.at(s, c) : mu.at(c, s);
                        for (const auto& [o, coef] : e)
                            for (std::size_t w = 0; w < cols; ++w) {
                                const S& x = row[s * cols + w];
                                if (!x.is_zero()) g[o * cols + w] += coef * x;
                            }
                    }
                    out.insert(g);
                }
            return out;
        }
        const std::uint64_t len1 = half - a;
        const std::uint64_t len2 = len - len1;
        const std::size_t c1 = std::size_t{1} << len1;
        const std::size_t c2 = std::size_t{1} << len2;
        const auto& lb = maps(k - 1, a, len1);
        const auto& rb = maps(k - 1, 0, len2);
        for (const auto& al : lb.rows())
            for (const auto& be : rb.rows()) {
                Vector<S> g(dk * cols);
                for (std::size_t s = 0; s < dp; ++s)
                    for (std::size_t t = 0; t < dp; ++t) {
                        const auto& e = mu.at(s, t);
                        if (e.empty()) continue;
                        for (std::size_t w1 = 0; w1 < c1; ++w1) {
                            const S& x = al[s * c1 + w1];
                            if (x.is_zero()) continue;
                            for (std::size_t w2 = 0; w2 < c2; ++w2) {
                                const S& y = be[t * c2 + w2];
                                if (y.is_zero()) continue;
                                const S xy = x * y;
                                for (const auto& [o, coef] : e) g[o * cols + w1 * c2 + w2] += coef * xy;
                            }
                        }
                    }
                out.insert(g);
            }
        return out;
    }

    const Tower<S>& tower_;
    std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, RowBasis<S>> memo_;
};

// Row space of the matrices in b (each d x cols), as functionals on K^cols.
template <FieldScalar S>
RowBasis<S> functional_rows(const RowBasis<S>& b, std::size_t d, std::size_t cols) {
    RowBasis<S> out(cols);
    for (const auto& m : b.rows())
        for (std::size_t o = 0; o < d; ++o) out.insert(Vector<S>(m.begin() + o * cols, m.begin() + (o + 1) * cols));
    return out;
}

}  // namespace detail

/// Basis of the span of all border functionals on the {x,y}-words of length d.
template <FieldScalar S>
RowBasis<S> border_functionals(const Tower<S>& tower, std::uint64_t d) {
    const auto m = floor_log2(d);
    if (tower.depth() < m + 1)
        throw std::invalid_argument("degree " + std::to_string(d) + " needs levels built to depth " +
                                    std::to_string(m + 1));
    const std::uint64_t top = m + 2;
    const std::uint64_t total = std::uint64_t{1} << top;
    const std::uint64_t half = total / 2;
    const std::size_t cols = std::size_t{1} << d;
    detail::ContextSpaces<S> ctx(tower);
    const std::size_t dh = ctx.dim(top - 1);
    RowBasis<S> out(cols);
    for (std::uint64_t j = 0; j + d <= total; ++j) {
        if (j + d <= half || j >= half) {
            const auto& b = ctx.maps(top - 1, j + d <= half ? j : j - half, d);
            const auto rows = detail::functional_rows(b, dh, cols);
            for (const auto& r : rows.rows()) out.insert(r);
            continue;
        }
        const std::uint64_t len1 = half - j;
        const std::uint64_t len2 = d - len1;
        const std::size_t c2 = std::size_t{1} << len2;
        const auto lf = detail::functional_rows(ctx.maps(top - 1, j, len1), dh, std::size_t{1} << len1);
        const auto rf = detail::functional_rows(ctx.maps(top - 1, 0, len2), dh, c2);
        for (const auto& l : lf.rows())
            for (const auto& r : rf.rows()) {
                Vector<S> g(cols);
                for (std::size_t w1 = 0; w1 < l.size(); ++w1) {
                    if (l[w1].is_zero()) continue;
                    for (std::size_t w2 = 0; w2 < c2; ++w2)
                        if (!r[w2].is_zero()) g[w1 * c2 + w2] = l[w1] * r[w2];
                }
                out.insert(g);
            }
    }
    return out;
}

/// Same span, by enumerating every {x,y}-border. Exponential; for cross-checks.
template <FieldScalar S>
RowBasis<S> border_functionals_bruteforce(const Tower<S>& tower, std::uint64_t d) {
    const auto m = floor_log2(d);
    const std::uint64_t total = std::uint64_t{1} << (m + 2);
    const std::uint64_t L = total - d;
    const std::size_t cols = std::size_t{1} << d;
    RowBasis<S> out(cols);
    for (std::size_t j = 0; j <= L; ++j)
        for (std::uint64_t ui = 0; ui < (std::uint64_t{1} << j); ++ui)
            for (std::uint64_t vi = 0; vi < (std::uint64_t{1} << (L - j)); ++vi) {
                const auto u = Monomial::from_index(ui, j);
                const auto v = Monomial::from_index(vi, L - j);
                std::vector<Vector<S>> images;
                for (std::size_t w = 0; w < cols; ++w) images.push_back(tower.pair_project(u * Monomial::from_index(w, d) * v));
                const std::size_t dd = images.front().size();
                for (std::size_t c = 0; c < dd; ++c) {
                    Vector<S> f(cols);
                    for (std::size_t w = 0; w < cols; ++w) f[w] = images[w][c];
                    out.insert(f);
                }
            }
    return out;
}

template <FieldScalar S>
GrowthTable growth_table(const Tower<S>& tower, std::uint64_t max_degree, std::uint64_t cap, unsigned jobs = 1) {
    GrowthTable t;
    std::uint64_t top = max_degree;
    if (top > cap) {
        top = cap;
        t.cap_note = "table truncated at degree " + std::to_string(cap) + " (requested " + std::to_string(max_degree) + ")";
    }
    std::vector<std::uint64_t> dims(top + 1, 0);
    jobs = std::max(1u, jobs);
    std::vector<std::thread> workers;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
            try {
                // Largest degrees first: they dominate the running time.
                for (std::uint64_t d = top - w; d >= 1 && d <= top; d -= jobs) dims[d] = border_functionals(tower, d).rank();
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    for (auto& th : workers) th.join();
    if (failure) std::rethrow_exception(failure);
    std::uint64_t cum = 0;
    for (std::uint64_t d = 1; d <= top; ++d) {
        cum += dims[d];
        t.rows.push_back({d, dims[d], cum});
    }
    return t;
}

/// C * n^2 * log(n)^3 (natural logarithm).
inline long double growth_bound(long double C, std::uint64_t n) {
    const long double l = std::log(static_cast<long double>(n));
    return C * n * n * l * l * l;
}

struct GrowthCheck {
    long double C = 0;
    std::uint64_t fit_point = 4;
    bool bound_holds = true;
    bool non_decreasing = true;
    std::optional<std::uint64_t> violation;
};

inline GrowthCheck check_growth_bound(const GrowthTable& t, std::uint64_t fit_point = 4) {
    GrowthCheck g;
    g.fit_point = fit_point;
    const GrowthRow* fit = nullptr;
    for (const auto& r : t.rows)
        if (r.d == fit_point) fit = &r;
    if (!fit || fit_point < 2) throw std::invalid_argument("growth table does not contain the fit point");
    g.C = static_cast<long double>(fit->cumulative) / growth_bound(1.0L, fit_point);
    std::uint64_t prev = 0;
    for (const auto& r : t.rows) {
        if (r.cumulative < prev) g.non_decreasing = false;
        prev = r.cumulative;
        // Cross-multiplied so that the fit point itself compares exactly equal.
        if (r.d > fit_point &&
            static_cast<long double>(r.cumulative) * growth_bound(1.0L, fit_point) >
                static_cast<long double>(fit->cumulative) * growth_bound(1.0L, r.d)) {
            g.bound_holds = false;
            if (!g.violation) g.violation = r.d;
        }
    }
    return g;
}

}  // namespace radalg
