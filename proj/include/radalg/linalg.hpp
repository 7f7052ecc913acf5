#pragma once

// Dense exact linear algebra: vectors, reduced row-echelon subspaces, and the
// greedy "maximal subspace avoiding a plane" construction.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "radalg/errors.hpp"
#include "radalg/field.hpp"

namespace radalg {

template <FieldScalar S>
using Vector = std::vector<S>;

template <FieldScalar S>
Vector<S> unit_vector(std::size_t dim, std::size_t i) {
    Vector<S> v(dim);
    v.at(i) = one<S>();
    return v;
}

template <FieldScalar S>
bool is_zero(const Vector<S>& v) {
    return std::all_of(v.begin(), v.end(), [](const S& s) { return s.is_zero(); });
}

template <FieldScalar S>
std::optional<std::size_t> first_nonzero(const Vector<S>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
    return std::nullopt;
}

/// y += a * x
template <FieldScalar S>
void axpy(Vector<S>& y, const S& a, const Vector<S>& x) {
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i] += a * x[i];
}

template <FieldScalar S>
void scale(Vector<S>& v, const S& a) {
    for (auto& s : v)
        if (!s.is_zero()) s *= a;
}

template <FieldScalar S>
struct Reduction {
    Vector<S> residual;
    std::vector<S> coefficients;  // one per basis row
};

/// A subspace of K^dim stored as its reduced row-echelon basis. Pivot entries
/// are 1 and every pivot column vanishes in all other rows, so the stored rows
/// are a canonical form of the span.
template <FieldScalar S>
class RowBasis {
public:
    RowBasis() = default;
    explicit RowBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<Vector<S>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

    /// v = residual + sum(coefficients[k] * rows[k]); the residual vanishes on
    /// every pivot column, and is zero iff v lies in the span.
    Reduction<S> reduce(const Vector<S>& v) const {
        check_dim(v);
        Reduction<S> out{v, {}};
        out.coefficients.reserve(rows_.size());
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            // Rows vanish on each other's pivots, so the coefficient is read
            // off the original vector.
            const S c = v[pivots_[k]];
            out.coefficients.push_back(c);
            if (!c.is_zero()) axpy(out.residual, -c, rows_[k]);
        }
        return out;
    }

    Vector<S> residual(const Vector<S>& v) const {
        check_dim(v);
        Vector<S> r = v;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const S c = r[pivots_[k]];
            if (!c.is_zero()) axpy(r, -c, rows_[k]);
        }
        return r;
    }

    bool contains(const Vector<S>& v) const { return is_zero(residual(v)); }

    /// Adds v to the span. Returns true iff the rank grew.
    bool insert(const Vector<S>& v) {
        Vector<S> r = residual(v);
        const auto p = first_nonzero(r);
        if (!p) return false;
        scale(r, r[*p].inverse());
        for (auto& row : rows_) {
            const S c = row[*p];
            if (!c.is_zero()) axpy(row, -c, r);
        }
        const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), *p) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, *p);
        rows_.insert(rows_.begin() + pos, std::move(r));
        return true;
    }

    /// Same span (the reduced echelon form is unique).
    bool operator==(const RowBasis&) const = default;

private:
    void check_dim(const Vector<S>& v) const {
        if (v.size() != dim_)
            throw std::invalid_argument("dimension mismatch: vector of length " + std::to_string(v.size()) +
                                        " against a space of dimension " + std::to_string(dim_));
    }

    std::size_t dim_ = 0;
    std::vector<Vector<S>> rows_;
    std::vector<std::size_t> pivots_;
};

template <FieldScalar S>
RowBasis<S> span_of(std::size_t dim, std::span<const Vector<S>> vectors) {
    RowBasis<S> b(dim);
    for (const auto& v : vectors) b.insert(v);
    return b;
}

template <FieldScalar S>
std::size_t rank_of(std::size_t dim, std::span<const Vector<S>> vectors) {
    return span_of<S>(dim, vectors).rank();
}

/// Coefficients c with sum(c[k] * gens[k]) == target, if any exist.
template <FieldScalar S>
std::optional<std::vector<S>> solve_combination(std::size_t dim, std::span<const Vector<S>> gens,
                                                const Vector<S>& target) {
    const std::size_t g = gens.size();
    // Rows (gen_k | e_k): every row (h | t) of the echelon form keeps
    // h == sum(t_k gen_k), so a residual with zero head yields a solution.
    RowBasis<S> aug(dim + g);
    for (std::size_t k = 0; k < g; ++k) {
        if (gens[k].size() != dim) throw std::invalid_argument("dimension mismatch in solve_combination");
        Vector<S> row(dim + g);
        std::copy(gens[k].begin(), gens[k].end(), row.begin());
        row[dim + k] = one<S>();
        aug.insert(row);
    }
    if (target.size() != dim) throw std::invalid_argument("dimension mismatch in solve_combination");
    Vector<S> t(dim + g);
    std::copy(target.begin(), target.end(), t.begin());
    const Vector<S> r = aug.residual(t);
    for (std::size_t i = 0; i < dim; ++i)
        if (!r[i].is_zero()) return std::nullopt;
    std::vector<S> coeffs(g);
    for (std::size_t k = 0; k < g; ++k) coeffs[k] = -r[dim + k];
    return coeffs;
}

/// Greedy maximal subspace G containing must_contain such that
/// span(avoid) ∩ (G + ambient_extra) = 0, scanning candidates in order.
template <FieldScalar S>
RowBasis<S> greedy_max_avoiding(std::span<const Vector<S>> candidates, std::span<const Vector<S>> must_contain,
                                const std::array<Vector<S>, 2>& avoid, const RowBasis<S>& ambient_extra) {
    const std::size_t dim = ambient_extra.dim();
    const auto avoids = [&](const RowBasis<S>& base) {
        RowBasis<S> probe = base;
        return probe.insert(avoid[0]) && probe.insert(avoid[1]);
    };
    if (!avoids(ambient_extra))
        throw std::invalid_argument("avoid vectors are dependent modulo the ambient subspace");

    RowBasis<S> result(dim);
    RowBasis<S> with_extra = ambient_extra;
    for (const auto& m : must_contain) {
        result.insert(m);
        with_extra.insert(m);
    }
    if (!avoids(with_extra)) throw ProviderError("F-provider output not absorbable");

    for (const auto& c : candidates) {
        RowBasis<S> trial = with_extra;
        trial.insert(c);
        if (!avoids(trial)) continue;
        result.insert(c);
        with_extra = std::move(trial);
    }
    return result;
}

namespace detail {

// Echelon form of a few dense rows restricted to a shrinking set of active
// columns. Pivots are taken as far right as possible so that dropping columns
// in increasing order rarely touches a pivot.
template <FieldScalar S>
class ActiveEchelon {
public:
    ActiveEchelon(std::size_t dim, std::span<const Vector<S>> vectors) : pivot_row_(dim, npos) {
        for (const auto& v : vectors) add(v);
    }

    std::size_t rank() const { return rows_.size(); }

    /// e_c (restricted to active columns) lies in the row space.
    bool contains_unit(std::size_t c) const {
        const auto r = pivot_row_[c];
        return r != npos && nnz_[r] == 1;
    }

    void drop_column(std::size_t c) {
        const auto pr = pivot_row_[c];
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (r == pr || rows_[r][c].is_zero()) continue;
            rows_[r][c] = S{};
            --nnz_[r];
        }
        if (pr == npos) return;
        pivot_row_[c] = npos;
        auto& row = rows_[pr];
        row[c] = S{};
        --nnz_[pr];
        std::size_t q = row.size();
        while (q > 0 && row[q - 1].is_zero()) --q;
        if (q == 0) {
            remove_row(pr);
            return;
        }
        --q;
        scale(row, row[q].inverse());
        pivots_[pr] = q;
        pivot_row_[q] = pr;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (r == pr || rows_[r][q].is_zero()) continue;
            axpy(rows_[r], -rows_[r][q], row);
            recount(r);
        }
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    void add(Vector<S> v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const S c = v[pivots_[r]];
            if (!c.is_zero()) axpy(v, -c, rows_[r]);
        }
        std::size_t q = v.size();
        while (q > 0 && v[q - 1].is_zero()) --q;
        if (q == 0) return;
        --q;
        scale(v, v[q].inverse());
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const S c = rows_[r][q];
            if (c.is_zero()) continue;
            axpy(rows_[r], -c, v);
            recount(r);
        }
        pivot_row_[q] = rows_.size();
        pivots_.push_back(q);
        rows_.push_back(std::move(v));
        nnz_.push_back(0);
        recount(rows_.size() - 1);
    }

    void recount(std::size_t r) {
        nnz_[r] = static_cast<std::size_t>(
            std::count_if(rows_[r].begin(), rows_[r].end(), [](const S& s) { return !s.is_zero(); }));
    }

    void remove_row(std::size_t r) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        pivots_.erase(pivots_.begin() + static_cast<std::ptrdiff_t>(r));
        nnz_.erase(nnz_.begin() + static_cast<std::ptrdiff_t>(r));
        std::fill(pivot_row_.begin(), pivot_row_.end(), npos);
        for (std::size_t k = 0; k < pivots_.size(); ++k) pivot_row_[pivots_[k]] = k;
    }

    std::vector<Vector<S>> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> nnz_;
    std::vector<std::size_t> pivot_row_;
};

}  // namespace detail

/// Result of greedy_max_avoiding when the candidates are the standard basis
/// vectors e_0, e_1, ... in order. The subspace is
/// span(must_contain) + span{e_c : accepted[c]}.
template <FieldScalar S>
struct CoordinateGreedy {
    std::size_t dim = 0;
    std::vector<bool> accepted;
    std::vector<std::size_t> kept;  // coordinates not accepted, increasing
    std::vector<Vector<S>> must_contain;

    RowBasis<S> to_row_basis() const {
        RowBasis<S> b(dim);
        for (const auto& m : must_contain) b.insert(m);
        for (std::size_t c = 0; c < dim; ++c)
            if (accepted[c]) b.insert(unit_vector<S>(dim, c));
        return b;
    }
};

/// Same result as greedy_max_avoiding over the standard basis, computed by
/// tracking two small echelon forms restricted to the not-yet-accepted
/// coordinates. Linear in dim for a bounded number of constraint rows.
template <FieldScalar S>
CoordinateGreedy<S> greedy_max_avoiding_coordinates(std::size_t dim, std::span<const Vector<S>> must_contain,
                                                    const std::array<Vector<S>, 2>& avoid,
                                                    std::span<const Vector<S>> ambient_extra = {}) {
    for (const auto& v : must_contain)
        if (v.size() != dim) throw std::invalid_argument("dimension mismatch in greedy_max_avoiding_coordinates");
    for (const auto& v : ambient_extra)
        if (v.size() != dim) throw std::invalid_argument("dimension mismatch in greedy_max_avoiding_coordinates");
    if (avoid[0].size() != dim || avoid[1].size() != dim)
        throw std::invalid_argument("dimension mismatch in greedy_max_avoiding_coordinates");

    std::vector<Vector<S>> constraint(ambient_extra.begin(), ambient_extra.end());
    {
        std::vector<Vector<S>> with_avoid = constraint;
        with_avoid.push_back(avoid[0]);
        with_avoid.push_back(avoid[1]);
        if (rank_of<S>(dim, with_avoid) != rank_of<S>(dim, constraint) + 2)
            throw std::invalid_argument("avoid vectors are dependent modulo the ambient subspace");
    }
    constraint.insert(constraint.end(), must_contain.begin(), must_contain.end());
    std::vector<Vector<S>> full = constraint;
    full.push_back(avoid[0]);
    full.push_back(avoid[1]);

    detail::ActiveEchelon<S> m(dim, constraint);
    detail::ActiveEchelon<S> b(dim, full);
    if (b.rank() != m.rank() + 2) throw ProviderError("F-provider output not absorbable");

    CoordinateGreedy<S> out;
    out.dim = dim;
    out.accepted.assign(dim, false);
    out.must_contain.assign(must_contain.begin(), must_contain.end());
    for (std::size_t c = 0; c < dim; ++c) {
        // Accepting e_c loses a dimension of span(avoid) modulo the rest
        // exactly when e_c is reachable with the avoid rows but not without.
        if (b.contains_unit(c) && !m.contains_unit(c)) {
            out.kept.push_back(c);
            continue;
        }
        out.accepted[c] = true;
        m.drop_column(c);
        b.drop_column(c);
    }
    return out;
}

}  // namespace radalg
