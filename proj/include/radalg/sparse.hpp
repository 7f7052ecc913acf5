#pragma once

// Sparse vectors and a sparse echelon basis, for coordinate spaces too large
// to hold a dense RowBasis (V(2^n) tensor V(2^n) reaches 65536 dimensions).

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "radalg/field.hpp"
#include "radalg/linalg.hpp"

namespace radalg {

/// Entries sorted by index, no explicit zeros.
template <FieldScalar S>
using SparseVector = std::vector<std::pair<std::uint32_t, S>>;

template <FieldScalar S>
SparseVector<S> to_sparse(std::span<const S> v) {
    SparseVector<S> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
    return out;
}

template <FieldScalar S>
Vector<S> to_dense(const SparseVector<S>& v, std::size_t dim) {
    Vector<S> out(dim);
    for (const auto& [i, c] : v) out.at(i) = c;
    return out;
}

template <FieldScalar S>
SparseVector<S> from_map(const std::map<std::uint32_t, S>& m) {
    SparseVector<S> out;
    out.reserve(m.size());
    for (const auto& [i, c] : m)
        if (!c.is_zero()) out.emplace_back(i, c);
    return out;
}

/// acc += a * v
template <FieldScalar S>
void accumulate(std::map<std::uint32_t, S>& acc, const S& a, const SparseVector<S>& v) {
    if (a.is_zero()) return;
    for (const auto& [i, c] : v) {
        auto [it, inserted] = acc.try_emplace(i, a * c);
        if (inserted) continue;
        it->second += a * c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

/// Echelon basis of sparse rows with distinct leading indices, kept sorted by
/// leading index. Not reduced; only rank and membership are needed.
template <FieldScalar S>
class SparseRowBasis {
public:
    std::size_t rank() const { return rows_.size(); }

    std::map<std::uint32_t, S> residual(const SparseVector<S>& v) const {
        std::map<std::uint32_t, S> r(v.begin(), v.end());
        for (const auto& row : rows_) {
            if (r.empty()) break;
            const auto it = r.find(row.front().first);
            if (it == r.end()) continue;
            const S c = it->second;
            accumulate(r, -c, row);
        }
        return r;
    }

    bool contains(const SparseVector<S>& v) const { return residual(v).empty(); }

    bool insert(const SparseVector<S>& v) {
        auto r = residual(v);
        if (r.empty()) return false;
        SparseVector<S> row = from_map(r);
        const S inv = row.front().second.inverse();
        for (auto& [i, c] : row) c *= inv;
        const auto pos = std::lower_bound(rows_.begin(), rows_.end(), row.front().first,
                                          [](const SparseVector<S>& a, std::uint32_t p) { return a.front().first < p; });
        rows_.insert(pos, std::move(row));
        return true;
    }

private:
    std::vector<SparseVector<S>> rows_;
};

}  // namespace radalg
