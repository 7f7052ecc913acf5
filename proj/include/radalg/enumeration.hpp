#pragma once

// An enumeration {f_i : i in Z} of the nonzero polynomials without constant
// term, with i > 3^(2 deg f_i + 2) (deg f_i + 1)^2 for every i in Z.
//
// Polynomials are ordered by height (degree plus the sum of the enumeration
// indices of their coefficients), then degree, number of terms, support in
// lexicographic order and coefficient indices. Each one in turn takes the
// smallest free index above its degree bound. Only indices up to a fixed
// horizon are materialized.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "radalg/errors.hpp"
#include "radalg/field.hpp"
#include "radalg/poly.hpp"
#include "radalg/word.hpp"

namespace radalg {

/// 3^(2d+2) (d+1)^2, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> degree_bound(std::uint64_t d);

/// All words over {x,y,z} of length 1..d, shorter first, then lexicographic.
std::vector<Monomial> words_up_to(std::size_t d);

template <FieldScalar S>
class PolyEnumerator {
public:
    explicit PolyEnumerator(std::uint64_t horizon) : horizon_(horizon), slots_(horizon + 1, npos) { build(); }

    std::uint64_t horizon() const { return horizon_; }

    bool is_in_Z(std::uint64_t index) const {
        check(index);
        return slots_[index] != npos;
    }

    std::optional<Poly<S>> enumerate_f(std::uint64_t index) const {
        check(index);
        if (slots_[index] == npos) return std::nullopt;
        return polys_[slots_[index]];
    }

    /// |Z ∩ [1, n]|
    std::uint64_t count_in_Z(std::uint64_t n) const {
        check(n);
        std::uint64_t c = 0;
        for (std::uint64_t i = 1; i <= n; ++i) c += slots_[i] != npos;
        return c;
    }

    /// Index of f when it was placed at or below the horizon.
    std::optional<std::uint64_t> index_of(const Poly<S>& f) const {
        const auto it = by_text_.find(f.to_string());
        if (it == by_text_.end()) return std::nullopt;
        return indices_[it->second];
    }

    std::size_t placed() const { return polys_.size(); }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    void check(std::uint64_t index) const {
        if (index > horizon_)
            throw CapExceeded("enumeration index " + std::to_string(index) + " beyond the materialized horizon " +
                              std::to_string(horizon_));
    }

    struct DegreeState {
        std::uint64_t degree = 0;
        std::uint64_t bound = 0;
        std::uint64_t next = 0;  // candidate slot, never decreases
        std::vector<Monomial> words;
        std::size_t first_top = 0;  // index of the first word of length `degree`
        bool active = true;
    };

    void build() {
        std::vector<DegreeState> degrees;
        for (std::uint64_t d = 1;; ++d) {
            const auto b = degree_bound(d);
            if (!b || *b >= horizon_) break;
            DegreeState st;
            st.degree = d;
            st.bound = *b;
            st.next = *b + 1;
            st.words = words_up_to(d);
            st.first_top = st.words.size() - static_cast<std::size_t>(ipow3(d));
            degrees.push_back(std::move(st));
        }
        const auto card = S::cardinality();
        for (std::uint64_t h = 2;; ++h) {
            bool any = false;
            for (auto& st : degrees) {
                if (!st.active) continue;
                if (card) {
                    // Heights beyond every word carrying the largest index are empty.
                    const std::uint64_t max_h = st.degree + st.words.size() * (*card - 1);
                    if (h > max_h) {
                        st.active = false;
                        continue;
                    }
                }
                any = true;
                if (h <= st.degree) continue;
                emit_height(st, h - st.degree);
            }
            if (!any) break;
        }
    }

    static std::uint64_t ipow3(std::uint64_t d) {
        std::uint64_t r = 1;
        for (std::uint64_t k = 0; k < d; ++k) r *= 3;
        return r;
    }

    // Polynomials of degree st.degree whose coefficient indices sum to `weight`.
    void emit_height(DegreeState& st, std::uint64_t weight) {
        const auto card = S::cardinality();
        const std::uint64_t max_idx = card ? *card - 1 : weight;
        const std::size_t nw = st.words.size();
        for (std::size_t t = 1; t <= nw && t <= weight; ++t) {
            if (card && t * max_idx < weight) continue;
            std::vector<std::size_t> support(t);
            for (std::size_t k = 0; k < t; ++k) support[k] = k;
            do {
                if (support.back() < st.first_top) continue;
                std::vector<std::uint64_t> coeffs(t, 1);
                if (!first_composition(coeffs, weight, max_idx)) continue;
                do {
                    if (!place(st, support, coeffs)) return;
                } while (next_composition(coeffs, max_idx));
            } while (next_combination(support, nw));
        }
    }

    bool place(DegreeState& st, const std::vector<std::size_t>& support, const std::vector<std::uint64_t>& coeffs) {
        while (st.next <= horizon_ && slots_[st.next] != npos) ++st.next;
        if (st.next > horizon_) {
            st.active = false;
            return false;
        }
        Poly<S> f;
        for (std::size_t k = 0; k < support.size(); ++k)
            f.add(HomogPoly<S>::monomial(st.words[support[k]], S::nth(coeffs[k])));
        slots_[st.next] = polys_.size();
        by_text_.emplace(f.to_string(), polys_.size());
        indices_.push_back(st.next);
        polys_.push_back(std::move(f));
        return true;
    }

    static bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
        const std::size_t t = c.size();
        for (std::size_t k = t; k-- > 0;) {
            if (c[k] < n - t + k) {
                ++c[k];
                for (std::size_t m = k + 1; m < t; ++m) c[m] = c[m - 1] + 1;
                return true;
            }
        }
        return false;
    }

    // Lexicographically smallest composition of `weight` into c.size() parts in
    // [1, max_idx]: the tail is packed as full as possible.
    static bool first_composition(std::vector<std::uint64_t>& c, std::uint64_t weight, std::uint64_t max_idx) {
        const std::size_t t = c.size();
        if (weight < t || weight > t * max_idx) return false;
        std::uint64_t rest = weight;
        for (std::size_t k = 0; k < t; ++k) {
            const std::uint64_t after = t - k - 1;
            const std::uint64_t lo = rest > after * max_idx ? rest - after * max_idx : 1;
            c[k] = std::max<std::uint64_t>(lo, 1);
            rest -= c[k];
        }
        return true;
    }

    static bool next_composition(std::vector<std::uint64_t>& c, std::uint64_t max_idx) {
        const std::size_t t = c.size();
        if (t < 2) return false;
        // Find the rightmost position k < t-1 that can grow while the tail
        // still admits a composition of the remaining weight.
        std::uint64_t tail = c[t - 1];
        for (std::size_t k = t - 1; k-- > 0;) {
            const std::uint64_t slots = t - k - 1;
            if (c[k] < max_idx && tail > slots) {
                ++c[k];
                std::vector<std::uint64_t> rest(slots, 1);
                first_composition(rest, tail - 1, max_idx);
                for (std::size_t m = 0; m < slots; ++m) c[k + 1 + m] = rest[m];
                return true;
            }
            tail += c[k];
        }
        return false;
    }

    std::uint64_t horizon_;
    std::vector<std::size_t> slots_;
    std::vector<Poly<S>> polys_;
    std::vector<std::uint64_t> indices_;
    std::unordered_map<std::string, std::size_t> by_text_;
};

}  // namespace radalg
