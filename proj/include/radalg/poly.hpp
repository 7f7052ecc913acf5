#pragma once

// Homogeneous and general polynomials of the free associative algebra on
// x, y, z, plus the x-count word sums w(n, i) and the binomial (x + Xy)^(2^n).

#include <bit>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "radalg/errors.hpp"
#include "radalg/field.hpp"
#include "radalg/word.hpp"

namespace radalg {

template <FieldScalar S>
class HomogPoly {
public:
    using Terms = std::map<Monomial, S>;

    explicit HomogPoly(std::size_t degree = 0) : degree_(degree) {}

    static HomogPoly monomial(const Monomial& m, const S& c = one<S>()) {
        HomogPoly f(m.size());
        f.add_term(m, c);
        return f;
    }

    std::size_t degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    S coefficient(const Monomial& m) const {
        const auto it = terms_.find(m);
        return it == terms_.end() ? S{} : it->second;
    }

    void add_term(const Monomial& m, const S& c) {
        if (m.size() != degree_)
            throw std::invalid_argument("term " + m.to_string() + " does not have degree " + std::to_string(degree_));
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    HomogPoly& operator+=(const HomogPoly& o) {
        check_same_degree(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    HomogPoly& operator-=(const HomogPoly& o) {
        check_same_degree(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    HomogPoly operator+(const HomogPoly& o) const { return HomogPoly(*this) += o; }
    HomogPoly operator-(const HomogPoly& o) const { return HomogPoly(*this) -= o; }
    HomogPoly operator-() const { return scaled(-one<S>()); }

    HomogPoly scaled(const S& a) const {
        HomogPoly out(degree_);
        if (a.is_zero()) return out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * a);
        return out;
    }

    bool operator==(const HomogPoly& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }

private:
    void check_same_degree(const HomogPoly& o) const {
        if (o.degree_ != degree_ && !o.is_zero())
            throw std::invalid_argument("adding homogeneous polynomials of different degrees");
    }

    std::size_t degree_;
    Terms terms_;
};

/// Non-commutative product: words concatenate.
template <FieldScalar S>
HomogPoly<S> multiply(const HomogPoly<S>& f, const HomogPoly<S>& g) {
    HomogPoly<S> out(f.degree() + g.degree());
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms()) out.add_term(a * b, ca * cb);
    return out;
}

template <FieldScalar S>
HomogPoly<S> operator*(const HomogPoly<S>& f, const HomogPoly<S>& g) {
    return multiply(f, g);
}

/// A polynomial as its homogeneous components (zero components absent).
template <FieldScalar S>
class Poly {
public:
    using Components = std::map<std::size_t, HomogPoly<S>>;

    Poly() = default;
    Poly(const HomogPoly<S>& h) { add(h); }  // NOLINT: implicit on purpose

    static Poly parse(std::string_view text);

    const Components& components() const { return components_; }
    bool is_zero() const { return components_.empty(); }
    bool has_constant_term() const { return components_.contains(0); }
    std::size_t degree() const { return components_.empty() ? 0 : components_.rbegin()->first; }

    HomogPoly<S> component(std::size_t d) const {
        const auto it = components_.find(d);
        return it == components_.end() ? HomogPoly<S>(d) : it->second;
    }

    void add(const HomogPoly<S>& h) {
        if (h.is_zero()) return;
        auto [it, inserted] = components_.try_emplace(h.degree(), h);
        if (inserted) return;
        it->second += h;
        if (it->second.is_zero()) components_.erase(it);
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [d, h] : o.components_) add(h);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [d, h] : o.components_) add(-h);
        return *this;
    }
    Poly operator+(const Poly& o) const { return Poly(*this) += o; }
    Poly operator-(const Poly& o) const { return Poly(*this) -= o; }
    Poly operator-() const { return scaled(-one<S>()); }

    Poly scaled(const S& a) const {
        Poly out;
        for (const auto& [d, h] : components_) out.add(h.scaled(a));
        return out;
    }

    Poly operator*(const Poly& o) const {
        Poly out;
        for (const auto& [d1, f] : components_)
            for (const auto& [d2, g] : o.components_) out.add(multiply(f, g));
        return out;
    }

    Poly pow(std::size_t k) const {
        if (k == 0) return Poly(HomogPoly<S>::monomial(Monomial{}));
        Poly out = *this;
        for (std::size_t i = 1; i < k; ++i) out = out * *this;
        return out;
    }

    bool operator==(const Poly& o) const { return components_ == o.components_; }

    /// Canonical text: "c*word" terms by degree then word order, joined by " + ".
    std::string to_string() const {
        if (components_.empty()) return "0";
        std::string out;
        for (const auto& [d, h] : components_)
            for (const auto& [m, c] : h.terms()) {
                if (!out.empty()) out += " + ";
                out += c.to_string();
                out += '*';
                out += m.to_string();
            }
        return out;
    }

private:
    Components components_;
};

template <FieldScalar S>
Poly<S> Poly<S>::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '\n') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty polynomial text");
    Poly out;
    if (s == "0") return out;

    std::vector<std::string> terms;
    std::string cur;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        const bool starts_term = i > 0 && (c == '+' || (c == '-' && s[i - 1] != '+' && s[i - 1] != '*'));
        if (starts_term) {
            terms.push_back(cur);
            cur.clear();
            if (c == '-') cur.push_back('-');
            continue;
        }
        if (i == 0 && c == '+') continue;
        cur.push_back(c);
    }
    terms.push_back(cur);

    const auto is_word = [](std::string_view w) {
        if (w == "1") return true;
        if (w.empty()) return false;
        for (char c : w)
            if (c != 'x' && c != 'y' && c != 'z') return false;
        return true;
    };
    for (const auto& t : terms) {
        if (t.empty()) throw std::invalid_argument("empty term in polynomial '" + std::string(text) + "'");
        const auto star = t.find('*');
        S coeff = one<S>();
        std::string word;
        if (star != std::string::npos) {
            coeff = S::parse(t.substr(0, star));
            word = t.substr(star + 1);
        } else {
            std::string_view body = t;
            if (body.front() == '-') {
                coeff = -coeff;
                body.remove_prefix(1);
            }
            if (is_word(body)) {
                word = std::string(body);
            } else {
                coeff = S::parse(t);
                word = "1";
            }
        }
        if (!is_word(word)) throw std::invalid_argument("invalid word '" + word + "' in polynomial");
        out.add(HomogPoly<S>::monomial(Monomial::from_string(word), coeff));
    }
    return out;
}

/// Sum of all {x,y}-words of length n with exactly i letters x.
template <FieldScalar S>
HomogPoly<S> w_poly(std::size_t n, std::size_t i, std::size_t cap = 16) {
    if (i > n) throw std::invalid_argument("w_poly requires i <= n");
    if (n > cap)
        throw CapExceeded("w(" + std::to_string(n) + "," + std::to_string(i) +
                          ") exceeds the explicit enumeration cap " + std::to_string(cap) +
                          "; use the projected w-coordinates of the construction instead");
    HomogPoly<S> out(n);
    const std::size_t ys = n - i;
    if (ys == 0) {
        out.add_term(Monomial::power(Letter::x, n), one<S>());
        return out;
    }
    // Gosper's hack over masks with `ys` bits set (bit set = y).
    std::uint64_t mask = (std::uint64_t{1} << ys) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
        out.add_term(Monomial::from_index(mask, n), one<S>());
        const std::uint64_t c = mask & (~mask + 1);
        const std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return out;
}

/// X-coefficients of (x + X y)^(2^n), computed by repeated squaring in A[X].
template <FieldScalar S>
std::vector<HomogPoly<S>> expand_binomial(std::size_t n, std::size_t cap = 16) {
    if (n >= 63 || (std::size_t{1} << n) > cap)
        throw CapExceeded("(x+Xy)^(2^" + std::to_string(n) + ") exceeds the explicit enumeration cap " +
                          std::to_string(cap));
    std::vector<HomogPoly<S>> coeffs{HomogPoly<S>::monomial(Monomial::from_string("x")),
                                     HomogPoly<S>::monomial(Monomial::from_string("y"))};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t deg = coeffs.front().degree();
        std::vector<HomogPoly<S>> next(2 * coeffs.size() - 1, HomogPoly<S>(2 * deg));
        for (std::size_t a = 0; a < coeffs.size(); ++a)
            for (std::size_t b = 0; b < coeffs.size(); ++b) next[a + b] += multiply(coeffs[a], coeffs[b]);
        coeffs = std::move(next);
    }
    return coeffs;
}

}  // namespace radalg
