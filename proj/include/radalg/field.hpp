#pragma once

// Exact scalar types. Every algorithm in the library is a template over a
// FieldScalar; the two concrete fields are the rationals and GF(p).

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace radalg {

template <class S>
concept FieldScalar = std::regular<S> &&
    requires(const S& a, const S& b, std::int64_t n, std::uint64_t k, std::string_view text) {
        { a + b } -> std::same_as<S>;
        { a - b } -> std::same_as<S>;
        { a * b } -> std::same_as<S>;
        { a / b } -> std::same_as<S>;
        { -a } -> std::same_as<S>;
        { a.is_zero() } -> std::same_as<bool>;
        { a.inverse() } -> std::same_as<S>;
        { a.to_string() } -> std::same_as<std::string>;
        { S::from_int(n) } -> std::same_as<S>;
        { S::parse(text) } -> std::same_as<S>;
        { S::nth(k) } -> std::same_as<S>;
        { S::cardinality() } -> std::same_as<std::optional<std::uint64_t>>;
        { S::field_name() } -> std::same_as<std::string>;
    };

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    static Rational from_int(std::int64_t n) { return Rational(mpq_class(static_cast<long>(n))); }
    static Rational parse(std::string_view text);
    /// Enumeration of Q: 0 first, then p/q ordered by |p| + q, then q, then sign.
    static Rational nth(std::uint64_t k);
    static std::optional<std::uint64_t> cardinality() { return std::nullopt; }
    static std::string field_name() { return "rationals"; }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(value_ + o.value_), Raw{}); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(value_ - o.value_), Raw{}); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(value_ * o.value_), Raw{}); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero");
        return Rational(mpq_class(value_ / o.value_), Raw{});
    }
    Rational operator-() const { return Rational(mpq_class(-value_), Raw{}); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

    bool operator==(const Rational& o) const { return value_ == o.value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return Rational(mpq_class(1 / value_), Raw{});
    }
    std::string to_string() const { return value_.get_str(); }
    const mpq_class& value() const { return value_; }

private:
    struct Raw {};
    // gmpxx arithmetic results are already canonical.
    Rational(mpq_class v, Raw) : value_(std::move(v)) {}
    mpq_class value_;
};

/// Element of the prime field GF(p). The modulus is process-wide and is
/// fixed once per session (see ModulusScope for tests that switch it).
class ModP {
public:
    ModP() = default;

    static void set_modulus(std::uint32_t p);
    static std::uint32_t modulus() { return modulus_; }

    static ModP from_int(std::int64_t n) {
        const auto p = static_cast<std::int64_t>(modulus_);
        auto r = n % p;
        if (r < 0) r += p;
        return ModP(static_cast<std::uint32_t>(r));
    }
    static ModP parse(std::string_view text);
    static ModP nth(std::uint64_t k) {
        if (k >= modulus_) throw std::out_of_range("GF(p) enumeration index out of range");
        return ModP(static_cast<std::uint32_t>(k));
    }
    static std::optional<std::uint64_t> cardinality() { return modulus_; }
    static std::string field_name() { return "gf" + std::to_string(modulus_); }

    ModP operator+(ModP o) const {
        auto s = static_cast<std::uint64_t>(v_) + o.v_;
        if (s >= modulus_) s -= modulus_;
        return ModP(static_cast<std::uint32_t>(s));
    }
    ModP operator-(ModP o) const { return *this + (-o); }
    ModP operator*(ModP o) const {
        return ModP(static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % modulus_));
    }
    ModP operator/(ModP o) const { return *this * o.inverse(); }
    ModP operator-() const { return ModP(v_ == 0 ? 0 : modulus_ - v_); }
    ModP& operator+=(ModP o) { return *this = *this + o; }
    ModP& operator-=(ModP o) { return *this = *this - o; }
    ModP& operator*=(ModP o) { return *this = *this * o; }

    bool operator==(const ModP& o) const = default;

    bool is_zero() const { return v_ == 0; }
    ModP inverse() const;
    std::string to_string() const { return std::to_string(v_); }
    std::uint32_t value() const { return v_; }

private:
    explicit ModP(std::uint32_t v) : v_(v) {}
    std::uint32_t v_ = 0;
    static inline std::uint32_t modulus_ = 2;
};

/// Sets the GF(p) modulus for the lifetime of the scope.
class ModulusScope {
public:
    explicit ModulusScope(std::uint32_t p) : saved_(ModP::modulus()) { ModP::set_modulus(p); }
    ~ModulusScope() { ModP::set_modulus(saved_); }
    ModulusScope(const ModulusScope&) = delete;
    ModulusScope& operator=(const ModulusScope&) = delete;

private:
    std::uint32_t saved_;
};

bool is_prime(std::uint64_t n);

template <FieldScalar S>
S one() {
    return S::from_int(1);
}

}  // namespace radalg
