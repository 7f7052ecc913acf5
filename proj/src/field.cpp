#include "radalg/field.hpp"

#include <numeric>

namespace radalg {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Rational Rational::parse(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    const mpz_class nz(n);
    const mpz_class dz{std::string(den)};
    if (dz == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(nz, dz));
}

Rational Rational::nth(std::uint64_t k) {
    if (k == 0) return Rational();
    --k;
    // Each height h = |p| + q >= 2 contributes 2 * #{q : 1 <= q < h, gcd(h - q, q) = 1}.
    for (std::uint64_t h = 2;; ++h) {
        for (std::uint64_t q = 1; q < h; ++q) {
            const auto p = h - q;
            if (std::gcd(p, q) != 1) continue;
            if (k < 2) {
                mpq_class v(mpz_class(static_cast<unsigned long>(p)), mpz_class(static_cast<unsigned long>(q)));
                return k == 0 ? Rational(v) : Rational(mpq_class(-v));
            }
            k -= 2;
        }
    }
}

void ModP::set_modulus(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("GF(p) modulus must be a prime below 2^31, got " + std::to_string(p));
    modulus_ = p;
}

ModP ModP::parse(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num)) throw std::invalid_argument("malformed GF(p) element '" + std::string(text) + "'");
    const auto reduce = [](std::string_view s) {
        std::string t(s);
        if (t.front() == '+') t.erase(0, 1);
        mpz_class z(t);
        mpz_class r = z % modulus_;
        if (r < 0) r += modulus_;
        return ModP(static_cast<std::uint32_t>(r.get_ui()));
    };
    auto value = reduce(num);
    if (slash != std::string_view::npos) {
        const auto den = text.substr(slash + 1);
        if (!is_integer_literal(den)) throw std::invalid_argument("malformed GF(p) element '" + std::string(text) + "'");
        value = value / reduce(den);
    }
    return value;
}

ModP ModP::inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero");
    std::int64_t a = v_, m = modulus_, x0 = 1, x1 = 0;
    while (m != 0) {
        const auto q = a / m;
        a -= q * m;
        std::swap(a, m);
        x0 -= q * x1;
        std::swap(x0, x1);
    }
    return from_int(x0);
}

}  // namespace radalg
