#include "radalg/word.hpp"

#include <stdexcept>

namespace radalg {

char letter_char(Letter l) {
    switch (l) {
        case Letter::x: return 'x';
        case Letter::y: return 'y';
        case Letter::z: return 'z';
    }
    return '?';
}

Monomial Monomial::from_string(std::string_view text) {
    Monomial m;
    if (text == "1") return m;
    for (char c : text) {
        switch (c) {
            case 'x': m.push_back(Letter::x); break;
            case 'y': m.push_back(Letter::y); break;
            case 'z': m.push_back(Letter::z); break;
            default: throw std::invalid_argument(std::string("invalid letter '") + c + "' in word");
        }
    }
    return m;
}

Monomial Monomial::from_index(std::uint64_t index, std::size_t length) {
    if (length > 64) throw std::invalid_argument("from_index supports words of length <= 64");
    Monomial m;
    for (std::size_t i = 0; i < length; ++i) {
        const auto bit = (index >> (length - 1 - i)) & 1u;
        m.push_back(bit ? Letter::y : Letter::x);
    }
    return m;
}

Monomial Monomial::power(Letter l, std::size_t n) {
    Monomial m;
    for (std::size_t i = 0; i < n; ++i) m.push_back(l);
    return m;
}

void Monomial::push_back(Letter l) {
    if (size_ % letters_per_block == 0) blocks_.push_back(0);
    const auto shift = 62 - 2 * (size_ % letters_per_block);
    blocks_.back() |= static_cast<std::uint64_t>(l) << shift;
    ++size_;
}

void Monomial::append(const Monomial& other) {
    if (size_ % letters_per_block == 0) {
        blocks_.insert(blocks_.end(), other.blocks_.begin(), other.blocks_.end());
        size_ += other.size_;
        return;
    }
    blocks_.reserve((size_ + other.size_) / letters_per_block + 1);
    for (std::size_t i = 0; i < other.size_; ++i) push_back(other[i]);
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out = *this;
    out.append(other);
    return out;
}

Monomial Monomial::slice(std::size_t pos, std::size_t len) const {
    if (pos + len > size_) throw std::out_of_range("Monomial::slice out of range");
    Monomial out;
    for (std::size_t i = 0; i < len; ++i) out.push_back((*this)[pos + i]);
    return out;
}

bool Monomial::has_z() const {
    for (std::size_t i = 0; i < size_; ++i)
        if ((*this)[i] == Letter::z) return true;
    return false;
}

std::size_t Monomial::count(Letter l) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < size_; ++i) n += (*this)[i] == l;
    return n;
}

std::optional<std::uint64_t> Monomial::xy_index() const {
    if (size_ > 64) return std::nullopt;
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < size_; ++i) {
        const auto l = (*this)[i];
        if (l == Letter::z) return std::nullopt;
        idx = (idx << 1) | (l == Letter::y ? 1u : 0u);
    }
    return idx;
}

std::string Monomial::to_string() const {
    if (size_ == 0) return "1";
    std::string s;
    s.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) s.push_back(letter_char((*this)[i]));
    return s;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    if (auto c = size_ <=> o.size_; c != 0) return c;
    // Unused low bits of the last block are zero in both words.
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        if (auto c = blocks_[b] <=> o.blocks_[b]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
    std::size_t h = size_ * 0x9e3779b97f4a7c15ull;
    for (auto b : blocks_) h ^= b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

}  // namespace radalg
