#pragma once

// Words over the alphabet {x, y, z}, packed 2 bits per letter.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace radalg {

enum class Letter : std::uint8_t { x = 0, y = 1, z = 2 };

char letter_char(Letter l);

/// A monomial of the free algebra on x, y, z. Letters are stored most
/// significant first inside each 64-bit block, so comparing blocks compares
/// words lexicographically (x < y < z). The empty word is the unit.
class Monomial {
public:
    static constexpr std::size_t letters_per_block = 32;

    Monomial() = default;

    /// Parses "xyzx"; "1" (or "") is the unit.
    static Monomial from_string(std::string_view text);
    /// The {x,y}-word whose i-th letter is y iff bit (length-1-i) of index is set.
    static Monomial from_index(std::uint64_t index, std::size_t length);
    static Monomial power(Letter l, std::size_t n);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    Letter operator[](std::size_t i) const {
        const auto shift = 62 - 2 * (i % letters_per_block);
        return static_cast<Letter>((blocks_[i / letters_per_block] >> shift) & 3u);
    }

    void push_back(Letter l);
    void append(const Monomial& other);
    Monomial operator*(const Monomial& other) const;
    Monomial slice(std::size_t pos, std::size_t len) const;

    bool has_z() const;
    std::size_t count(Letter l) const;
    /// Inverse of from_index; nullopt if the word contains z or is too long.
    std::optional<std::uint64_t> xy_index() const;

    std::string to_string() const;

    /// Shorter words first, then lexicographic.
    std::strong_ordering operator<=>(const Monomial& o) const;
    bool operator==(const Monomial& o) const = default;

    std::size_t hash() const;

private:
    std::vector<std::uint64_t> blocks_;
    std::size_t size_ = 0;
};

}  // namespace radalg

template <>
struct std::hash<radalg::Monomial> {
    std::size_t operator()(const radalg::Monomial& m) const noexcept { return m.hash(); }
};
