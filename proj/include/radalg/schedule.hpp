#pragma once

// Which levels lie in the growth set S, and which of the three extension
// cases applies at each level.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace radalg {

enum class StepCase { case1, case2, case3 };

std::string to_string(StepCase c);

/// A block of i + 1 consecutive levels {e - i - 1, ..., e - 1} inside S.
struct Window {
    unsigned i = 0;
    std::uint64_t e = 0;

    std::uint64_t first() const { return e - i - 1; }
    std::uint64_t last() const { return e - 1; }
    bool operator==(const Window&) const = default;
};

/// e(i) = 2^(2^(2^(2^i))) when it fits in 64 bits.
std::optional<std::uint64_t> tower_e(unsigned i);

/// True iff e(i) - i - 1 > bound for every i >= 5, certified by comparing
/// iterated exponents rather than materializing e(5).
bool paper_windows_exceed(std::uint64_t bound);

class Schedule {
public:
    enum class Kind { paper, windows };

    static constexpr std::uint64_t default_guard_bound = std::uint64_t{1} << 20;
    static constexpr unsigned default_max_window = 3;

    /// The set S = union over i >= 5 of {e(i)-i-1, ..., e(i)-1}, queryable only
    /// below guard_bound.
    static Schedule paper(std::uint64_t guard_bound = default_guard_bound);
    /// Validated list of test windows; an empty list is the trivial schedule.
    static Schedule windows(std::vector<Window> windows, unsigned max_window = default_max_window);
    static Schedule trivial() { return windows({}); }
    /// "paper", "trivial", or "windows:(i,e);(i,e);..."
    static Schedule parse(std::string_view spec, unsigned max_window = default_max_window);

    Kind kind() const { return kind_; }
    const std::vector<Window>& window_list() const { return windows_; }
    std::uint64_t guard_bound() const { return guard_bound_; }

    bool in_S(std::uint64_t n) const;
    StepCase case_of(std::uint64_t n) const;
    /// i when n = e - 1 closes the window (i, e).
    std::optional<unsigned> window_param(std::uint64_t n) const;
    /// The window containing n, if any.
    std::optional<Window> window_containing(std::uint64_t n) const;
    /// Length of the maximal run of consecutive S-levels ending at n.
    std::uint64_t run_length(std::uint64_t n) const;

    std::string to_string() const;

private:
    Kind kind_ = Kind::windows;
    std::vector<Window> windows_;
    std::uint64_t guard_bound_ = default_guard_bound;
};

}  // namespace radalg
