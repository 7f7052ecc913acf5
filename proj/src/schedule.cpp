#include "radalg/schedule.hpp"

#include <algorithm>
#include <charconv>

#include "radalg/errors.hpp"

namespace radalg {

std::string to_string(StepCase c) {
    switch (c) {
        case StepCase::case1: return "case1";
        case StepCase::case2: return "case2";
        case StepCase::case3: return "case3";
    }
    return "?";
}

namespace {

// 2^v with saturation at 2^64 (returned as nullopt).
std::optional<std::uint64_t> pow2(std::uint64_t v) {
    if (v >= 64) return std::nullopt;
    return std::uint64_t{1} << v;
}

std::string window_text(const Window& w) {
    return "(" + std::to_string(w.i) + "," + std::to_string(w.e) + ")";
}

std::uint64_t parse_number(std::string_view s, std::string_view whole) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ConfigError("malformed number '" + std::string(s) + "' in schedule '" + std::string(whole) + "'");
    return v;
}

}  // namespace

std::optional<std::uint64_t> tower_e(unsigned i) {
    std::optional<std::uint64_t> v = pow2(i);
    for (int k = 0; k < 3 && v; ++k) v = pow2(*v);
    return v;
}

bool paper_windows_exceed(std::uint64_t bound) {
    // e is increasing in i and e(i) - i - 1 grows with i for i >= 5, so the
    // first window start is the minimum. e(5) = 2^(2^(2^32)); the middle
    // exponent 2^32 already exceeds 64, so e(5) >= 2^(2^64) > 2^64 > bound + 6.
    const auto inner = pow2(std::uint64_t{1} << 5);  // 2^32
    if (!inner) return false;
    if (*inner < 64) return false;
    return bound <= UINT64_MAX - 6;
}

Schedule Schedule::paper(std::uint64_t guard_bound) {
    if (!paper_windows_exceed(guard_bound))
        throw ConfigError("cannot certify the paper schedule below guard bound " + std::to_string(guard_bound));
    Schedule s;
    s.kind_ = Kind::paper;
    s.guard_bound_ = guard_bound;
    return s;
}

Schedule Schedule::windows(std::vector<Window> windows, unsigned max_window) {
    std::sort(windows.begin(), windows.end(), [](const Window& a, const Window& b) { return a.e < b.e; });
    for (std::size_t k = 0; k < windows.size(); ++k) {
        const auto& w = windows[k];
        if (w.i < 2) throw ConfigError("window " + window_text(w) + ": i must be at least 2");
        if (w.i > max_window)
            throw ConfigError("window " + window_text(w) + ": i exceeds the window cap " + std::to_string(max_window));
        if (w.e < static_cast<std::uint64_t>(w.i) + 2)
            throw ConfigError("window " + window_text(w) + ": first level e-i-1 must be at least 1");
        if (k > 0) {
            const auto& prev = windows[k - 1];
            // At least one level outside S between consecutive windows.
            if (w.first() < prev.last() + 2)
                throw ConfigError("window " + window_text(w) + " overlaps or touches window " + window_text(prev));
        }
    }
    Schedule s;
    s.kind_ = Kind::windows;
    s.windows_ = std::move(windows);
    return s;
}

Schedule Schedule::parse(std::string_view spec, unsigned max_window) {
    if (spec == "paper") return paper();
    if (spec == "trivial") return trivial();
    constexpr std::string_view prefix = "windows:";
    if (!spec.starts_with(prefix))
        throw ConfigError("schedule must be \"paper\", \"trivial\" or \"windows:(i,e);...\", got '" +
                          std::string(spec) + "'");
    std::string_view rest = spec.substr(prefix.size());
    std::vector<Window> ws;
    while (!rest.empty()) {
        const auto end = rest.find(';');
        std::string_view item = rest.substr(0, end);
        rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end + 1);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (item.empty()) continue;
        if (item.front() != '(' || item.back() != ')')
            throw ConfigError("malformed window '" + std::string(item) + "' in schedule '" + std::string(spec) + "'");
        item = item.substr(1, item.size() - 2);
        const auto comma = item.find(',');
        if (comma == std::string_view::npos)
            throw ConfigError("malformed window '(" + std::string(item) + ")' in schedule '" + std::string(spec) + "'");
        const auto i = parse_number(item.substr(0, comma), spec);
        const auto e = parse_number(item.substr(comma + 1), spec);
        if (i > 64) throw ConfigError("window i too large in schedule '" + std::string(spec) + "'");
        ws.push_back(Window{static_cast<unsigned>(i), e});
    }
    return windows(std::move(ws), max_window);
}

bool Schedule::in_S(std::uint64_t n) const {
    if (kind_ == Kind::paper) {
        if (n >= guard_bound_)
            throw ConfigError("schedule horizon exceeded: level " + std::to_string(n) + " >= guard bound " +
                              std::to_string(guard_bound_));
        return false;
    }
    return window_containing(n).has_value();
}

StepCase Schedule::case_of(std::uint64_t n) const {
    if (!in_S(n)) return StepCase::case2;
    return in_S(n + 1) ? StepCase::case1 : StepCase::case3;
}

std::optional<unsigned> Schedule::window_param(std::uint64_t n) const {
    for (const auto& w : windows_)
        if (w.last() == n) return w.i;
    return std::nullopt;
}

std::optional<Window> Schedule::window_containing(std::uint64_t n) const {
    for (const auto& w : windows_)
        if (n >= w.first() && n <= w.last()) return w;
    return std::nullopt;
}

std::uint64_t Schedule::run_length(std::uint64_t n) const {
    if (!in_S(n)) return 0;
    const auto w = window_containing(n);
    return n - w->first() + 1;
}

std::string Schedule::to_string() const {
    if (kind_ == Kind::paper) return "paper";
    if (windows_.empty()) return "trivial";
    std::string s = "windows:";
    for (std::size_t k = 0; k < windows_.size(); ++k) {
        if (k) s += ';';
        s += window_text(windows_[k]);
    }
    return s;
}

}  // namespace radalg
