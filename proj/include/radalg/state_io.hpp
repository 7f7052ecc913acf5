#pragma once

// Plain-text save/load of a built tower. Every stored scalar is written with
// the field's own to_string, so a round trip is exact.
//
//   radalg-state 1
//   field gf2
//   schedule windows:(3,8)
//   provider zero 0
//   depth 14
//   level <n> <case|-> <dim>
//   labels <l:r>...
//   m <m1|-> <m2|-> <i|-> <j|->
//   mu <in_dim> <nonzero entries>  then lines "a b o value"
//   wproj <slot_count> <nonzero> then lines "slot c value"
//   fvec <count>, each "v <nnz> idx:value ..."
//   end

#include <array>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "radalg/construction.hpp"
#include "radalg/errors.hpp"
#include "radalg/schedule.hpp"

namespace radalg {

inline constexpr const char* state_magic = "radalg-state";
inline constexpr int state_version = 1;

template <FieldScalar S>
void save_state(std::ostream& os, const Tower<S>& tower) {
    os << state_magic << ' ' << state_version << '\n';
    os << "field " << S::field_name() << '\n';
    os << "schedule " << tower.schedule().to_string() << '\n';
    os << "provider " << tower.provider().name();
    if (const auto* rp = dynamic_cast<const ResidualProvider<S>*>(&tower.provider())) {
        os << ' ' << rp->forms().size();
        for (const auto& f : rp->forms()) os << ' ' << f[0].to_string() << ' ' << f[1].to_string() << ' ' << f[2].to_string();
    } else {
        os << " 0";
    }
    os << '\n' << "depth " << tower.depth() << '\n';
    const auto opt = [](const auto& o) { return o ? std::to_string(*o) : std::string("-"); };
    for (const auto& l : tower.levels()) {
        os << "level " << l.n << ' ' << (l.produced_by ? to_string(*l.produced_by) : "-") << ' ' << l.dim << '\n';
        os << "labels";
        for (const auto& b : l.vbasis) os << ' ' << b.left << ':' << b.right;
        os << '\n';
        os << "m " << opt(l.m1_index) << ' ' << opt(l.m2_index) << ' '
           << (l.selected_slots ? std::to_string(l.selected_slots->first) : "-") << ' '
           << (l.selected_slots ? std::to_string(l.selected_slots->second) : "-") << '\n';
        std::size_t nnz = 0;
        for (const auto& e : l.mu.entries) nnz += e.size();
        os << "mu " << l.mu.in_dim << ' ' << l.mu.out_dim << ' ' << nnz << '\n';
        for (std::size_t k = 0; k < l.mu.entries.size(); ++k)
            for (const auto& [o, s] : l.mu.entries[k])
                os << k / l.mu.in_dim << ' ' << k % l.mu.in_dim << ' ' << o << ' ' << s.to_string() << '\n';
        std::size_t wn = 0;
        for (const auto& s : l.wproj_data) wn += !s.is_zero();
        os << "wproj " << l.slot_count() << ' ' << wn << '\n';
        for (std::size_t k = 0; k < l.wproj_data.size(); ++k)
            if (!l.wproj_data[k].is_zero()) os << k / l.dim << ' ' << k % l.dim << ' ' << l.wproj_data[k].to_string() << '\n';
        os << "fvec " << l.provider_vectors.size() << '\n';
        for (const auto& v : l.provider_vectors) {
            std::size_t c = 0;
            for (const auto& s : v) c += !s.is_zero();
            os << "v " << v.size() << ' ' << c;
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!v[k].is_zero()) os << ' ' << k << ':' << v[k].to_string();
            os << '\n';
        }
    }
    os << "end\n";
}

namespace detail {

class StateReader {
public:
    explicit StateReader(std::istream& is) : is_(is) {}

    std::string word() {
        std::string t;
        if (!(is_ >> t)) throw ConfigError("state file truncated");
        return t;
    }
    void expect(const std::string& kw) {
        const auto t = word();
        if (t != kw) throw ConfigError("state file: expected '" + kw + "', found '" + t + "'");
    }
    std::uint64_t number() {
        const auto t = word();
        try {
            std::size_t pos = 0;
            const auto v = std::stoull(t, &pos);
            if (pos != t.size()) throw std::invalid_argument(t);
            return v;
        } catch (const std::exception&) {
            throw ConfigError("state file: expected a number, found '" + t + "'");
        }
    }
    template <class T>
    std::optional<T> maybe() {
        const auto t = word();
        if (t == "-") return std::nullopt;
        try {
            return static_cast<T>(std::stoull(t));
        } catch (const std::exception&) {
            throw ConfigError("state file: expected a number or '-', found '" + t + "'");
        }
    }
    std::pair<std::uint64_t, std::string> indexed() {
        const auto t = word();
        const auto c = t.find(':');
        if (c == std::string::npos) throw ConfigError("state file: malformed entry '" + t + "'");
        return {std::stoull(t.substr(0, c)), t.substr(c + 1)};
    }

private:
    std::istream& is_;
};

inline StepCase parse_case(const std::string& s) {
    for (auto c : {StepCase::case1, StepCase::case2, StepCase::case3})
        if (to_string(c) == s) return c;
    throw ConfigError("state file: unknown case '" + s + "'");
}

}  // namespace detail

/// Reads a state file written by save_state; the field must match S.
template <FieldScalar S>
Tower<S> load_state(std::istream& is) {
    detail::StateReader r(is);
    r.expect(state_magic);
    if (r.number() != state_version) throw ConfigError("state file: unsupported version");
    r.expect("field");
    const auto field = r.word();
    if (field != S::field_name())
        throw ConfigError("state file was built over " + field + ", not " + S::field_name());
    r.expect("schedule");
    auto sched = Schedule::parse(r.word());
    r.expect("provider");
    const auto pname = r.word();
    const auto nforms = r.number();
    std::shared_ptr<const FProvider<S>> provider;
    if (pname == "residual") {
        std::vector<std::array<S, 3>> forms(nforms);
        for (auto& f : forms)
            for (auto& s : f) s = S::parse(r.word());
        provider = std::make_shared<const ResidualProvider<S>>(std::move(forms));
    } else if (pname != "zero") {
        throw ConfigError("state file: unknown provider '" + pname + "'");
    }
    r.expect("depth");
    const auto depth = r.number();
    std::vector<LevelData<S>> levels;
    for (std::uint64_t n = 0; n <= depth; ++n) {
        LevelData<S> l;
        r.expect("level");
        l.n = r.number();
        if (l.n != n) throw ConfigError("state file: levels out of order");
        if (const auto c = r.word(); c != "-") l.produced_by = detail::parse_case(c);
        l.dim = r.number();
        r.expect("labels");
        for (std::size_t a = 0; a < l.dim; ++a) {
            const auto [left, right] = r.indexed();
            l.vbasis.push_back(BasisLabel{static_cast<std::uint32_t>(left), static_cast<std::uint32_t>(std::stoull(right))});
        }
        r.expect("m");
        l.m1_index = r.maybe<std::uint32_t>();
        l.m2_index = r.maybe<std::uint32_t>();
        const auto si = r.maybe<std::uint64_t>();
        const auto sj = r.maybe<std::uint64_t>();
        if (si && sj) l.selected_slots = std::make_pair(*si, *sj);
        r.expect("mu");
        const auto in_dim = r.number();
        const auto out_dim = r.number();
        l.mu = BilinearTable<S>::zero(in_dim, out_dim);
        for (auto k = r.number(); k > 0; --k) {
            const auto a = r.number(), b = r.number(), o = r.number();
            if (a >= in_dim || b >= in_dim || o >= out_dim) throw ConfigError("state file: table index out of range");
            l.mu.entries[a * in_dim + b].emplace_back(static_cast<std::uint32_t>(o), S::parse(r.word()));
        }
        r.expect("wproj");
        const auto slots = r.number();
        l.wproj_data.assign(slots * l.dim, S{});
        for (auto k = r.number(); k > 0; --k) {
            const auto s = r.number(), c = r.number();
            if (s >= slots || c >= l.dim) throw ConfigError("state file: slot index out of range");
            l.wproj_data[s * l.dim + c] = S::parse(r.word());
        }
        l.nonzero_slots = find_nonzero_slots(l.wproj_data, l.dim);
        r.expect("fvec");
        for (auto k = r.number(); k > 0; --k) {
            r.expect("v");
            Vector<S> v(r.number());
            for (auto c = r.number(); c > 0; --c) {
                const auto [idx, val] = r.indexed();
                if (idx >= v.size()) throw ConfigError("state file: vector index out of range");
                v[idx] = S::parse(val);
            }
            l.provider_vectors.push_back(std::move(v));
        }
        if (l.produced_by == StepCase::case3) l.provider_name = pname;
        levels.push_back(std::move(l));
    }
    r.expect("end");
    return Tower<S>(std::move(sched), std::move(levels), std::move(provider));
}

/// Reads only the field line, so a caller can pick the scalar type.
inline std::string peek_state_field(std::istream& is) {
    detail::StateReader r(is);
    r.expect(state_magic);
    r.number();
    r.expect("field");
    return r.word();
}

}  // namespace radalg
