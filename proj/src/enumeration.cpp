#include "radalg/enumeration.hpp"

namespace radalg {

std::optional<std::uint64_t> degree_bound(std::uint64_t d) {
    unsigned __int128 v = 1;
    const unsigned __int128 limit = UINT64_MAX;
    for (std::uint64_t k = 0; k < 2 * d + 2; ++k) {
        v *= 3;
        if (v > limit) return std::nullopt;
    }
    v *= static_cast<unsigned __int128>(d + 1) * (d + 1);
    if (v > limit) return std::nullopt;
    return static_cast<std::uint64_t>(v);
}

std::vector<Monomial> words_up_to(std::size_t d) {
    std::vector<Monomial> out;
    std::vector<Monomial> layer{Monomial{}};
    for (std::size_t len = 1; len <= d; ++len) {
        std::vector<Monomial> next;
        next.reserve(layer.size() * 3);
        for (const auto& w : layer)
            for (auto l : {Letter::x, Letter::y, Letter::z}) {
                Monomial m = w;
                m.push_back(l);
                next.push_back(std::move(m));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace radalg
