#include "radalg/report.hpp"

#include <algorithm>
#include <sstream>

namespace radalg {

bool Report::all_pass() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* Report::find(std::string_view name) const {
    for (const auto& c : checks_)
        if (c.name == name) return &c;
    return nullptr;
}

Json Report::to_json() const {
    Json out;
    out["pass"] = all_pass();
    Json arr = Json::array();
    for (const auto& c : checks_) {
        Json j;
        j["name"] = c.name;
        j["property"] = c.property;
        j["pass"] = c.pass;
        j["instances"] = c.instances;
        j["counterexample"] = c.counterexample;
        arr.push_back(std::move(j));
    }
    out["checks"] = std::move(arr);
    return out;
}

std::string Report::to_table() const {
    std::size_t width = 5;
    for (const auto& c : checks_) width = std::max(width, c.name.size());
    std::ostringstream os;
    for (const auto& c : checks_) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name << std::string(width - c.name.size() + 2, ' ') << c.instances
           << "  " << c.property << '\n';
        if (!c.pass) os << "     counterexample: " << c.counterexample.dump() << '\n';
    }
    os << (all_pass() ? "all checks passed" : "some checks FAILED") << '\n';
    return os.str();
}

}  // namespace radalg
