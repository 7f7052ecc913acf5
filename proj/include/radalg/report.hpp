#pragma once

// Named pass/fail checks with machine-readable counterexamples.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "radalg/field.hpp"
#include "radalg/linalg.hpp"

namespace radalg {

using Json = nlohmann::ordered_json;

struct CheckResult {
    CheckResult() = default;
    CheckResult(std::string n, std::string p) : name(std::move(n)), property(std::move(p)) {}

    std::string name;
    std::string property;  // the asserted statement, in words
    bool pass = true;
    std::uint64_t instances = 0;
    Json counterexample;  // null on success

    /// Records a failing instance; only the first counterexample is kept.
    void fail(Json payload) {
        if (pass) counterexample = std::move(payload);
        pass = false;
    }
};

class Report {
public:
    void add(CheckResult c) { checks_.push_back(std::move(c)); }
    void merge(const Report& o) { checks_.insert(checks_.end(), o.checks_.begin(), o.checks_.end()); }

    const std::vector<CheckResult>& checks() const { return checks_; }
    bool all_pass() const;
    const CheckResult* find(std::string_view name) const;

    Json to_json() const;
    std::string to_table() const;

private:
    std::vector<CheckResult> checks_;
};

template <FieldScalar S>
Json to_json(const Vector<S>& v) {
    Json a = Json::array();
    for (const auto& s : v) a.push_back(s.to_string());
    return a;
}

}  // namespace radalg
