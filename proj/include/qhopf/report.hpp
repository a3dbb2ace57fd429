#pragma once

// Verification reports: an ordered list of named checks plus verdict flags and
// witness data.

#include "qhopf/tensor.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qhopf {

inline std::vector<std::string> to_strings(const Vector& v)
{
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(s.to_string());
    return out;
}

struct Check {
    std::string name;
    std::string tag; // equation label the check implements
    bool passed = true;
    // Failing basis tuple for identities quantified over basis elements, or
    // the first differing coordinate index for identities between fixed
    // elements.
    MultiIndex witness;
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
    std::string detail;
};

inline MultiIndex first_difference(const Vector& a, const Vector& b)
{
    for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
        if (!(a[k] == b[k])) return {k};
    }
    return {std::min(a.size(), b.size())};
}

/// Identity between two fixed vectors.
inline Check check_equal(std::string name, std::string tag, const Vector& lhs, const Vector& rhs)
{
    Check c;
    c.name = std::move(name);
    c.tag = std::move(tag);
    if (lhs != rhs) {
        c.passed = false;
        c.witness = first_difference(lhs, rhs);
        c.lhs = to_strings(lhs);
        c.rhs = to_strings(rhs);
    }
    return c;
}

inline Check check_equal(std::string name, std::string tag, const Tensor& lhs, const Tensor& rhs)
{
    Check c;
    c.name = std::move(name);
    c.tag = std::move(tag);
    if (!(lhs == rhs)) {
        c.passed = false;
        if (lhs.legs() == rhs.legs()) {
            c.witness = lhs.unflatten(first_difference(lhs.coords(), rhs.coords()).front());
        } else {
            c.detail = "shape mismatch";
        }
        c.lhs = to_strings(lhs.coords());
        c.rhs = to_strings(rhs.coords());
    }
    return c;
}

inline Check check_true(std::string name, std::string tag, bool ok, std::string detail = {})
{
    Check c;
    c.name = std::move(name);
    c.tag = std::move(tag);
    c.passed = ok;
    if (!ok) c.detail = std::move(detail);
    return c;
}

/// Identity quantified over all basis tuples in the box `ranges`, visited in
/// lexicographic order; records the earliest failing tuple.
inline Check check_forall(std::string name, std::string tag, const std::vector<std::size_t>& ranges,
                          const std::function<std::pair<Vector, Vector>(const MultiIndex&)>& sides)
{
    Check c;
    c.name = std::move(name);
    c.tag = std::move(tag);
    MultiIndex idx(ranges.size(), 0);
    for (auto r : ranges) {
        if (r == 0) return c;
    }
    while (true) {
        auto [lhs, rhs] = sides(idx);
        if (lhs != rhs) {
            c.passed = false;
            c.witness = idx;
            c.lhs = to_strings(lhs);
            c.rhs = to_strings(rhs);
            return c;
        }
        bool exhausted = true;
        for (std::size_t l = ranges.size(); l-- > 0;) {
            if (++idx[l] < ranges[l]) {
                exhausted = false;
                break;
            }
            idx[l] = 0;
        }
        if (exhausted) return c;
    }
}

class Report {
public:
    Report() = default;
    explicit Report(std::string title) : title_(std::move(title)) {}

    const std::string& title() const { return title_; }
    const std::vector<Check>& checks() const { return checks_; }
    const std::vector<std::pair<std::string, bool>>& flags() const { return flags_; }
    const nlohmann::ordered_json& data() const { return data_; }
    nlohmann::ordered_json& data() { return data_; }

    Check& add(Check c)
    {
        checks_.push_back(std::move(c));
        return checks_.back();
    }

    void set_flag(std::string key, bool value)
    {
        for (auto& [k, v] : flags_) {
            if (k == key) {
                v = value;
                return;
            }
        }
        flags_.emplace_back(std::move(key), value);
    }

    bool flag(const std::string& key) const
    {
        for (const auto& [k, v] : flags_) {
            if (k == key) return v;
        }
        throw MathError("report has no flag '" + key + "'");
    }

    bool passed() const
    {
        for (const auto& c : checks_) {
            if (!c.passed) return false;
        }
        return true;
    }

    /// The check with this name, or nullptr.
    const Check* find(const std::string& name) const
    {
        for (const auto& c : checks_) {
            if (c.name == name) return &c;
        }
        return nullptr;
    }

    const Check* first_failure() const
    {
        for (const auto& c : checks_) {
            if (!c.passed) return &c;
        }
        return nullptr;
    }

    /// Appends another report's checks (prefixing names) and flags.
    void merge(const Report& other, const std::string& prefix = {})
    {
        for (auto c : other.checks_) {
            if (!prefix.empty()) c.name = prefix + "." + c.name;
            checks_.push_back(std::move(c));
        }
        for (const auto& [k, v] : other.flags_) flags_.emplace_back(prefix.empty() ? k : prefix + "." + k, v);
        for (const auto& [k, v] : other.data_.items()) data_[prefix.empty() ? k : prefix + "." + k] = v;
    }

private:
    std::string title_;
    std::vector<Check> checks_;
    std::vector<std::pair<std::string, bool>> flags_;
    nlohmann::ordered_json data_ = nlohmann::ordered_json::object();
};

} // namespace qhopf
