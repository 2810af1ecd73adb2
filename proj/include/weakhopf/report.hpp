#pragma once

#include "weakhopf/linmap.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace weakhopf {

// One named exact equality check. When the two sides differ, both are kept
// verbatim as the witness of failure.
struct AxiomCheck {
    std::string name;
    bool holds = false;
    std::optional<std::pair<LinMap, LinMap>> witness;  // (lhs, rhs), present iff !holds
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    // Records the exact comparison lhs == rhs under `name`.
    void require_equal(const std::string& name, const LinMap& lhs, const LinMap& rhs) {
        AxiomCheck c;
        c.name = name;
        c.holds = (lhs == rhs);
        if (!c.holds) c.witness = std::make_pair(lhs, rhs);
        checks.push_back(std::move(c));
    }

    // Records an externally evaluated boolean (for non-equational facts such
    // as invertibility or solvability).
    void require(const std::string& name, bool holds) {
        checks.push_back(AxiomCheck{name, holds, std::nullopt});
    }

    void append(const AxiomReport& other, const std::string& prefix = "") {
        for (const auto& c : other.checks) {
            AxiomCheck copy = c;
            copy.name = prefix + copy.name;
            checks.push_back(std::move(copy));
        }
    }

    bool all_hold() const {
        for (const auto& c : checks)
            if (!c.holds) return false;
        return true;
    }

    const AxiomCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::vector<std::string> failing() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (!c.holds) out.push_back(c.name);
        return out;
    }

    std::string failing_joined() const {
        std::string out;
        for (const auto& name : failing()) {
            if (!out.empty()) out += ", ";
            out += name;
        }
        return out;
    }
};

}  // namespace weakhopf
