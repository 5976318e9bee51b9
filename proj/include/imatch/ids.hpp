#pragma once

#include <string>

namespace imatch {

enum class Side { Applicant, Position };

// Public handle for an agent. Indices are 1-based (applicants a1..an,
// positions p1..pm); all internal engine code uses 0-based ints instead and
// converts at the API and serialization boundaries.
struct AgentId {
    Side side;
    int index;

    static AgentId applicant(int index) { return {Side::Applicant, index}; }
    static AgentId position(int index) { return {Side::Position, index}; }

    bool operator==(const AgentId&) const = default;
};

std::string to_string(const AgentId& id);

}  // namespace imatch
