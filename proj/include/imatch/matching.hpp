#pragma once

#include <vector>

#include "imatch/ids.hpp"

namespace imatch {

// Partial matching between applicants and positions. Both directions are
// stored and updated together, so the mapping is involutive by construction.
class Matching {
public:
    Matching(int n, int m);

    int n() const { return n_; }
    int m() const { return m_; }

    // -1 when unmatched.
    int position_of(int applicant) const { return pos_of_[applicant]; }
    int applicant_of(int position) const { return app_of_[position]; }

    bool applicant_matched(int applicant) const { return pos_of_[applicant] >= 0; }
    bool position_matched(int position) const { return app_of_[position] >= 0; }

    // Links a currently free applicant to a currently free position.
    void pair(int applicant, int position);

    // Unlinks the given position from its applicant; the position must be matched.
    void unmatch_position(int position);

    int matched_count() const { return matched_; }

    // Partner of an agent, or the agent itself when unmatched.
    AgentId partner(AgentId id) const;

    bool operator==(const Matching&) const = default;

private:
    int n_;
    int m_;
    int matched_ = 0;
    std::vector<int> pos_of_;
    std::vector<int> app_of_;
};

}  // namespace imatch
