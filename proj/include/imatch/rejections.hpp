#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace imatch {

// Set of (applicant, position) pairs where the position has rejected the
// applicant. Grows monotonically; a rejection is never retracted.
class RejectionSet {
public:
    RejectionSet(int n, int m);

    int n() const { return n_; }
    int m() const { return m_; }

    // Returns true when the pair was newly added.
    bool add(int applicant, int position);
    bool contains(int applicant, int position) const {
        return set_[cell(applicant, position)] != 0;
    }

    int count_for(int applicant) const { return per_applicant_[applicant]; }
    bool all_rejected(int applicant) const { return per_applicant_[applicant] == m_; }
    long size() const { return total_; }

    std::vector<std::pair<int, int>> pairs() const;

private:
    std::size_t cell(int applicant, int position) const {
        return static_cast<std::size_t>(applicant) * m_ + position;
    }

    int n_;
    int m_;
    long total_ = 0;
    std::vector<std::uint8_t> set_;
    std::vector<int> per_applicant_;
};

}  // namespace imatch
