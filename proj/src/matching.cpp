#include "imatch/matching.hpp"

#include <stdexcept>

namespace imatch {

Matching::Matching(int n, int m) : n_(n), m_(m), pos_of_(n, -1), app_of_(m, -1) {
    if (n < 1 || m < 1) throw std::invalid_argument("matching needs positive dimensions");
}

void Matching::pair(int applicant, int position) {
    if (applicant < 0 || applicant >= n_ || position < 0 || position >= m_)
        throw std::invalid_argument("pair out of range");
    if (pos_of_[applicant] >= 0 || app_of_[position] >= 0)
        throw std::logic_error("pair() requires both agents to be free");
    pos_of_[applicant] = position;
    app_of_[position] = applicant;
    ++matched_;
}

void Matching::unmatch_position(int position) {
    const int applicant = app_of_[position];
    if (applicant < 0) throw std::logic_error("unmatch_position() on a free position");
    app_of_[position] = -1;
    pos_of_[applicant] = -1;
    --matched_;
}

AgentId Matching::partner(AgentId id) const {
    if (id.side == Side::Applicant) {
        if (id.index < 1 || id.index > n_) throw std::invalid_argument("applicant out of range");
        const int j = pos_of_[id.index - 1];
        return j < 0 ? id : AgentId::position(j + 1);
    }
    if (id.index < 1 || id.index > m_) throw std::invalid_argument("position out of range");
    const int i = app_of_[id.index - 1];
    return i < 0 ? id : AgentId::applicant(i + 1);
}

}  // namespace imatch
