#include "imatch/rejections.hpp"

#include <stdexcept>

namespace imatch {

RejectionSet::RejectionSet(int n, int m) : n_(n), m_(m), per_applicant_(n, 0) {
    if (n < 1 || m < 1) throw std::invalid_argument("rejection set needs positive dimensions");
    set_.assign(static_cast<std::size_t>(n) * m, 0);
}

bool RejectionSet::add(int applicant, int position) {
    if (applicant < 0 || applicant >= n_ || position < 0 || position >= m_)
        throw std::invalid_argument("rejection pair out of range");
    std::uint8_t& slot = set_[cell(applicant, position)];
    if (slot) return false;
    slot = 1;
    ++per_applicant_[applicant];
    ++total_;
    return true;
}

std::vector<std::pair<int, int>> RejectionSet::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(total_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < m_; ++j)
            if (set_[cell(i, j)]) out.emplace_back(i, j);
    return out;
}

}  // namespace imatch
