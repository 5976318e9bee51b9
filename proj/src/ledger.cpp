#include "imatch/ledger.hpp"

#include <stdexcept>
#include <string>

namespace imatch {

InterviewLedger::InterviewLedger(int n, int m) : n_(n), m_(m) {
    if (n < 1 || m < 1) throw std::invalid_argument("ledger needs positive dimensions");
    index_.assign(static_cast<std::size_t>(n) * m, -1);
}

bool InterviewLedger::contains(int applicant, int position) const {
    return index_[cell(applicant, position)] >= 0;
}

const InterviewRecord* InterviewLedger::find(int applicant, int position) const {
    const std::int32_t at = index_[cell(applicant, position)];
    return at >= 0 ? &records_[static_cast<std::size_t>(at)] : nullptr;
}

const InterviewRecord& InterviewLedger::add(int applicant, int position, double v, double u) {
    if (applicant < 0 || applicant >= n_ || position < 0 || position >= m_)
        throw std::invalid_argument("interview pair out of range");
    std::int32_t& at = index_[cell(applicant, position)];
    if (at >= 0)
        throw std::logic_error("pair (a" + std::to_string(applicant + 1) + ", p" +
                               std::to_string(position + 1) + ") already interviewed");
    at = static_cast<std::int32_t>(records_.size());
    records_.push_back({applicant, position, v, u});
    return records_.back();
}

}  // namespace imatch
