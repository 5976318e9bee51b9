#pragma once

#include <cstdint>
#include <vector>

namespace imatch {

// One conducted interview: the pair plus the values both sides realized.
// Indices are 0-based.
struct InterviewRecord {
    int applicant;
    int position;
    double v;  // applicant's realized value for the position
    double u;  // position's realized value for the applicant
};

// Append-only log of conducted interviews. A pair appears at most once;
// adding a duplicate is a precondition violation.
class InterviewLedger {
public:
    InterviewLedger(int n, int m);

    int n() const { return n_; }
    int m() const { return m_; }
    int size() const { return static_cast<int>(records_.size()); }

    bool contains(int applicant, int position) const;
    const InterviewRecord* find(int applicant, int position) const;
    const InterviewRecord& add(int applicant, int position, double v, double u);

    const std::vector<InterviewRecord>& records() const { return records_; }

private:
    std::size_t cell(int applicant, int position) const {
        return static_cast<std::size_t>(applicant) * m_ + position;
    }

    int n_;
    int m_;
    std::vector<InterviewRecord> records_;
    std::vector<std::int32_t> index_;  // n*m, -1 where no interview happened
};

}  // namespace imatch
