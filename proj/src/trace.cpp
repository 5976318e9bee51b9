#include "imatch/trace.hpp"

#include <sstream>

namespace imatch {

const char* to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Interview: return "interview";
        case EventKind::ProposalAccept: return "proposal_accept";
        case EventKind::ProposalReject: return "proposal_reject";
        case EventKind::RejectWithoutInterview: return "reject_without_interview";
    }
    return "unknown";
}

std::string trace_to_jsonl(const std::vector<TraceEvent>& events) {
    std::ostringstream out;
    out.precision(17);
    for (const TraceEvent& e : events) {
        out << "{\"iter\":" << e.iter << ",\"kind\":\"" << to_string(e.kind) << "\""
            << ",\"applicant\":" << e.applicant + 1 << ",\"position\":" << e.position + 1;
        if (e.v) out << ",\"v\":" << *e.v;
        if (e.u) out << ",\"u\":" << *e.u;
        if (e.phase > 0) out << ",\"round\":" << e.round << ",\"phase\":" << e.phase;
        out << "}\n";
    }
    return out.str();
}

}  // namespace imatch
