#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace imatch {

enum class EventKind {
    Interview,
    ProposalAccept,
    ProposalReject,
    RejectWithoutInterview,
};

// One step of a run. `iter` counts engine iterations from 1. `phase` and
// `round` are populated by the batched engines (phase 0 means a plain
// sequential run).
struct TraceEvent {
    long iter = 0;
    EventKind kind = EventKind::Interview;
    int applicant = -1;  // 0-based
    int position = -1;   // 0-based
    std::optional<double> v;
    std::optional<double> u;
    int phase = 0;
    long round = 0;
};

const char* to_string(EventKind kind);

// JSON-lines rendering, one event per line, 1-based agent indices.
std::string trace_to_jsonl(const std::vector<TraceEvent>& events);

}  // namespace imatch
