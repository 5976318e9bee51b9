#pragma once

#include <utility>
#include <vector>

namespace imatch {

// Frozen expectations for the bundled 5x5 replay fixture (fixtures/d1.json).
// All pairs are 0-based (applicant, position).

// Interview sequence the sequential engine must produce, in order.
const std::vector<std::pair<int, int>>& d1_expected_interviews();

// Final matching of the replay.
const std::vector<std::pair<int, int>>& d1_expected_matching();

// Matching produced by full-interim decoupled deferred acceptance on the
// replay's ledger; it pairs (a5, p4) without an interview and must be
// reported as not interim stable.
const std::vector<std::pair<int, int>>& d1_expected_decoupled();

// JSON text of the fixture, byte-identical to fixtures/d1.json.
const char* d1_fixture_json();

}  // namespace imatch
