#pragma once

#include <string>

#include "imatch/instance.hpp"
#include "imatch/ledger.hpp"
#include "imatch/matching.hpp"
#include "imatch/stability.hpp"
#include "imatch/trace.hpp"

namespace imatch {

// JSON (de)serialization for the file formats the CLI speaks. Agent indices
// are 1-based on disk. Parametric instances carry kind plus params; fixed
// instances carry flat row-major value matrices v[n][m] and u[m][n].
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);
Instance load_instance(const std::string& path);

std::string matching_to_json(const Matching& matching);
Matching matching_from_json(const std::string& text);
Matching load_matching(const std::string& path);

std::string ledger_to_json(const InterviewLedger& ledger);
InterviewLedger ledger_from_json(const std::string& text);
InterviewLedger load_ledger(const std::string& path);

std::string stability_report_to_json(const StabilityReport& report);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace imatch
