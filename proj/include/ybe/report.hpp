#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ybe/brace.hpp"
#include "ybe/group.hpp"
#include "ybe/oracle.hpp"
#include "ybe/rep.hpp"
#include "ybe/solution.hpp"

// JSON views of the library's results. Indices and letters are 1-based,
// matching the solution file format.
namespace ybe {

nlohmann::json to_json(const SolutionProfile& p);
nlohmann::json germ_to_json(const Germ& g);
nlohmann::json to_json(const BraceLawReport& r);
nlohmann::json to_json(const DimensionReport& r);
nlohmann::json to_json(const oracle::InjectivityReport& r);
nlohmann::json to_json(const oracle::CountsReport& r);
nlohmann::json to_json(const oracle::SpanReport& r);

/// Full spanning-set dump written by `ybe rep --out`.
nlohmann::json rep_to_json(const DimensionResult& r);

DimensionReport dimension_report_from_json(const nlohmann::json& j);

std::vector<int> one_based(const std::vector<int>& word);

/// Command-line entry point; data goes to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 validation or check failure, 2 usage error,
/// 3 guard exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ybe
