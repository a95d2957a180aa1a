#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace bcp {

// One acceptance criterion's outcome. Soft criteria (runtime-scaling trends)
// report pass/fail but never gate the suite.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool soft = false;
  std::string details;  // one-line measured-vs-band summary
  std::vector<std::pair<std::string, double>> metrics;
};

struct AcceptanceOptions {
  uint64_t seed = 2026;
  unsigned threads = 1;         // fan-out width for independent cells
  std::ostream* log = nullptr;  // per-criterion progress lines, optional
};

// Runs the whole acceptance suite. Deterministic measured values per seed;
// wall-clock metrics naturally vary between runs. A criterion whose runner
// throws is reported as failed with the exception text.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

// True when every hard (non-soft) criterion passed.
bool acceptance_ok(const std::vector<CriterionResult>& results);

}  // namespace bcp
