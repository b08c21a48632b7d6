#pragma once

#include <string>
#include <vector>

namespace chv {

struct SuiteResult {
  std::string suite;
  long long cases = 0;
  long long failures = 0;
  std::vector<std::string> notes;  // one line per failure, capped
};

// Runs the named invariant sweeps. Suites: "integrality", "reciprocity",
// "oracle", "series", "zeta"; "all" expands to every one of them. Results
// come back sorted by suite name; within a suite the sweep order is fixed
// (catalog order, then q, then extension degree), so output is
// deterministic. max_rank and max_q bound the sweeps.
std::vector<SuiteResult> run_verify(const std::vector<std::string>& suites, int max_rank,
                                    long long max_q);

}  // namespace chv
