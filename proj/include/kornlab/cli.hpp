#pragma once

#include <iosfwd>

#include "kornlab/report.hpp"

namespace kornlab {

// Executes one configured command and returns the full report. Throws the
// library's typed errors on bad configs and solver failures.
Report run_command(const RunConfig& c);

// run_command plus file emission and exit-code mapping:
//   0  all verdicts hold
//   1  some verdict fails
//   2  configuration / precondition error
//   3  solver or eigensolver non-convergence
// Writes the JSON report to c.out_json and the CSV curves to c.out_csv when
// set, and a one-line outcome to `log`.
int run(const RunConfig& c, std::ostream& log);

}  // namespace kornlab
