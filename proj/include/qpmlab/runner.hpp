#pragma once

#include "qpmlab/io.hpp"

namespace qpm {

// Exit-code contract: 0 = pass/converged, 2 = axiom failure, hypothesis
// violation, non-convergence or oracle disagreement (with report), 1 =
// usage/config error. Valid configs never throw out of run_command.
struct RunResult {
  int exit_code = 1;
  Json report;
  std::optional<std::string> trace_csv;
};

RunResult run_command(Command cmd, const ScenarioConfig& cfg);

}  // namespace qpm
