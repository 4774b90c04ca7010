#pragma once

#include <iosfwd>

#include "soapfilm/config.hpp"

// Batch subcommands. Each validates its configuration (std::invalid_argument
// on failure), writes CSV/JSON to the stream and returns 0; compute errors
// propagate as ComputeError. The CLI maps exceptions to exit codes
// (1 validation, 2 compute).

namespace soapfilm::cli {

int cmd_eigencurve(const RunConfig& cfg, std::ostream& os);
int cmd_threshold(const RunConfig& cfg, std::ostream& os);
int cmd_spectrum(const RunConfig& cfg, std::ostream& os);
int cmd_branch(const RunConfig& cfg, std::ostream& os);
int cmd_evolve(const RunConfig& cfg, std::ostream& os);
int cmd_deflection(const RunConfig& cfg, std::ostream& os);

/// Closed-form check suite; returns 0 when every check passes, 2 otherwise.
int cmd_selftest(const RunConfig& cfg, std::ostream& os);

}  // namespace soapfilm::cli
