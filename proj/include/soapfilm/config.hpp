#pragma once

#include <string>

namespace soapfilm::cli {

/// Run configuration shared by all subcommands; JSON file values first,
/// command-line flags override.
struct RunConfig {
    // grid sizes (interior node counts)
    int radial_n = 2000;
    int z_n = 101;
    int field_nz = 127;
    int field_nr = 63;
    // tolerances
    double newton_tol = 1e-10;
    double root_tol = 1e-8;
    double linear_tol = 1e-12;
    // truncations
    int K = 200;  // radial eigenpairs
    int J = 64;   // cosine modes
    // physical parameters
    double sigma = 1.6;
    double lambda_min = 0.0;  // 0 means "lambda_cyl - 0.02"
    double lambda_max = 0.0;  // 0 means "lambda_cyl + 0.02"
    int steps = 9;
    double dt = 1e-3;
    double T = 3.0;
    double seed_amplitude = 1e-3;
    double window_start = -1.0;  // <0 means automatic
    double window_end = -1.0;
    int snapshot_stride = 0;  // 0 = no full-state snapshots
    // eigencurve sampling
    double s_min = 0.0;
    double s_max = 10.0;
    int s_count = 101;
    // output
    std::string out;  // empty = stdout
    std::string format = "csv";

    double lambda_min_resolved() const;
    double lambda_max_resolved() const;

    /// Throws std::invalid_argument on malformed values.
    void validate() const;
};

/// Parse a JSON config file into cfg; unknown keys are rejected.
void load_config_file(const std::string& path, RunConfig& cfg);

}  // namespace soapfilm::cli
