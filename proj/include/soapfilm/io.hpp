#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "soapfilm/dynamics.hpp"
#include "soapfilm/eigencurve.hpp"
#include "soapfilm/stationary.hpp"

// CSV and JSON serialization. CSV floats carry 17 significant digits so
// exported values round-trip bit-faithfully.

namespace soapfilm::io {

std::string fmt17(double v);

void write_eigencurve_csv(std::ostream& os,
                          const std::vector<eigencurve::EigencurveSample>& samples);

/// Columns j, nu, mu and, when bounds are supplied, lower/upper.
void write_spectrum_csv(std::ostream& os, const eigencurve::SpectrumReport& rep,
                        const std::vector<std::pair<double, double>>* bounds);

/// Header row: lambda plus the z nodes; one row per branch point.
void write_branch_csv(std::ostream& os, const std::vector<stationary::BranchPoint>& branch);

/// Inverse of write_branch_csv; lines starting with '{' (JSON trailers) are
/// skipped.
std::vector<std::pair<double, FilmProfile>> read_branch_csv(std::istream& is);

void write_trajectory_csv(std::ostream& os, const dynamics::Trajectory& traj);

/// Full-state snapshots every `stride` recorded times: header row t plus the
/// z nodes, one row per snapshot.
void write_snapshots_csv(std::ostream& os, const dynamics::Trajectory& traj, int stride);

nlohmann::json certificate_to_json(const stationary::DeflectionCertificate& cert);

const char* stop_reason_name(dynamics::StopReason r);

}  // namespace soapfilm::io
