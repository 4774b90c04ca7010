#pragma once

#include <utility>
#include <vector>

#include "soapfilm/stationary.hpp"
#include "soapfilm/types.hpp"

// Time integration of d_t u = F(u) + lambda g(u) with a first-order IMEX
// split: the quasilinear diffusion sigma^2 u_zz / (1 + sigma^2 u_z^2) is
// treated implicitly with the prefactor frozen at the current state, the
// rest (including the nonlocal force) explicitly.

namespace soapfilm::dynamics {

enum class StopReason { completed, pinch_off, touch };

struct Trajectory {
    std::vector<double> times;
    std::vector<FilmProfile> states;
    std::vector<double> sup_norms;  // ||u(t) - u_ref||_inf per recorded time
    StopReason stop = StopReason::completed;
    double stop_time = 0.0;
    int stop_node = -1;
};

/// Identical to the stationary residual; the stationary equation is rhs = 0.
ZFunction rhs_dyn(const FilmProfile& u, double lambda,
                  const stationary::StationaryProblem& prob);

/// One semi-implicit step; preserves u(+-1) = 0 exactly. Throws
/// AdmissibilityError on a pinch-off/touch event with the offending node.
FilmProfile step(const FilmProfile& u, double dt, double lambda,
                 const stationary::StationaryProblem& prob);

/// Integrate until T or an S-exit event (events are recorded, not errors).
Trajectory evolve(const FilmProfile& u0, double T, double dt, double lambda,
                  const stationary::StationaryProblem& prob, const FilmProfile& u_ref);

/// Least-squares slope of log sup_norms over the time window.
double measured_rate(const Trajectory& traj, std::pair<double, double> window);

}  // namespace soapfilm::dynamics
