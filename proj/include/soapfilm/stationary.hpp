#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "soapfilm/eigencurve.hpp"
#include "soapfilm/field.hpp"
#include "soapfilm/types.hpp"

// Residual, Newton solve and natural lambda-continuation for the nonlocal
// stationary problem F(u) + lambda g(u) = 0, plus the outward-deflection
// direction with its positivity certificate.

namespace soapfilm::stationary {

/// lambda at which the cylinder u = 0 is stationary.
double lambda_cyl();

struct BranchPoint {
    double lambda = 0.0;
    FilmProfile u;
    double residual_norm = 0.0;
    int newton_iters = 0;
};

struct DeflectionCertificate {
    double sigma = 0.0;
    double s0 = 0.0;
    double sigma_cyl = 0.0;
    std::vector<double> coeffs;  // a_j of the odd cosine series
    double C1 = 0.0;
    double C1_lower_bound = 0.0;  // 2 / (3 pi^2 sigma^2)
};

struct DeflectionReport {
    bool ordering_ok = false;
    bool endpoint_slopes_ok = false;
    // (lambda offset eps, relative L2 error of the finite difference against
    // the series): one-sided uses (u(lc+eps) - u(lc))/eps, centered pairs
    // lc+eps with lc-eps. One-sided errors are O(eps); the centered ones
    // drop the curvature term.
    std::vector<std::pair<double, double>> one_sided_errors;
    std::vector<std::pair<double, double>> centered_errors;
};

/// Stationary problem at fixed sigma; the field solve shares the film's
/// z-grid and uses the given radial grid.
class StationaryProblem {
public:
    StationaryProblem(double sigma, Grid1D field_rgrid, double fd_step = 1e-6);

    double sigma() const { return sigma_; }
    const Grid1D& field_rgrid() const { return field_rgrid_; }

    /// F(u) + lambda g(u) at interior nodes (boundary entries zero);
    /// lambda = 0 skips the field solve.
    ZFunction residual(const FilmProfile& u, double lambda) const;

    /// Dense Jacobian on interior values by column-wise forward differences.
    std::vector<double> jacobian(const FilmProfile& u, double lambda) const;

    /// Directional derivative of the residual (forward difference).
    ZFunction jacobian_action(const FilmProfile& u, double lambda,
                              const std::vector<double>& direction) const;

    /// Newton iteration with sup-norm stopping. Throws NonConvergenceError,
    /// AdmissibilityError (iterate exits S) or SingularSystemError (sigma at
    /// an excluded value).
    BranchPoint newton_solve(double lambda, const FilmProfile& u0, double tol,
                             int max_iters) const;

    /// Natural continuation seeded at (lambda_cyl, 0); previous solution warm
    /// starts the next step. Points are returned sorted by lambda.
    std::vector<BranchPoint> continue_branch(double lambda_min, double lambda_max,
                                             int steps, const Grid1D& zgrid,
                                             double tol = 1e-10, int max_iters = 30) const;

private:
    double sigma_;
    Grid1D field_rgrid_;
    double fd_step_;
    mutable std::optional<double> guard_min_abs_mu_;

    void spectral_guard() const;
};

/// d_lambda u at the cylinder as an odd cosine series, with the positivity
/// certificate C1 >= 2/(3 pi^2 sigma^2). Requires sigma > sigma_cyl.
std::pair<ZFunction, DeflectionCertificate>
dlambda_u_at_cyl(double sigma, int J, const Grid1D& zgrid, const Grid1D& radial_grid);

/// Pure report: branch ordering, endpoint slopes and the finite-difference
/// versus series comparison of d_lambda u.
DeflectionReport deflection_check(const std::vector<BranchPoint>& branch,
                                  const ZFunction& dlambda_u);

}  // namespace soapfilm::stationary
