#include "soapfilm/stationary.hpp"

#include <algorithm>
#include <cmath>

#include "soapfilm/cosine.hpp"
#include "soapfilm/kernels.hpp"
#include "soapfilm/linalg.hpp"

namespace soapfilm::stationary {

namespace {
const double kPi = 3.14159265358979323846;
const double kLn2 = 0.69314718055994530942;
const double kAdmissibilityMargin = 1e-6;
}  // namespace

double lambda_cyl() { return kLn2 * kLn2; }

StationaryProblem::StationaryProblem(double sigma, Grid1D field_rgrid, double fd_step)
    : sigma_(sigma), field_rgrid_(std::move(field_rgrid)), fd_step_(fd_step) {
    if (!(sigma > 0.0)) throw std::invalid_argument("StationaryProblem: sigma > 0 required");
}

ZFunction StationaryProblem::residual(const FilmProfile& u, double lambda) const {
    const int bad = first_inadmissible_node(u, 0.0);
    if (bad >= 0)
        throw AdmissibilityError("residual: film profile outside S", bad, u.values[bad]);
    const Grid1D& grid = u.grid;
    const std::vector<double> uz = first_derivative(grid, u.values);
    const std::vector<double> uzz = second_difference(grid, u.values);
    const double s2 = sigma_ * sigma_;

    ZFunction res{grid, std::vector<double>(grid.size(), 0.0)};
    std::vector<double> g;
    if (lambda != 0.0)
        g = field::electrostatic_force(u, sigma_, grid, field_rgrid_).values;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const double f =
            s2 * uzz[i] / (1.0 + s2 * uz[i] * uz[i]) - 1.0 / (u.values[i] + 1.0);
        res.values[i] = lambda != 0.0 ? f + lambda * g[i] : f;
    }
    return res;
}

ZFunction StationaryProblem::jacobian_action(const FilmProfile& u, double lambda,
                                             const std::vector<double>& direction) const {
    if (direction.size() != u.values.size())
        throw std::invalid_argument("jacobian_action: direction size mismatch");
    const ZFunction base = residual(u, lambda);
    double delta = fd_step_;
    FilmProfile up = u;
    for (int attempt = 0;; ++attempt) {
        for (std::size_t i = 0; i < u.values.size(); ++i)
            up.values[i] = u.values[i] + delta * direction[i];
        up.values.front() = 0.0;
        up.values.back() = 0.0;
        if (first_inadmissible_node(up, kAdmissibilityMargin) < 0) break;
        if (attempt > 40)
            throw AdmissibilityError("jacobian_action: perturbation cannot stay in S", 0,
                                     0.0);
        delta *= 0.5;
    }
    const ZFunction pert = residual(up, lambda);
    ZFunction out{u.grid, std::vector<double>(u.values.size(), 0.0)};
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = (pert.values[i] - base.values[i]) / delta;
    return out;
}

std::vector<double> StationaryProblem::jacobian(const FilmProfile& u, double lambda) const {
    const int m = u.grid.n;
    const ZFunction base = residual(u, lambda);
    std::vector<double> J(static_cast<std::size_t>(m) * m, 0.0);
    FilmProfile up = u;
    for (int col = 0; col < m; ++col) {
        double delta = fd_step_;
        // step away from the nearest S boundary when needed
        for (int attempt = 0;
             std::abs(u.values[col + 1] + delta) >= 1.0 - kAdmissibilityMargin;
             ++attempt) {
            if (attempt > 60)
                throw AdmissibilityError("jacobian: node pinned at the S boundary",
                                         col + 1, u.values[col + 1]);
            delta *= -0.5;
        }
        up.values[col + 1] = u.values[col + 1] + delta;
        const ZFunction pert = residual(up, lambda);
        up.values[col + 1] = u.values[col + 1];
        for (int row = 0; row < m; ++row)
            J[static_cast<std::size_t>(row) * m + col] =
                (pert.values[row + 1] - base.values[row + 1]) / delta;
    }
    return J;
}

void StationaryProblem::spectral_guard() const {
    if (guard_min_abs_mu_) {
        if (*guard_min_abs_mu_ < 1e-2)
            throw SingularSystemError(
                "newton_solve: sigma is at an excluded value (mu_j(sigma) ~ 0)",
                *guard_min_abs_mu_);
        return;
    }
    const Grid1D guard_grid = make_uniform_grid(1.0, 2.0, 400);
    const auto th = eigencurve::find_s0(1e-6, guard_grid);
    double min_abs = std::abs(eigencurve::mu(sigma_ * sigma_ * eigencurve::nu(0), guard_grid));
    for (int j = 1;; ++j) {
        const double s = sigma_ * sigma_ * eigencurve::nu(j);
        min_abs = std::min(min_abs, std::abs(eigencurve::mu(s, guard_grid)));
        if (s > th.s0 + 1.0) break;
    }
    guard_min_abs_mu_ = min_abs;
    if (min_abs < 1e-2)
        throw SingularSystemError(
            "newton_solve: sigma is at an excluded value (mu_j(sigma) ~ 0)", min_abs);
}

BranchPoint StationaryProblem::newton_solve(double lambda, const FilmProfile& u0,
                                            double tol, int max_iters) const {
    if (!(tol > 0.0)) throw std::invalid_argument("newton_solve: tol > 0 required");
    spectral_guard();
    const int m = u0.grid.n;
    FilmProfile u = u0;
    ZFunction res = residual(u, lambda);
    double rnorm = sup_norm(res.values);
    std::optional<linalg::DenseLU> lu;
    int iters = 0;
    for (; iters < max_iters && rnorm > tol; ++iters) {
        if (!lu) {
            linalg::DenseLU fresh(jacobian(u, lambda), static_cast<std::size_t>(m));
            if (!fresh.ok())
                throw SingularSystemError("newton_solve: singular Jacobian", 0.0);
            lu.emplace(std::move(fresh));
        }
        std::vector<double> rhs(m);
        for (int i = 0; i < m; ++i) rhs[i] = -res.values[i + 1];
        const std::vector<double> delta = lu->solve(std::move(rhs));
        kernels::axpy(1.0, delta.data(), u.values.data() + 1, m);
        const int bad = first_inadmissible_node(u, kAdmissibilityMargin);
        if (bad >= 0)
            throw AdmissibilityError(
                "newton_solve: iterate left S (pinch-off/touch proximity)", bad,
                u.values[bad]);
        res = residual(u, lambda);
        const double rnew = sup_norm(res.values);
        if (rnew > 0.25 * rnorm) lu.reset();  // refresh the Jacobian next pass
        rnorm = rnew;
    }
    if (rnorm > tol)
        throw NonConvergenceError("newton_solve: no convergence in " +
                                      std::to_string(max_iters) + " iterations",
                                  iters);
    return BranchPoint{lambda, std::move(u), rnorm, iters};
}

std::vector<BranchPoint> StationaryProblem::continue_branch(double lambda_min,
                                                            double lambda_max, int steps,
                                                            const Grid1D& zgrid, double tol,
                                                            int max_iters) const {
    const double lc = lambda_cyl();
    if (!(lambda_min <= lc && lc <= lambda_max))
        throw std::invalid_argument("continue_branch: window must contain lambda_cyl");
    if (steps < 1) throw std::invalid_argument("continue_branch: steps >= 1 required");

    std::vector<double> lambdas(steps);
    for (int i = 0; i < steps; ++i) {
        double l = steps == 1 ? lambda_min
                              : lambda_min + (lambda_max - lambda_min) * i / (steps - 1);
        if (std::abs(l - lc) < 1e-12) l = lc;
        lambdas[i] = l;
    }
    // continuation runs outward from lambda_cyl in both directions
    std::vector<BranchPoint> points(steps);
    int seed_idx = 0;
    for (int i = 1; i < steps; ++i)
        if (std::abs(lambdas[i] - lc) < std::abs(lambdas[seed_idx] - lc)) seed_idx = i;

    FilmProfile u = zero_film(zgrid);
    points[seed_idx] = newton_solve(lambdas[seed_idx], u, tol, max_iters);
    u = points[seed_idx].u;
    for (int i = seed_idx + 1; i < steps; ++i) {
        points[i] = newton_solve(lambdas[i], u, tol, max_iters);
        u = points[i].u;
    }
    u = points[seed_idx].u;
    for (int i = seed_idx - 1; i >= 0; --i) {
        points[i] = newton_solve(lambdas[i], u, tol, max_iters);
        u = points[i].u;
    }
    return points;
}

std::pair<ZFunction, DeflectionCertificate>
dlambda_u_at_cyl(double sigma, int J, const Grid1D& zgrid, const Grid1D& radial_grid) {
    if (J < 0) throw std::invalid_argument("dlambda_u_at_cyl: J >= 0 required");
    const auto th = eigencurve::find_s0(1e-8, radial_grid);
    if (!(sigma > th.sigma_cyl))
        throw std::invalid_argument("dlambda_u_at_cyl: requires sigma > sigma_cyl");

    cosine::OddCosineSum series;
    series.coeffs.resize(J + 1);
    for (int j = 0; j <= J; ++j) {
        const double mu2j = eigencurve::mu(sigma * sigma * eigencurve::nu(2 * j), radial_grid);
        if (!(mu2j < 0.0))
            throw ComputeError("dlambda_u_at_cyl: nonnegative mu_2j despite sigma > sigma_cyl");
        series.coeffs[j] = ((j % 2 == 0) ? 1.0 : -1.0) / ((2.0 * j + 1.0) * (-mu2j));
    }

    const double scale = 4.0 / (kPi * kLn2 * kLn2);
    ZFunction du{zgrid, std::vector<double>(zgrid.size(), 0.0)};
    for (std::size_t i = 0; i < zgrid.size(); ++i)
        du.values[i] = scale * cosine::evaluate(series, zgrid.nodes[i]);
    du.values.front() = 0.0;
    du.values.back() = 0.0;

    DeflectionCertificate cert;
    cert.sigma = sigma;
    cert.s0 = th.s0;
    cert.sigma_cyl = th.sigma_cyl;
    cert.coeffs = series.coeffs;
    cert.C1 = cosine::positivity_bound(series).C;
    cert.C1_lower_bound = 2.0 / (3.0 * kPi * kPi * sigma * sigma);
    return {std::move(du), cert};
}

DeflectionReport deflection_check(const std::vector<BranchPoint>& branch,
                                  const ZFunction& dlambda_u) {
    DeflectionReport rep;
    if (branch.size() < 2) return rep;

    rep.ordering_ok = true;
    for (std::size_t p = 0; p + 1 < branch.size(); ++p) {
        const auto& lo = branch[p].u.values;
        const auto& hi = branch[p + 1].u.values;
        for (std::size_t i = 1; i + 1 < lo.size(); ++i)
            if (!(lo[i] < hi[i])) rep.ordering_ok = false;
    }

    const double lc = lambda_cyl();
    std::size_t center = 0;
    for (std::size_t p = 1; p < branch.size(); ++p)
        if (std::abs(branch[p].lambda - lc) < std::abs(branch[center].lambda - lc))
            center = p;
    const auto& u0 = branch[center].u.values;

    rep.endpoint_slopes_ok = true;
    for (std::size_t p = 0; p < branch.size(); ++p) {
        if (!(branch[p].lambda > lc)) continue;
        const auto d = first_derivative(branch[p].u.grid, branch[p].u.values);
        if (!(d.front() > 0.0 && d.back() < 0.0)) rep.endpoint_slopes_ok = false;
    }

    const double den =
        kernels::dot(dlambda_u.values.data(), dlambda_u.values.data(), dlambda_u.values.size());
    auto rel_l2 = [&](std::vector<double> fd) {
        kernels::axpy(-1.0, dlambda_u.values.data(), fd.data(), fd.size());
        return std::sqrt(kernels::dot(fd.data(), fd.data(), fd.size()) / den);
    };
    for (std::size_t p = 0; p < branch.size(); ++p) {
        const double eps = branch[p].lambda - branch[center].lambda;
        if (eps <= 0.0) continue;
        std::vector<double> fd(u0.size());
        for (std::size_t i = 0; i < u0.size(); ++i)
            fd[i] = (branch[p].u.values[i] - u0[i]) / eps;
        rep.one_sided_errors.emplace_back(eps, rel_l2(fd));
        // centered companion when the mirror point exists
        for (std::size_t q = 0; q < branch.size(); ++q) {
            if (std::abs((branch[center].lambda - branch[q].lambda) - eps) > 1e-12) continue;
            for (std::size_t i = 0; i < u0.size(); ++i)
                fd[i] = (branch[p].u.values[i] - branch[q].u.values[i]) / (2.0 * eps);
            rep.centered_errors.emplace_back(eps, rel_l2(fd));
            break;
        }
    }
    return rep;
}

}  // namespace soapfilm::stationary
