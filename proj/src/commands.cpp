#include "soapfilm/commands.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "soapfilm/cosine.hpp"
#include "soapfilm/dynamics.hpp"
#include "soapfilm/eigencurve.hpp"
#include "soapfilm/field.hpp"
#include "soapfilm/io.hpp"
#include "soapfilm/radial.hpp"
#include "soapfilm/stationary.hpp"

namespace soapfilm::cli {

namespace {

const double kPi = 3.14159265358979323846;
const double kLn2 = 0.69314718055994530942;
const double kSigmaCrit = 1.5;

Grid1D radial_grid(const RunConfig& cfg) { return make_uniform_grid(1.0, 2.0, cfg.radial_n); }

FilmProfile phi0_seed(const Grid1D& zgrid, double amplitude) {
    FilmProfile u = zero_film(zgrid);
    for (std::size_t i = 1; i + 1 < zgrid.size(); ++i)
        u.values[i] = amplitude * std::cos(kPi * zgrid.nodes[i] / 2.0);
    return u;
}

}  // namespace

int cmd_eigencurve(const RunConfig& cfg, std::ostream& os) {
    cfg.validate();
    const Grid1D grid = radial_grid(cfg);
    const auto samples = eigencurve::sample_curve(cfg.s_min, cfg.s_max, cfg.s_count, grid);
    if (cfg.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& s : samples)
            rows.push_back({{"s", s.s}, {"mu", s.mu}, {"mu_prime", s.mu_prime}});
        os << rows.dump(2) << '\n';
    } else {
        io::write_eigencurve_csv(os, samples);
    }
    return 0;
}

int cmd_threshold(const RunConfig& cfg, std::ostream& os) {
    cfg.validate();
    const Grid1D grid = radial_grid(cfg);
    const auto th = eigencurve::find_s0(cfg.root_tol, grid);
    nlohmann::json j;
    j["s0"] = th.s0;
    j["sigma_cyl"] = th.sigma_cyl;
    j["sigma_crit"] = kSigmaCrit;
    j["comparison"] = th.sigma_cyl < kSigmaCrit ? "sigma_cyl < sigma_crit"
                                                : "sigma_cyl >= sigma_crit";
    j["residual"] = th.residual;
    j["bracket"] = {th.bracket.first, th.bracket.second};
    os << j.dump(2) << '\n';
    return 0;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& os) {
    cfg.validate();
    const Grid1D grid = radial_grid(cfg);
    const auto rep = eigencurve::spectrum(cfg.sigma, cfg.J, grid);
    const auto th = eigencurve::find_s0(cfg.root_tol, grid);
    // per-row bounds: mu_m > -sigma^2 nu_m and, above the threshold,
    // mu_m <= -(3/10) sigma^2 (nu_m - nu_0); on even rows these are the
    // closed-form bounds of eigenvalue_bounds
    std::vector<std::pair<double, double>> bounds;
    if (cfg.sigma > th.sigma_cyl) {
        const double s2 = cfg.sigma * cfg.sigma;
        bounds.resize(rep.mus.size());
        for (std::size_t m = 0; m < rep.mus.size(); ++m)
            bounds[m] = {-s2 * rep.nus[m], -0.3 * s2 * (rep.nus[m] - rep.nus[0])};
    }
    if (cfg.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t m = 0; m < rep.mus.size(); ++m) {
            nlohmann::json row = {{"j", m}, {"nu", rep.nus[m]}, {"mu", rep.mus[m]}};
            if (!bounds.empty()) {
                row["lower"] = bounds[m].first;
                row["upper"] = bounds[m].second;
            }
            rows.push_back(row);
        }
        os << rows.dump(2) << '\n';
    } else {
        io::write_spectrum_csv(os, rep, bounds.empty() ? nullptr : &bounds);
    }
    return 0;
}

int cmd_branch(const RunConfig& cfg, std::ostream& os) {
    cfg.validate();
    const double lmin = cfg.lambda_min_resolved();
    const double lmax = cfg.lambda_max_resolved();
    const double lc = stationary::lambda_cyl();
    if (!(lmin <= lc && lc <= lmax))
        throw std::invalid_argument("branch: lambda window must contain lambda_cyl");
    const Grid1D zgrid = make_uniform_grid(-1.0, 1.0, cfg.z_n);
    const Grid1D rgrid = make_uniform_grid(1.0, 2.0, cfg.field_nr);
    stationary::StationaryProblem prob(cfg.sigma, rgrid);
    const auto branch = prob.continue_branch(lmin, lmax, cfg.steps, zgrid, cfg.newton_tol);
    io::write_branch_csv(os, branch);
    const auto [du, cert] =
        stationary::dlambda_u_at_cyl(cfg.sigma, cfg.J, zgrid, radial_grid(cfg));
    os << io::certificate_to_json(cert).dump() << '\n';
    return 0;
}

int cmd_deflection(const RunConfig& cfg, std::ostream& os) {
    cfg.validate();
    const Grid1D zgrid = make_uniform_grid(-1.0, 1.0, cfg.z_n);
    const auto [du, cert] =
        stationary::dlambda_u_at_cyl(cfg.sigma, cfg.J, zgrid, radial_grid(cfg));
    nlohmann::json j = io::certificate_to_json(cert);
    nlohmann::json du_json = nlohmann::json::array();
    for (double v : du.values) du_json.push_back(v);
    j["dlambda_u"] = du_json;
    os << j.dump(2) << '\n';
    return 0;
}

int cmd_evolve(const RunConfig& cfg, std::ostream& os) {
    cfg.validate();
    const Grid1D zgrid = make_uniform_grid(-1.0, 1.0, cfg.z_n);
    const Grid1D rgrid = make_uniform_grid(1.0, 2.0, cfg.field_nr);
    stationary::StationaryProblem prob(cfg.sigma, rgrid);
    const FilmProfile u0 = phi0_seed(zgrid, cfg.seed_amplitude);
    const FilmProfile uref = zero_film(zgrid);
    const auto traj = dynamics::evolve(u0, cfg.T, cfg.dt, stationary::lambda_cyl(), prob, uref);
    io::write_trajectory_csv(os, traj);

    nlohmann::json trailer;
    trailer["stop"] = io::stop_reason_name(traj.stop);
    trailer["stop_time"] = traj.stop_time;
    if (traj.stop_node >= 0) trailer["stop_node"] = traj.stop_node;
    const double w0 = cfg.window_start >= 0.0 ? cfg.window_start
                                              : std::min(0.5, 0.25 * traj.times.back());
    const double w1 = cfg.window_end >= 0.0 ? cfg.window_end : traj.times.back();
    try {
        trailer["measured_rate"] = dynamics::measured_rate(traj, {w0, w1});
        trailer["window"] = {w0, w1};
    } catch (const std::invalid_argument& e) {
        trailer["measured_rate"] = nullptr;
        trailer["error"] = e.what();
    }
    os << trailer.dump() << '\n';
    if (cfg.snapshot_stride > 0) {
        os << '\n';
        io::write_snapshots_csv(os, traj, cfg.snapshot_stride);
    }
    return 0;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& os) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    nlohmann::json checks = nlohmann::json::array();
    bool all_pass = true;
    auto push = [&](const std::string& name, double value, double expected, double tol) {
        const bool pass = std::abs(value - expected) <= tol;
        all_pass = all_pass && pass;
        checks.push_back({{"name", name},
                          {"value", value},
                          {"expected", expected},
                          {"tol", tol},
                          {"pass", pass}});
    };

    push("lambda_cyl", stationary::lambda_cyl(), std::log(2.0) * std::log(2.0), 0.0);

    const Grid1D grid = radial_grid(cfg);
    push("mu(0)", eigencurve::mu(0.0, grid), -1.0 + 2.0 / kLn2, 1e-6);
    push("mu_prime(0)", eigencurve::mu_prime(0.0, grid),
         -2.0 + 3.0 / (2.0 * kLn2 * kLn2) - 1.0 / kLn2, 1e-6);
    push("dr_h0(1)", radial::boundary_flux(radial::solve_h(0.0, grid)), 1.0 / kLn2 - 2.0,
         1e-6);
    push("dr_p0(1)",
         radial::boundary_flux(radial::solve_p(0.0, radial::solve_h(0.0, grid))),
         3.0 / (4.0 * kLn2 * kLn2) - 1.0 / (2.0 * kLn2) - 0.5, 1e-6);

    {
        const Grid1D zg = make_uniform_grid(-1.0, 1.0, cfg.field_nz);
        const Grid1D rg = make_uniform_grid(1.0, 2.0, cfg.field_nr);
        const FilmProfile v0 = zero_film(zg);
        const ZFunction g = field::electrostatic_force(v0, cfg.sigma, zg, rg);
        double worst = g.values[zg.size() / 2];
        for (double v : g.values)
            if (std::abs(v - 1.0 / (kLn2 * kLn2)) > std::abs(worst - 1.0 / (kLn2 * kLn2)))
                worst = v;
        push("g(0)", worst, 1.0 / (kLn2 * kLn2), 1e-4);
    }

    {
        const long n = 1000000;
        double sum = 0.0;
        for (long j = 1; j <= n; ++j) {
            const double m = 2.0 * j + 1.0;
            sum += 1.0 / (m * m - 1.0);
        }
        push("tail_sum", sum, 0.25, 1e-6);
        push("tail_sum_partial_identity", sum,
             static_cast<double>(n) / (4.0 * (static_cast<double>(n) + 1.0)), 1e-12);
    }

    {
        // reduction identity at an irrational z plus the two-term closed form
        const cosine::OddCosineSum f{{0.3, -0.2, 0.11, 0.05}};
        const auto b = cosine::odd_to_even(f);
        const double z = 0.6180339887498949;
        double even = 0.0;
        for (std::size_t j = 0; j < b.size(); ++j) even += b[j] * std::cos(j * kPi * z);
        push("cosine_reduction", cosine::evaluate(f, z), std::cos(kPi * z / 2.0) * even,
             1e-12);
        const cosine::OddCosineSum two{{0.7, 0.25}};
        const auto b2 = cosine::odd_to_even(two);
        push("cosine_reduction_closed_form", b2[0], two.coeffs[0] - two.coeffs[1], 0.0);
    }

    const auto t1 = std::chrono::steady_clock::now();
    nlohmann::json out;
    out["checks"] = checks;
    out["all_pass"] = all_pass;
    out["elapsed_seconds"] = std::chrono::duration<double>(t1 - t0).count();
    os << out.dump(2) << '\n';
    return all_pass ? 0 : 2;
}

}  // namespace soapfilm::cli
