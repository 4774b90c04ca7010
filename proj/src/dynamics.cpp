#include "soapfilm/dynamics.hpp"

#include <cmath>

#include "soapfilm/field.hpp"
#include "soapfilm/linalg.hpp"

namespace soapfilm::dynamics {

namespace {
const double kEventMargin = 1e-6;
}

ZFunction rhs_dyn(const FilmProfile& u, double lambda,
                  const stationary::StationaryProblem& prob) {
    return prob.residual(u, lambda);
}

FilmProfile step(const FilmProfile& u, double dt, double lambda,
                 const stationary::StationaryProblem& prob) {
    if (!(dt > 0.0)) throw std::invalid_argument("step: dt > 0 required");
    const int bad0 = first_inadmissible_node(u, 0.0);
    if (bad0 >= 0)
        throw AdmissibilityError("step: state outside S", bad0, u.values[bad0]);
    const Grid1D& grid = u.grid;
    const int m = grid.n;
    const double s2 = prob.sigma() * prob.sigma();
    const std::vector<double> uz = first_derivative(grid, u.values);

    // explicit part: -1/(u+1) + lambda g(u)
    std::vector<double> expl(m, 0.0);
    if (lambda != 0.0) {
        const ZFunction g =
            field::electrostatic_force(u, prob.sigma(), grid, prob.field_rgrid());
        for (int i = 0; i < m; ++i)
            expl[i] = -1.0 / (u.values[i + 1] + 1.0) + lambda * g.values[i + 1];
    } else {
        for (int i = 0; i < m; ++i) expl[i] = -1.0 / (u.values[i + 1] + 1.0);
    }

    // implicit part: (I - dt a(u) D2) u+ with a frozen at the current state
    const double ih2 = 1.0 / (grid.h * grid.h);
    std::vector<double> sub(m, 0.0), diag(m, 0.0), sup(m, 0.0), rhs(m, 0.0);
    for (int i = 0; i < m; ++i) {
        const double a = s2 / (1.0 + s2 * uz[i + 1] * uz[i + 1]);
        diag[i] = 1.0 + 2.0 * dt * a * ih2;
        if (i > 0) sub[i] = -dt * a * ih2;
        if (i + 1 < m) sup[i] = -dt * a * ih2;
        rhs[i] = u.values[i + 1] + dt * expl[i];
    }
    std::vector<double> x;
    if (!linalg::solve_tridiagonal_pivoting(sub, diag, sup, rhs, x))
        throw ComputeError("step: implicit tridiagonal solve failed");

    FilmProfile out{grid, std::vector<double>(grid.size(), 0.0)};
    for (int i = 0; i < m; ++i) out.values[i + 1] = x[i];
    const int bad = first_inadmissible_node(out, kEventMargin);
    if (bad >= 0)
        throw AdmissibilityError("step: profile left S", bad, out.values[bad]);
    return out;
}

Trajectory evolve(const FilmProfile& u0, double T, double dt, double lambda,
                  const stationary::StationaryProblem& prob, const FilmProfile& u_ref) {
    if (!(T > 0.0) || !(dt > 0.0)) throw std::invalid_argument("evolve: T, dt > 0 required");
    if (!same_grid(u0.grid, u_ref.grid))
        throw std::invalid_argument("evolve: u_ref grid mismatch");
    const int bad0 = first_inadmissible_node(u0, 0.0);
    if (bad0 >= 0)
        throw AdmissibilityError("evolve: initial state outside S", bad0, u0.values[bad0]);

    Trajectory traj;
    auto record = [&](double t, const FilmProfile& u) {
        std::vector<double> diff(u.values.size());
        for (std::size_t i = 0; i < diff.size(); ++i)
            diff[i] = u.values[i] - u_ref.values[i];
        traj.times.push_back(t);
        traj.sup_norms.push_back(sup_norm(diff));
        traj.states.push_back(u);
    };

    FilmProfile u = u0;
    double t = 0.0;
    record(t, u);
    const long nsteps = static_cast<long>(std::ceil(T / dt - 1e-12));
    for (long k = 0; k < nsteps; ++k) {
        try {
            u = step(u, dt, lambda, prob);
        } catch (const AdmissibilityError& ev) {
            traj.stop = ev.value < 0.0 ? StopReason::pinch_off : StopReason::touch;
            traj.stop_time = t + dt;
            traj.stop_node = ev.node;
            return traj;
        }
        t = dt * (k + 1);
        record(t, u);
    }
    traj.stop_time = t;
    return traj;
}

double measured_rate(const Trajectory& traj, std::pair<double, double> window) {
    if (traj.times.empty()) throw std::invalid_argument("measured_rate: empty trajectory");
    if (window.first < traj.times.front() - 1e-12 ||
        window.second > traj.times.back() + 1e-12 || !(window.first < window.second))
        throw std::invalid_argument("measured_rate: window outside trajectory");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    long cnt = 0;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const double t = traj.times[i];
        if (t < window.first || t > window.second) continue;
        const double n = traj.sup_norms[i];
        if (!(n > 0.0))
            throw std::invalid_argument("measured_rate: non-positive norm in window");
        const double y = std::log(n);
        sx += t;
        sy += y;
        sxx += t * t;
        sxy += t * y;
        ++cnt;
    }
    if (cnt < 2) throw std::invalid_argument("measured_rate: too few samples in window");
    const double denom = cnt * sxx - sx * sx;
    return (cnt * sxy - sx * sy) / denom;
}

}  // namespace soapfilm::dynamics
