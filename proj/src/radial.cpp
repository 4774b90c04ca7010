#include "soapfilm/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "soapfilm/kernels.hpp"
#include "soapfilm/linalg.hpp"

namespace soapfilm::radial {

namespace {

void check_radial_grid(const Grid1D& grid) {
    if (grid.a != 1.0 || grid.b != 2.0)
        throw std::invalid_argument("radial: grid must span [1,2]");
}

/// Interior tridiagonal of -d_r(r d_r .) scaled by 1/h^2 (diag d, off e),
/// i.e. the matrix A of the pencil A x = xi R x with R = diag(r_i).
void assemble_stiffness(const Grid1D& grid, std::vector<double>& d, std::vector<double>& e) {
    const int n = grid.n;
    const double ih2 = 1.0 / (grid.h * grid.h);
    d.assign(n, 0.0);
    e.assign(n > 0 ? n - 1 : 0, 0.0);
    for (int i = 0; i < n; ++i) d[i] = 2.0 * grid.nodes[i + 1] * ih2;
    for (int i = 0; i + 1 < n; ++i)
        e[i] = -(0.5 * (grid.nodes[i + 1] + grid.nodes[i + 2])) * ih2;
}

double nearest_radial_eigenvalue(const Grid1D& grid, double s) {
    std::vector<double> d, e;
    assemble_stiffness(grid, d, e);
    // pencil -> standard form via the diagonal weight
    std::vector<double> bd(grid.n), be(grid.n > 0 ? grid.n - 1 : 0);
    for (int i = 0; i < grid.n; ++i) bd[i] = d[i] / grid.nodes[i + 1];
    for (int i = 0; i + 1 < grid.n; ++i)
        be[i] = e[i] / std::sqrt(grid.nodes[i + 1] * grid.nodes[i + 2]);
    const int K = std::min(grid.n, 12);
    auto xis = linalg::tridiagonal_smallest_eigenvalues(bd, be, K);
    double best = xis[0];
    for (double xi : xis)
        if (std::abs(-xi - s) < std::abs(-best - s)) best = xi;
    return -best;
}

}  // namespace

RadialProfile sl_solve(double s, const RadialProfile& rhs, const Grid1D& grid) {
    check_radial_grid(grid);
    if (!same_grid(rhs.grid, grid) || rhs.values.size() != grid.size())
        throw std::invalid_argument("sl_solve: rhs grid mismatch");
    const int n = grid.n;
    std::vector<double> d, e;
    assemble_stiffness(grid, d, e);
    std::vector<double> b(n);
    for (int i = 0; i < n; ++i) {
        const double r = grid.nodes[i + 1];
        d[i] += s * r;
        b[i] = r * rhs.values[i + 1];
    }
    std::vector<double> x;
    bool ok = linalg::solve_spd_tridiagonal(d, e, b, x);
    if (ok) {
        // a pivot can survive arbitrarily close to -xi_k; catch the blowup
        double xmax = 0.0, bmax = 0.0;
        for (int i = 0; i < n; ++i) {
            xmax = std::max(xmax, std::abs(x[i]));
            bmax = std::max(bmax, std::abs(rhs.values[i + 1]));
        }
        if (xmax > 1e11 * (bmax + 1.0)) ok = false;
    }
    if (!ok) {
        const double off = nearest_radial_eigenvalue(grid, s);
        throw SingularSystemError(
            "sl_solve: operator singular or indefinite at s = " + std::to_string(s) +
                "; nearest eigenvalue of -d_r(r d_r)/r is at s = " + std::to_string(off),
            off);
    }
    RadialProfile out{grid, std::vector<double>(grid.size(), 0.0)};
    for (int i = 0; i < n; ++i) out.values[i + 1] = x[i];
    return out;
}

RadialProfile sample_source_c(const Grid1D& grid) {
    RadialProfile f{grid, std::vector<double>(grid.size())};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid.nodes[i];
        f.values[i] = -2.0 / (r * r * r);
    }
    return f;
}

RadialProfile sample_source_d(const Grid1D& grid) {
    RadialProfile f{grid, std::vector<double>(grid.size())};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid.nodes[i];
        f.values[i] = (2.0 - r) / r;
    }
    return f;
}

RadialProfile solve_h(double s, const Grid1D& grid) {
    RadialProfile rhs{grid, std::vector<double>(grid.size())};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid.nodes[i];
        rhs.values[i] = -2.0 / (r * r * r) + s * (2.0 - r) / r;
    }
    return sl_solve(s, rhs, grid);
}

RadialProfile solve_p(double s, const RadialProfile& h_s) {
    const Grid1D& grid = h_s.grid;
    check_radial_grid(grid);
    if (h_s.values.size() != grid.size())
        throw std::invalid_argument("solve_p: profile inconsistent with its grid");
    RadialProfile rhs{grid, std::vector<double>(grid.size())};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid.nodes[i];
        rhs.values[i] = (2.0 - r) / r - h_s.values[i];
    }
    return sl_solve(s, rhs, grid);
}

double boundary_flux(const RadialProfile& f) {
    if (f.values.size() < 3)
        throw std::invalid_argument("boundary_flux: need at least 3 nodes");
    const double h = f.grid.h;
    const auto& v = f.values;
    if (v.size() == 3) return (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
    return (-11.0 * v[0] + 18.0 * v[1] - 9.0 * v[2] + 2.0 * v[3]) / (6.0 * h);
}

std::vector<RadialEigenpair> radial_eigenpairs(int K, const Grid1D& grid) {
    check_radial_grid(grid);
    if (K < 1) throw std::invalid_argument("radial_eigenpairs: K >= 1 required");
    if (grid.n < 10 * K)
        throw std::invalid_argument("radial_eigenpairs: under-resolved, need n >= 10 K");
    const int n = grid.n;
    std::vector<double> d, e;
    assemble_stiffness(grid, d, e);
    // B = R^{-1/2} A R^{-1/2}: same spectrum as the pencil A x = xi R x
    std::vector<double> bd(n), be(n - 1);
    for (int i = 0; i < n; ++i) bd[i] = d[i] / grid.nodes[i + 1];
    for (int i = 0; i + 1 < n; ++i)
        be[i] = e[i] / std::sqrt(grid.nodes[i + 1] * grid.nodes[i + 2]);

    auto xis = linalg::tridiagonal_smallest_eigenvalues(bd, be, K);
    std::vector<RadialEigenpair> out(K);
    for (int k = 0; k < K; ++k) {
        auto y = linalg::tridiagonal_eigenvector(bd, be, xis[k]);
        RadialProfile rho{grid, std::vector<double>(grid.size(), 0.0)};
        for (int i = 0; i < n; ++i) rho.values[i + 1] = y[i] / std::sqrt(grid.nodes[i + 1]);
        const double nrm = std::sqrt(weighted_inner(rho, rho));
        double sgn = rho.values[1] >= 0.0 ? 1.0 : -1.0;
        for (double& v : rho.values) v *= sgn / nrm;
        out[k] = RadialEigenpair{xis[k], std::move(rho), k};
    }
    return out;
}

double weighted_inner(const RadialProfile& f, const RadialProfile& g) {
    if (!same_grid(f.grid, g.grid))
        throw std::invalid_argument("weighted_inner: grid mismatch");
    const Grid1D& grid = f.grid;
    const std::size_t m = grid.size();
    std::vector<double> w(m);
    for (std::size_t i = 0; i < m; ++i) w[i] = grid.h * grid.nodes[i];
    w.front() *= 0.5;
    w.back() *= 0.5;
    return kernels::dot3(f.values.data(), g.values.data(), w.data(), m);
}

std::pair<std::vector<double>, std::vector<double>>
coefficients_ck_dk(const std::vector<RadialEigenpair>& eigs) {
    if (eigs.empty()) throw std::invalid_argument("coefficients_ck_dk: empty eigenpairs");
    const Grid1D& grid = eigs.front().rho.grid;
    const RadialProfile fc = sample_source_c(grid);
    const RadialProfile fd = sample_source_d(grid);
    std::vector<double> c(eigs.size()), dd(eigs.size());
    for (std::size_t k = 0; k < eigs.size(); ++k) {
        c[k] = weighted_inner(fc, eigs[k].rho);
        dd[k] = weighted_inner(fd, eigs[k].rho);
    }
    return {c, dd};
}

}  // namespace soapfilm::radial
