#include "soapfilm/field.hpp"

#include <cmath>

namespace soapfilm::field {

namespace {

const double kLn2 = 0.69314718055994530942;

void check_field_grids(const Grid1D& zgrid, const Grid1D& rgrid) {
    if (zgrid.a != -1.0 || zgrid.b != 1.0)
        throw std::invalid_argument("field: zgrid must span [-1,1]");
    if (rgrid.a != 1.0 || rgrid.b != 2.0)
        throw std::invalid_argument("field: rgrid must span [1,2]");
    if (rgrid.size() < 3)
        throw std::invalid_argument("field: need at least 3 r-nodes");
}

/// Film values resampled onto the field z-grid (cubic when grids differ);
/// endpoints pinned to zero.
std::vector<double> film_on_zgrid(const FilmProfile& v, const Grid1D& zgrid) {
    std::vector<double> out(zgrid.size());
    if (same_grid(v.grid, zgrid)) {
        out = v.values;
    } else {
        for (std::size_t i = 0; i < zgrid.size(); ++i)
            out[i] = interp_cubic(v.grid, v.values, zgrid.nodes[i]);
    }
    out.front() = 0.0;
    out.back() = 0.0;
    return out;
}

void check_admissible(const FilmProfile& v) {
    const int bad = first_inadmissible_node(v, 0.0);
    if (bad >= 0)
        throw AdmissibilityError("film profile outside S at node " + std::to_string(bad),
                                 bad, v.values[bad]);
    if (v.values.front() != 0.0 || v.values.back() != 0.0)
        throw AdmissibilityError("film profile endpoints must vanish", 0, v.values.front());
}

}  // namespace

CylPoissonSolver::CylPoissonSolver(Grid1D zgrid, Grid1D rgrid, double sigma)
    : zgrid_(std::move(zgrid)), rgrid_(std::move(rgrid)), sigma_(sigma) {
    check_field_grids(zgrid_, rgrid_);
    if (!(sigma > 0.0)) throw std::invalid_argument("CylPoissonSolver: sigma > 0 required");
    const int nz = zgrid_.n, nr = rgrid_.n;
    r_fast_ = nr <= nz;
    const int stride = r_fast_ ? nr : nz;
    const std::size_t N = static_cast<std::size_t>(nz) * nr;
    lu_ = std::make_unique<linalg::BandedMatrix>(N, stride, stride);

    // rows scaled by r_j: -[r_{j+1/2} df - r_{j-1/2} db]/h_r^2 - sigma^2 r_j D2_z
    const double ihr2 = 1.0 / (rgrid_.h * rgrid_.h);
    const double ihz2 = 1.0 / (zgrid_.h * zgrid_.h);
    const double s2 = sigma_ * sigma_;
    for (int iz = 1; iz <= nz; ++iz) {
        for (int jr = 1; jr <= nr; ++jr) {
            const double r = rgrid_.nodes[jr];
            const double rp = 0.5 * (r + rgrid_.nodes[jr + 1]);
            const double rm = 0.5 * (r + rgrid_.nodes[jr - 1]);
            const std::size_t row = index(iz, jr);
            lu_->at(row, row) = (rp + rm) * ihr2 + 2.0 * s2 * r * ihz2;
            if (jr > 1) lu_->at(row, index(iz, jr - 1)) = -rm * ihr2;
            if (jr < nr) lu_->at(row, index(iz, jr + 1)) = -rp * ihr2;
            if (iz > 1) lu_->at(row, index(iz - 1, jr)) = -s2 * r * ihz2;
            if (iz < nz) lu_->at(row, index(iz + 1, jr)) = -s2 * r * ihz2;
        }
    }
    if (!lu_->factor())
        throw ComputeError("CylPoissonSolver: banded factorization failed");
}

std::size_t CylPoissonSolver::index(int iz, int jr) const {
    if (r_fast_)
        return static_cast<std::size_t>(iz - 1) * rgrid_.n + (jr - 1);
    return static_cast<std::size_t>(jr - 1) * zgrid_.n + (iz - 1);
}

PotentialField CylPoissonSolver::solve(const PotentialField& rhs) const {
    if (!same_grid(rhs.zgrid, zgrid_) || !same_grid(rhs.rgrid, rgrid_))
        throw std::invalid_argument("CylPoissonSolver::solve: grid mismatch");
    const int nz = zgrid_.n, nr = rgrid_.n;
    std::vector<double> b(static_cast<std::size_t>(nz) * nr);
    for (int iz = 1; iz <= nz; ++iz)
        for (int jr = 1; jr <= nr; ++jr)
            b[index(iz, jr)] = rgrid_.nodes[jr] * rhs.at(iz, jr);
    lu_->solve(b);
    PotentialField out{zgrid_, rgrid_,
                       std::vector<double>(zgrid_.size() * rgrid_.size(), 0.0)};
    for (int iz = 1; iz <= nz; ++iz)
        for (int jr = 1; jr <= nr; ++jr) out.at(iz, jr) = b[index(iz, jr)];
    return out;
}

PotentialField solve_cyl_poisson(const PotentialField& rhs, double sigma) {
    CylPoissonSolver solver(rhs.zgrid, rhs.rgrid, sigma);
    return solver.solve(rhs);
}

CoefficientField assemble_transformed(const FilmProfile& v, double sigma,
                                      const Grid1D& zgrid, const Grid1D& rgrid) {
    check_field_grids(zgrid, rgrid);
    check_admissible(v);
    const std::vector<double> vz_vals = film_on_zgrid(v, zgrid);
    const std::vector<double> dv = first_derivative(zgrid, vz_vals);
    const double s2 = sigma * sigma;

    CoefficientField cf;
    cf.zgrid = zgrid;
    cf.rgrid = rgrid;
    const std::size_t nzt = zgrid.size(), nrt = rgrid.size();
    cf.a11.resize(nzt * nrt);
    cf.a12.resize(nzt * nrt);
    cf.a22.resize(nzt * nrt);
    cf.d2.resize(nzt * nrt);
    for (std::size_t iz = 0; iz < nzt; ++iz) {
        const double vi = vz_vals[iz];
        const double vzi = dv[iz];
        const double om = 1.0 - vi;
        for (std::size_t jr = 0; jr < nrt; ++jr) {
            const double r = rgrid.nodes[jr];
            const double denom = 2.0 * vi + om * r;
            if (!(om > 0.0) || !(denom > 0.0))
                throw AdmissibilityError("assemble_transformed: degenerate coefficients",
                                         static_cast<int>(iz), vi);
            const std::size_t id = cf.idx(iz, jr);
            cf.a11[id] = s2 * om;
            cf.a12[id] = -s2 * vzi * (2.0 - r);
            cf.a22[id] = (1.0 + s2 * vzi * vzi * (2.0 - r) * (2.0 - r)) / om;
            cf.d2[id] = 1.0 / denom;
        }
    }
    return cf;
}

PhiSolution solve_phi(const FilmProfile& v, double sigma, const Grid1D& zgrid,
                      const Grid1D& rgrid) {
    check_field_grids(zgrid, rgrid);
    const CoefficientField cf = assemble_transformed(v, sigma, zgrid, rgrid);
    const std::vector<double> vv = film_on_zgrid(v, zgrid);
    const std::vector<double> dv = first_derivative(zgrid, vv);
    const std::vector<double> d2v = second_difference(zgrid, vv);

    const int nz = zgrid.n, nr = rgrid.n;
    const bool r_fast = nr <= nz;
    const int stride = (r_fast ? nr : nz) + 1;  // 9-point stencil
    auto index = [&](int iz, int jr) -> std::size_t {
        if (r_fast) return static_cast<std::size_t>(iz - 1) * nr + (jr - 1);
        return static_cast<std::size_t>(jr - 1) * nz + (iz - 1);
    };
    const std::size_t N = static_cast<std::size_t>(nz) * nr;
    linalg::BandedMatrix lu(N, stride, stride);

    const double ihz2 = 1.0 / (zgrid.h * zgrid.h);
    const double ihr2 = 1.0 / (rgrid.h * rgrid.h);
    const double ix = 1.0 / (4.0 * zgrid.h * rgrid.h);
    const double ihr = 1.0 / (2.0 * rgrid.h);
    std::vector<double> rhs(N, 0.0);

    // L_v w = dz(a11 wz) + dz(a12 wr) + dr(a12 wz) + dr(a22 wr) + d2 wr,
    // conservative for the diagonal part, centered cross differences for the
    // mixed term; w = 0 on the boundary so off-domain couplings drop.
    for (int iz = 1; iz <= nz; ++iz) {
        for (int jr = 1; jr <= nr; ++jr) {
            const std::size_t row = index(iz, jr);
            auto add = [&](int i2, int j2, double coef) {
                if (i2 < 1 || i2 > nz || j2 < 1 || j2 > nr) return;  // Dirichlet 0
                lu.at(row, index(i2, j2)) += coef;
            };
            const std::size_t id = cf.idx(iz, jr);
            const double a11p = 0.5 * (cf.a11[id] + cf.a11[cf.idx(iz + 1, jr)]);
            const double a11m = 0.5 * (cf.a11[id] + cf.a11[cf.idx(iz - 1, jr)]);
            const double a22p = 0.5 * (cf.a22[id] + cf.a22[cf.idx(iz, jr + 1)]);
            const double a22m = 0.5 * (cf.a22[id] + cf.a22[cf.idx(iz, jr - 1)]);
            add(iz, jr, -(a11p + a11m) * ihz2 - (a22p + a22m) * ihr2);
            add(iz + 1, jr, a11p * ihz2);
            add(iz - 1, jr, a11m * ihz2);
            add(iz, jr + 1, a22p * ihr2);
            add(iz, jr - 1, a22m * ihr2);
            // dz(a12 wr): a12 at z-neighbours
            const double a12zp = cf.a12[cf.idx(iz + 1, jr)];
            const double a12zm = cf.a12[cf.idx(iz - 1, jr)];
            add(iz + 1, jr + 1, a12zp * ix);
            add(iz + 1, jr - 1, -a12zp * ix);
            add(iz - 1, jr + 1, -a12zm * ix);
            add(iz - 1, jr - 1, a12zm * ix);
            // dr(a12 wz): a12 at r-neighbours
            const double a12rp = cf.a12[cf.idx(iz, jr + 1)];
            const double a12rm = cf.a12[cf.idx(iz, jr - 1)];
            add(iz + 1, jr + 1, a12rp * ix);
            add(iz - 1, jr + 1, -a12rp * ix);
            add(iz + 1, jr - 1, -a12rm * ix);
            add(iz - 1, jr - 1, a12rm * ix);
            // drift
            add(iz, jr + 1, cf.d2[id] * ihr);
            add(iz, jr - 1, -cf.d2[id] * ihr);

            // analytic f_v = L_v(ln(r)/ln 2) from the non-divergence form
            const double r = rgrid.nodes[jr];
            const double vi = vv[iz];
            const double vzi = dv[iz];
            const double vzzi = d2v[iz];
            const double om = 1.0 - vi;
            const double f =
                (1.0 / kLn2) *
                (-(1.0 + sigma * sigma * vzi * vzi * (2.0 - r) * (2.0 - r)) / (om * r * r) +
                 (-sigma * sigma * (2.0 - r) * (vzzi + 2.0 * vzi * vzi / om) +
                  1.0 / (2.0 * vi + om * r)) /
                     r);
            rhs[row] = f;
        }
    }
    if (!lu.factor())
        throw ComputeError("solve_phi: banded factorization of the transformed operator failed");
    lu.solve(rhs);

    PhiSolution out;
    out.correction = PotentialField{zgrid, rgrid,
                                    std::vector<double>(zgrid.size() * rgrid.size(), 0.0)};
    for (int iz = 1; iz <= nz; ++iz)
        for (int jr = 1; jr <= nr; ++jr) out.correction.at(iz, jr) = rhs[index(iz, jr)];
    out.phi = PotentialField{zgrid, rgrid,
                             std::vector<double>(zgrid.size() * rgrid.size(), 0.0)};
    for (std::size_t iz = 0; iz < zgrid.size(); ++iz)
        for (std::size_t jr = 0; jr < rgrid.size(); ++jr)
            out.phi.at(iz, jr) =
                std::log(rgrid.nodes[jr]) / kLn2 - out.correction.at(iz, jr);
    return out;
}

ZFunction boundary_gradient_trace(const PotentialField& phi) {
    if (phi.rgrid.size() < 3)
        throw std::invalid_argument("boundary_gradient_trace: need at least 3 r-nodes");
    ZFunction t{phi.zgrid, std::vector<double>(phi.zgrid.size(), 0.0)};
    if (phi.rgrid.size() == 3) {
        const double ih = 1.0 / (2.0 * phi.rgrid.h);
        for (std::size_t iz = 0; iz < phi.zgrid.size(); ++iz)
            t.values[iz] =
                (-3.0 * phi.at(iz, 0) + 4.0 * phi.at(iz, 1) - phi.at(iz, 2)) * ih;
        return t;
    }
    const double ih = 1.0 / (6.0 * phi.rgrid.h);
    for (std::size_t iz = 0; iz < phi.zgrid.size(); ++iz)
        t.values[iz] = (-11.0 * phi.at(iz, 0) + 18.0 * phi.at(iz, 1) -
                        9.0 * phi.at(iz, 2) + 2.0 * phi.at(iz, 3)) *
                       ih;
    return t;
}

ZFunction electrostatic_force(const FilmProfile& v, double sigma, const Grid1D& zgrid,
                              const Grid1D& rgrid) {
    check_admissible(v);
    const PhiSolution sol = solve_phi(v, sigma, zgrid, rgrid);
    // d_r phi(.,1) = 1/ln 2 - d_r correction(.,1); the base part is exact
    const ZFunction wtrace = boundary_gradient_trace(sol.correction);
    std::vector<double> trace_on_v(v.grid.size());
    if (same_grid(v.grid, zgrid)) {
        for (std::size_t i = 0; i < trace_on_v.size(); ++i)
            trace_on_v[i] = 1.0 / kLn2 - wtrace.values[i];
    } else {
        for (std::size_t i = 0; i < trace_on_v.size(); ++i)
            trace_on_v[i] =
                1.0 / kLn2 - interp_cubic(zgrid, wtrace.values, v.grid.nodes[i]);
    }
    const std::vector<double> dv = first_derivative(v.grid, v.values);
    ZFunction g{v.grid, std::vector<double>(v.grid.size())};
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        const double slope = 1.0 + sigma * sigma * dv[i] * dv[i];
        const double om = 1.0 - v.values[i];
        g.values[i] = std::pow(slope, 1.5) * trace_on_v[i] * trace_on_v[i] / (om * om);
    }
    return g;
}

LinearizedOperator::LinearizedOperator(Grid1D zgrid, Grid1D rgrid, double sigma)
    : solver_(std::move(zgrid), std::move(rgrid), sigma) {}

ZFunction LinearizedOperator::apply(const ZFunction& v) const {
    const Grid1D& zgrid = solver_.zgrid();
    const Grid1D& rgrid = solver_.rgrid();
    if (!same_grid(v.grid, zgrid))
        throw std::invalid_argument("LinearizedOperator: v grid mismatch");
    if (v.values.front() != 0.0 || v.values.back() != 0.0)
        throw std::invalid_argument("LinearizedOperator: v must vanish at z = +-1");
    const double s2 = solver_.sigma() * solver_.sigma();
    const std::vector<double> vzz = second_difference(zgrid, v.values);

    PotentialField rhs{zgrid, rgrid, std::vector<double>(zgrid.size() * rgrid.size(), 0.0)};
    for (std::size_t iz = 1; iz + 1 < zgrid.size(); ++iz) {
        for (std::size_t jr = 1; jr + 1 < rgrid.size(); ++jr) {
            const double r = rgrid.nodes[jr];
            rhs.at(iz, jr) =
                -2.0 / (r * r * r) * v.values[iz] - s2 * (2.0 - r) / r * vzz[iz];
        }
    }
    const PotentialField f = solver_.solve(rhs);
    const ZFunction tr = boundary_gradient_trace(f);
    ZFunction out{zgrid, std::vector<double>(zgrid.size(), 0.0)};
    for (std::size_t iz = 1; iz + 1 < zgrid.size(); ++iz)
        out.values[iz] = s2 * vzz[iz] + 3.0 * v.values[iz] + 2.0 * tr.values[iz];
    return out;
}

ZFunction apply_linearized(const ZFunction& v, double sigma, const Grid1D& rgrid) {
    LinearizedOperator op(v.grid, rgrid, sigma);
    return op.apply(v);
}

}  // namespace soapfilm::field
