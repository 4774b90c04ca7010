#pragma once

#include <memory>
#include <vector>

#include "soapfilm/linalg.hpp"
#include "soapfilm/types.hpp"

// Elliptic solves on the fixed rectangle (-1,1) x (1,2): the cylindrical
// Dirichlet Laplacian, the transformed operator for a deflected film, the
// electrostatic potential, the boundary force g(v) and the linearized
// operator at the cylinder. All solves use a direct banded LU with partial
// pivoting; 2nd-order finite differences throughout.

namespace soapfilm::field {

/// Factored discrete -Delta_cyl = -(1/r) d_r(r d_r .) - sigma^2 d_z^2 with
/// homogeneous Dirichlet data; reusable across right-hand sides.
class CylPoissonSolver {
public:
    CylPoissonSolver(Grid1D zgrid, Grid1D rgrid, double sigma);

    /// rhs sampled on the full tensor grid (boundary entries ignored).
    PotentialField solve(const PotentialField& rhs) const;

    const Grid1D& zgrid() const { return zgrid_; }
    const Grid1D& rgrid() const { return rgrid_; }
    double sigma() const { return sigma_; }

private:
    Grid1D zgrid_, rgrid_;
    double sigma_;
    bool r_fast_;
    std::unique_ptr<linalg::BandedMatrix> lu_;

    std::size_t index(int iz, int jr) const;
};

PotentialField solve_cyl_poisson(const PotentialField& rhs, double sigma);

/// Coefficients of the transformed operator for a film profile v; v is
/// interpolated (cubic) when its grid differs from zgrid.
CoefficientField assemble_transformed(const FilmProfile& v, double sigma,
                                      const Grid1D& zgrid, const Grid1D& rgrid);

struct PhiSolution {
    PotentialField phi;         // boundary values ln(r)/ln(2)
    PotentialField correction;  // phi = ln(r)/ln(2) - correction; Dirichlet 0
};

/// Transformed electrostatic potential for film profile v.
PhiSolution solve_phi(const FilmProfile& v, double sigma, const Grid1D& zgrid,
                      const Grid1D& rgrid);

/// One-sided 2nd-order r-derivative at r = 1, per z node.
ZFunction boundary_gradient_trace(const PotentialField& phi);

/// g(v) = (1 + sigma^2 v_z^2)^{3/2} |d_r phi_v(.,1)|^2 / (1-v)^2 on v's grid.
/// The trace of phi_v is evaluated as the exact base gradient 1/ln(2) minus
/// the stencil derivative of the Dirichlet correction, so g(0) is exact.
ZFunction electrostatic_force(const FilmProfile& v, double sigma, const Grid1D& zgrid,
                              const Grid1D& rgrid);

/// Linearization of the stationary operator at the cylinder,
///   v -> sigma^2 v_zz + 3 v + 2 d_r (-Delta_cyl)^{-1}[-2/r^3 v
///        - sigma^2 (2-r)/r v_zz](., 1),
/// acting on functions of z that vanish at z = +-1.
class LinearizedOperator {
public:
    LinearizedOperator(Grid1D zgrid, Grid1D rgrid, double sigma);
    ZFunction apply(const ZFunction& v) const;
    const Grid1D& zgrid() const { return solver_.zgrid(); }

private:
    CylPoissonSolver solver_;
};

ZFunction apply_linearized(const ZFunction& v, double sigma, const Grid1D& rgrid);

}  // namespace soapfilm::field
