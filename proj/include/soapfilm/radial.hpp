#pragma once

#include <utility>
#include <vector>

#include "soapfilm/types.hpp"

// One-dimensional radial machinery on (1,2): Dirichlet solves of
// -(1/r) d_r(r d_r f) + s f = rhs, eigenpairs of the radial operator and
// r-weighted inner products. Discretization is 2nd-order centered finite
// differences on the self-adjoint form -d_r(r d_r f) + s r f = r rhs.

namespace soapfilm::radial {

struct RadialEigenpair {
    double xi = 0.0;      // eigenvalue
    RadialProfile rho;    // eigenfunction, unit norm in the r-weighted product
    int k = 0;
};

/// Solve -(1/r) d_r(r d_r f) + s f = rhs with f(1) = f(2) = 0.
/// Requires s > -xi_0; throws SingularSystemError near -xi_k.
RadialProfile sl_solve(double s, const RadialProfile& rhs, const Grid1D& grid);

/// h_s: sl_solve specialized to the source -2/r^3 + s (2-r)/r.
RadialProfile solve_h(double s, const Grid1D& grid);

/// p_s = d_s h_s: sl_solve with source (2-r)/r - h_s.
RadialProfile solve_p(double s, const RadialProfile& h_s);

/// One-sided 2nd-order derivative of f at r = 1.
double boundary_flux(const RadialProfile& f);

/// K smallest eigenpairs; requires grid.n >= 10 K. Eigenfunctions are
/// orthonormal in the r-weighted inner product and signed so that the
/// first interior value is positive.
std::vector<RadialEigenpair> radial_eigenpairs(int K, const Grid1D& grid);

/// Composite trapezoid quadrature of the r-weighted product of f and g.
double weighted_inner(const RadialProfile& f, const RadialProfile& g);

/// Expansion coefficients of -2/r^3 (c_k) and (2-r)/r (d_k) against the
/// eigenfunctions.
std::pair<std::vector<double>, std::vector<double>>
coefficients_ck_dk(const std::vector<RadialEigenpair>& eigs);

/// Nodewise samples of the two source terms.
RadialProfile sample_source_c(const Grid1D& grid);  // -2/r^3
RadialProfile sample_source_d(const Grid1D& grid);  // (2-r)/r

}  // namespace soapfilm::radial
