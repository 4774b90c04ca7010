#pragma once

#include <vector>

#include "soapfilm/radial.hpp"
#include "soapfilm/types.hpp"

// The eigencurve profile mu(s) = -s + 3 + 2 d_r h_s(1), its derivative, its
// unique zero s0, the threshold sigma_cyl = 2 sqrt(s0)/pi and the linearized
// spectrum mu_j(sigma) = mu(sigma^2 nu_j).

namespace soapfilm::eigencurve {

struct EigencurveSample {
    double s = 0.0;
    double mu = 0.0;
    double mu_prime = 0.0;
};

struct SpectrumReport {
    double sigma = 0.0;
    std::vector<double> mus;  // mu_j(sigma), j = 0..J
    std::vector<double> nus;  // nu_j = (j+1)^2 pi^2 / 4
};

struct ThresholdReport {
    double s0 = 0.0;
    double sigma_cyl = 0.0;
    std::pair<double, double> bracket{0.0, 0.0};
    double residual = 0.0;
};

/// j-th eigenvalue of the 1D Dirichlet Laplacian on (-1,1).
double nu(int j);

double mu(double s, const Grid1D& grid);
double mu_prime(double s, const Grid1D& grid);

/// Precomputed eigen data for the series form of mu.
struct SeriesData {
    std::vector<double> xi;       // eigenvalues
    std::vector<double> c_flux;   // c_k * d_r rho_k(1)
    std::vector<double> d_flux;   // d_k * d_r rho_k(1)
};

SeriesData make_series_data(const std::vector<radial::RadialEigenpair>& eigs);

/// Truncated series value of mu(s) using the first K eigenpairs.
double mu_series(double s, int K, const SeriesData& data);

/// Bisection for the unique zero of mu on the bracket [1.8, 6.3]; the
/// bracket's sign condition is asserted at runtime.
ThresholdReport find_s0(double tol, const Grid1D& grid);

SpectrumReport spectrum(double sigma, int J, const Grid1D& grid);

/// Closed-form bounds on mu_{2j}(sigma) valid for sigma > sigma_cyl.
std::pair<double, double> eigenvalue_bounds(double sigma, int j, double sigma_cyl);

/// Samples (s, mu, mu') on a uniform s-grid.
std::vector<EigencurveSample> sample_curve(double s_min, double s_max, int count,
                                           const Grid1D& grid);

}  // namespace soapfilm::eigencurve
