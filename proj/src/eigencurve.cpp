#include "soapfilm/eigencurve.hpp"

#include <cmath>

#include "soapfilm/kernels.hpp"

namespace soapfilm::eigencurve {

namespace {
const double kPi = 3.14159265358979323846;
}

double nu(int j) {
    const double k = (j + 1) * kPi / 2.0;
    return k * k;
}

double mu(double s, const Grid1D& grid) {
    return -s + 3.0 + 2.0 * radial::boundary_flux(radial::solve_h(s, grid));
}

double mu_prime(double s, const Grid1D& grid) {
    const RadialProfile h = radial::solve_h(s, grid);
    return -1.0 + 2.0 * radial::boundary_flux(radial::solve_p(s, h));
}

SeriesData make_series_data(const std::vector<radial::RadialEigenpair>& eigs) {
    auto [c, d] = radial::coefficients_ck_dk(eigs);
    SeriesData data;
    data.xi.resize(eigs.size());
    data.c_flux.resize(eigs.size());
    data.d_flux.resize(eigs.size());
    for (std::size_t k = 0; k < eigs.size(); ++k) {
        const double flux = radial::boundary_flux(eigs[k].rho);
        data.xi[k] = eigs[k].xi;
        data.c_flux[k] = c[k] * flux;
        data.d_flux[k] = d[k] * flux;
    }
    return data;
}

double mu_series(double s, int K, const SeriesData& data) {
    if (K < 1 || static_cast<std::size_t>(K) > data.xi.size())
        throw std::invalid_argument("mu_series: K exceeds available eigenpairs");
    const std::size_t n = static_cast<std::size_t>(K);
    const double sc = kernels::shifted_ratio_sum(data.c_flux.data(), data.xi.data(), s, n);
    const double sd = kernels::shifted_ratio_sum(data.d_flux.data(), data.xi.data(), s, n);
    return -s + 3.0 + 2.0 * sc + 2.0 * s * sd;
}

ThresholdReport find_s0(double tol, const Grid1D& grid) {
    if (!(tol > 0.0)) throw std::invalid_argument("find_s0: tol must be positive");
    double lo = 1.8, hi = 6.3;
    const double f_lo = mu(lo, grid);
    const double f_hi = mu(hi, grid);
    if (!(f_lo > 0.0) || !(f_hi < 0.0))
        throw ComputeError("find_s0: bracket sign check failed (mu(1.8) = " +
                           std::to_string(f_lo) + ", mu(6.3) = " + std::to_string(f_hi) +
                           "), radial solver defect suspected");
    ThresholdReport rep;
    rep.bracket = {lo, hi};
    double mid = 0.5 * (lo + hi), f_mid = mu(mid, grid);
    for (int it = 0; it < 200 && std::abs(f_mid) > tol; ++it) {
        if (f_mid > 0.0) lo = mid; else hi = mid;
        mid = 0.5 * (lo + hi);
        f_mid = mu(mid, grid);
    }
    if (std::abs(f_mid) > tol)
        throw NonConvergenceError("find_s0: bisection did not reach tolerance", 200);
    rep.s0 = mid;
    rep.residual = f_mid;
    rep.sigma_cyl = 2.0 * std::sqrt(mid) / kPi;
    return rep;
}

SpectrumReport spectrum(double sigma, int J, const Grid1D& grid) {
    if (!(sigma > 0.0)) throw std::invalid_argument("spectrum: sigma must be positive");
    if (J < 0) throw std::invalid_argument("spectrum: J must be non-negative");
    SpectrumReport rep;
    rep.sigma = sigma;
    rep.mus.resize(J + 1);
    rep.nus.resize(J + 1);
    for (int j = 0; j <= J; ++j) {
        rep.nus[j] = nu(j);
        rep.mus[j] = mu(sigma * sigma * rep.nus[j], grid);
    }
    return rep;
}

std::pair<double, double> eigenvalue_bounds(double sigma, int j, double sigma_cyl) {
    if (!(sigma > sigma_cyl))
        throw std::invalid_argument("eigenvalue_bounds: requires sigma > sigma_cyl");
    if (j < 0) throw std::invalid_argument("eigenvalue_bounds: j >= 0 required");
    const double m = 2.0 * j + 1.0;
    const double lower = -sigma * sigma * m * m * kPi * kPi / 4.0;
    const double upper = -(3.0 / 10.0) * (kPi * kPi / 4.0) * sigma * sigma * (m * m - 1.0);
    return {lower, upper};
}

std::vector<EigencurveSample> sample_curve(double s_min, double s_max, int count,
                                           const Grid1D& grid) {
    if (count < 2 || !(s_min < s_max))
        throw std::invalid_argument("sample_curve: bad sampling window");
    std::vector<EigencurveSample> out(count);
    for (int i = 0; i < count; ++i) {
        const double s = s_min + (s_max - s_min) * i / (count - 1);
        out[i] = {s, mu(s, grid), mu_prime(s, grid)};
    }
    return out;
}

}  // namespace soapfilm::eigencurve
