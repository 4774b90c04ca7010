#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "soapfilm/field.hpp"
#include "soapfilm/stationary.hpp"

using namespace soapfilm;
using namespace soapfilm::stationary;

namespace {

const double kPi = M_PI;
const double kLn2 = std::log(2.0);

FilmProfile film_cos(const Grid1D& zgrid, double amplitude) {
    FilmProfile u = zero_film(zgrid);
    for (std::size_t i = 1; i + 1 < zgrid.size(); ++i)
        u.values[i] = amplitude * std::cos(kPi * zgrid.nodes[i] / 2.0);
    return u;
}

}  // namespace

TEST_CASE("residual at the cylinder") {
    const Grid1D zg = make_uniform_grid(-1.0, 1.0, 48);
    StationaryProblem prob(1.6, make_uniform_grid(1.0, 2.0, 40));
    const FilmProfile u0 = zero_film(zg);

    // residual(0, lambda_cyl) vanishes at all interior nodes
    const ZFunction r0 = prob.residual(u0, lambda_cyl());
    for (double v : r0.values) CHECK(std::abs(v) < 1e-12);

    // residual(0, lambda) = -1 + lambda / ln(2)^2, constant in z
    for (double lambda : {0.3, 0.6}) {
        const ZFunction r = prob.residual(u0, lambda);
        for (std::size_t i = 1; i + 1 < zg.size(); ++i)
            CHECK(r.values[i] ==
                  doctest::Approx(-1.0 + lambda / (kLn2 * kLn2)).epsilon(1e-12));
    }

    // lambda = 0 short-circuits the field solve: pure minimal-surface residual
    const FilmProfile u = film_cos(zg, 0.1);
    const ZFunction rm = prob.residual(u, 0.0);
    const std::vector<double> uz = first_derivative(zg, u.values);
    const std::vector<double> uzz = second_difference(zg, u.values);
    for (std::size_t i = 1; i + 1 < zg.size(); ++i) {
        const double expected = 1.6 * 1.6 * uzz[i] / (1.0 + 1.6 * 1.6 * uz[i] * uz[i]) -
                                1.0 / (u.values[i] + 1.0);
        CHECK(rm.values[i] == doctest::Approx(expected).epsilon(1e-14));
    }

    FilmProfile bad = zero_film(zg);
    bad.values[3] = 1.5;
    CHECK_THROWS_AS(prob.residual(bad, 0.5), AdmissibilityError);
}

TEST_CASE("jacobian action on phi_0 reproduces mu_0") {
    const Grid1D zg = make_uniform_grid(-1.0, 1.0, 96);
    const double sigma = 1.6;
    StationaryProblem prob(sigma, make_uniform_grid(1.0, 2.0, 199));
    const FilmProfile u0 = zero_film(zg);

    std::vector<double> phi0(zg.size(), 0.0);
    for (std::size_t i = 1; i + 1 < zg.size(); ++i)
        phi0[i] = std::cos(kPi * zg.nodes[i] / 2.0);
    const ZFunction av = prob.jacobian_action(u0, lambda_cyl(), phi0);

    const double mu0 = eigencurve::mu(sigma * sigma * eigencurve::nu(0),
                                      make_uniform_grid(1.0, 2.0, 2000));
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < zg.size(); ++i) {
        num += std::pow(av.values[i] - mu0 * phi0[i], 2);
        den += std::pow(mu0 * phi0[i], 2);
    }
    CHECK(std::sqrt(num / den) < 1e-3);
}

TEST_CASE("jacobian commutes with reflection at a symmetric state") {
    const Grid1D zg = make_uniform_grid(-1.0, 1.0, 20);
    StationaryProblem prob(1.5, make_uniform_grid(1.0, 2.0, 16));
    const FilmProfile u = film_cos(zg, 0.15);
    const auto J = prob.jacobian(u, lambda_cyl());
    const int m = zg.n;
    // forward-difference columns carry solver roundoff of order 1e-13/delta
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            const double a = J[static_cast<std::size_t>(r) * m + c];
            const double b = J[static_cast<std::size_t>(m - 1 - r) * m + (m - 1 - c)];
            CHECK(std::abs(a - b) < 1e-6);
        }
}

TEST_CASE("jacobian matches the independent linearized operator on a coarse grid") {
    const Grid1D zg = make_uniform_grid(-1.0, 1.0, 24);
    const Grid1D rg = make_uniform_grid(1.0, 2.0, 20);
    const double sigma = 1.4;
    StationaryProblem prob(sigma, rg);
    const auto J = prob.jacobian(zero_film(zg), lambda_cyl());

    field::LinearizedOperator op(zg, rg, sigma);
    const int m = zg.n;
    std::vector<double> A(static_cast<std::size_t>(m) * m, 0.0);
    for (int c = 0; c < m; ++c) {
        ZFunction e{zg, std::vector<double>(zg.size(), 0.0)};
        e.values[c + 1] = 1.0;
        const ZFunction col = op.apply(e);
        for (int r = 0; r < m; ++r) A[static_cast<std::size_t>(r) * m + c] = col.values[r + 1];
    }
    // operator infinity-norm of the difference, relative to that of A
    double dnorm = 0.0, anorm = 0.0;
    for (int r = 0; r < m; ++r) {
        double ds = 0.0, as = 0.0;
        for (int c = 0; c < m; ++c) {
            ds += std::abs(J[static_cast<std::size_t>(r) * m + c] -
                           A[static_cast<std::size_t>(r) * m + c]);
            as += std::abs(A[static_cast<std::size_t>(r) * m + c]);
        }
        dnorm = std::max(dnorm, ds);
        anorm = std::max(anorm, as);
    }
    CHECK(dnorm / anorm < 1e-4);
}

TEST_CASE("newton_solve: exact root, perturbed voltage, excluded sigma") {
    const Grid1D zg = make_uniform_grid(-1.0, 1.0, 48);
    StationaryProblem prob(1.6, make_uniform_grid(1.0, 2.0, 40));

    // at lambda_cyl the zero film is already a root
    const BranchPoint at_cyl = prob.newton_solve(lambda_cyl(), zero_film(zg), 1e-10, 20);
    CHECK(at_cyl.newton_iters <= 1);
    for (double v : at_cyl.u.values) CHECK(std::abs(v) < 1e-12);

    // small voltage offset: converged, small, symmetric
    const BranchPoint bp = prob.newton_solve(lambda_cyl() + 0.01, zero_film(zg), 1e-10, 30);
    CHECK(bp.residual_norm <= 1e-10);
    const double amp = sup_norm(bp.u.values);
    CHECK(amp > 1e-4);
    CHECK(amp < 0.2);
    for (std::size_t i = 0; i < zg.size(); ++i)
        CHECK(std::abs(bp.u.values[i] - bp.u.values[zg.size() - 1 - i]) < 1e-10);
    CHECK(bp.u.values[zg.size() / 2] > 0.0);  // pulled outward for lambda > lambda_cyl

    // sigma with sigma^2 nu_1 ~ s0 is excluded
    const auto th = eigencurve::find_s0(1e-8, make_uniform_grid(1.0, 2.0, 400));
    const double sigma_bad = std::sqrt(th.s0) / kPi;  // sigma^2 nu_1 = s0
    StationaryProblem sick(sigma_bad, make_uniform_grid(1.0, 2.0, 40));
    CHECK_THROWS_AS(sick.newton_solve(lambda_cyl(), zero_film(zg), 1e-10, 20),
                    SingularSystemError);
}

TEST_CASE("continue_branch: passes through the cylinder, ordered and symmetric") {
    const Grid1D zg = make_uniform_grid(-1.0, 1.0, 48);
    StationaryProblem prob(1.6, make_uniform_grid(1.0, 2.0, 40));
    const auto branch =
        prob.continue_branch(lambda_cyl() - 0.015, lambda_cyl() + 0.015, 5, zg);
    REQUIRE(branch.size() == 5);
    for (std::size_t p = 0; p + 1 < branch.size(); ++p)
        CHECK(branch[p].lambda < branch[p + 1].lambda);

    // the middle point is the cylinder itself
    CHECK(branch[2].lambda == doctest::Approx(lambda_cyl()).epsilon(1e-15));
    for (double v : branch[2].u.values) CHECK(std::abs(v) < 1e-12);

    for (const auto& bp : branch) {
        CHECK(bp.residual_norm <= 1e-10);
        for (std::size_t i = 0; i < zg.size(); ++i)
            CHECK(std::abs(bp.u.values[i] - bp.u.values[zg.size() - 1 - i]) < 1e-10);
    }
    // strict pointwise ordering in lambda at interior nodes
    for (std::size_t p = 0; p + 1 < branch.size(); ++p)
        for (std::size_t i = 1; i + 1 < zg.size(); ++i)
            CHECK(branch[p].u.values[i] < branch[p + 1].u.values[i]);

    CHECK_THROWS_AS(prob.continue_branch(1.0, 2.0, 5, zg), std::invalid_argument);
}

TEST_CASE("cosine coefficients of the constant function") {
    // (1 | phi_2j) = 4 (-1)^j / (pi (2j+1)) and odd modes vanish; checked by
    // fine trapezoid quadrature
    const int nq = 20000;
    const double h = 2.0 / nq;
    for (int m = 0; m < 6; ++m) {
        double acc = 0.0;
        for (int i = 0; i <= nq; ++i) {
            const double z = -1.0 + i * h;
            const double w = (i == 0 || i == nq) ? 0.5 : 1.0;
            const double phi = (m % 2 == 0) ? std::cos((m + 1) * kPi * z / 2.0)
                                            : std::sin((m + 1) * kPi * z / 2.0);
            acc += w * phi * h;
        }
        if (m % 2 == 0) {
            const int j = m / 2;
            const double expected = 4.0 / kPi * ((j % 2 == 0) ? 1.0 : -1.0) / (2.0 * j + 1.0);
            CHECK(std::abs(acc - expected) < 1e-7);
        } else {
            CHECK(std::abs(acc) < 1e-12);
        }
    }
}

TEST_CASE("dlambda_u_at_cyl: coefficients, certificate and positivity") {
    const Grid1D zg = make_uniform_grid(-1.0, 1.0, 64);
    const Grid1D rad = make_uniform_grid(1.0, 2.0, 2000);
    const double sigma = 1.6;
    const auto [du, cert] = dlambda_u_at_cyl(sigma, 64, zg, rad);

    CHECK(cert.sigma == sigma);
    CHECK(cert.C1 > 0.0);
    CHECK(cert.C1 >= cert.C1_lower_bound);
    CHECK(cert.C1_lower_bound ==
          doctest::Approx(2.0 / (3.0 * kPi * kPi * sigma * sigma)).epsilon(1e-14));
    CHECK(cert.C1_lower_bound == doctest::Approx(0.0264).epsilon(2e-3));

    // a_j alternate in sign and decay like 1/(2j+1)^3
    REQUIRE(cert.coeffs.size() == 65);
    CHECK(cert.coeffs[0] > 0.0);
    for (std::size_t j = 0; j + 1 < cert.coeffs.size(); ++j) {
        CHECK(cert.coeffs[j] * cert.coeffs[j + 1] < 0.0);
        CHECK(std::abs(cert.coeffs[j + 1]) < std::abs(cert.coeffs[j]));
    }

    // positivity of the series against the certificate minorant
    const double scale = 4.0 / (kPi * kLn2 * kLn2);
    for (std::size_t i = 1; i + 1 < zg.size(); ++i) {
        CHECK(du.values[i] > 0.0);
        CHECK(du.values[i] >=
              cert.C1 * scale * std::cos(kPi * zg.nodes[i] / 2.0) - 1e-12);
    }

    CHECK_THROWS_AS(dlambda_u_at_cyl(1.0, 16, zg, rad), std::invalid_argument);
}

TEST_CASE("newton_solve reports pull-in past the fold") {
    // at sigma = 1.6 the stationary branch folds near lambda_cyl + 0.0184;
    // beyond it the iteration either leaves S or fails to converge
    const Grid1D zg = make_uniform_grid(-1.0, 1.0, 48);
    StationaryProblem prob(1.6, make_uniform_grid(1.0, 2.0, 40));
    CHECK_THROWS_AS(prob.newton_solve(lambda_cyl() + 0.03, zero_film(zg), 1e-10, 25),
                    ComputeError);
}

TEST_CASE("deflection_check ties the branch to the series") {
    const Grid1D zg = make_uniform_grid(-1.0, 1.0, 48);
    const Grid1D rad = make_uniform_grid(1.0, 2.0, 2000);
    const double sigma = 1.6;
    StationaryProblem prob(sigma, make_uniform_grid(1.0, 2.0, 40));
    std::vector<BranchPoint> branch;
    branch.push_back(prob.newton_solve(lambda_cyl() - 0.01, zero_film(zg), 1e-10, 30));
    branch.push_back(prob.newton_solve(lambda_cyl(), zero_film(zg), 1e-10, 30));
    branch.push_back(prob.newton_solve(lambda_cyl() + 0.01, zero_film(zg), 1e-10, 30));
    branch.push_back(prob.newton_solve(lambda_cyl() + 0.005, branch[1].u, 1e-10, 30));
    std::sort(branch.begin(), branch.end(),
              [](const BranchPoint& a, const BranchPoint& b) { return a.lambda < b.lambda; });
    const auto [du, cert] = dlambda_u_at_cyl(sigma, 64, zg, rad);
    const auto rep = deflection_check(branch, du);

    CHECK(rep.ordering_ok);
    CHECK(rep.endpoint_slopes_ok);
    double one_1em2 = -1.0, one_5em3 = -1.0, cen_1em2 = -1.0;
    for (const auto& [eps, err] : rep.one_sided_errors) {
        if (std::abs(eps - 1e-2) < 1e-9) one_1em2 = err;
        if (std::abs(eps - 5e-3) < 1e-9) one_5em3 = err;
    }
    for (const auto& [eps, err] : rep.centered_errors)
        if (std::abs(eps - 1e-2) < 1e-9) cen_1em2 = err;
    REQUIRE(one_1em2 >= 0.0);
    REQUIRE(one_5em3 >= 0.0);
    REQUIRE(cen_1em2 >= 0.0);
    // one-sided differences carry the O(eps) curvature term
    CHECK(one_5em3 < 0.65 * one_1em2);
    CHECK(one_5em3 > 0.35 * one_1em2);
    // the centered difference removes it
    CHECK(cen_1em2 < 0.05);
}
