#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "soapfilm/radial.hpp"

using namespace soapfilm;
using namespace soapfilm::radial;

namespace {

const double kLn2 = std::log(2.0);

RadialProfile sample(const Grid1D& g, double (*f)(double)) {
    RadialProfile p{g, std::vector<double>(g.size())};
    for (std::size_t i = 0; i < g.size(); ++i) p.values[i] = f(g.nodes[i]);
    return p;
}

}  // namespace

TEST_CASE("make_uniform_grid basics") {
    const Grid1D g = make_uniform_grid(1.0, 2.0, 3);
    REQUIRE(g.nodes.size() == 5);
    CHECK(g.nodes[0] == 1.0);
    CHECK(g.nodes[1] == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(g.nodes[2] == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(g.nodes[3] == doctest::Approx(1.75).epsilon(1e-15));
    CHECK(g.nodes[4] == 2.0);

    const Grid1D g2 = make_uniform_grid(-1.0, 1.0, 1);
    CHECK(g2.nodes[1] == doctest::Approx(0.0));

    CHECK_THROWS_AS(make_uniform_grid(2.0, 1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_uniform_grid(1.0, 2.0, 0), std::invalid_argument);
}

TEST_CASE("sl_solve reproduces the closed form h_0") {
    const Grid1D g = make_uniform_grid(1.0, 2.0, 199);  // node at r = 1.5
    const RadialProfile rhs = sample_source_c(g);
    const RadialProfile h0 = sl_solve(0.0, rhs, g);
    CHECK(std::abs(h0.values[100] - (-0.0817042)) < 2e-6);
    double max_err = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
        max_err = std::max(max_err, std::abs(h0.values[i] - oracles::h0_closed_form(g.nodes[i])));
    CHECK(max_err < 5e-6);  // O(h^2), h = 5e-3
}

TEST_CASE("sl_solve: zero source gives the zero profile") {
    const Grid1D g = make_uniform_grid(1.0, 2.0, 50);
    RadialProfile rhs{g, std::vector<double>(g.size(), 0.0)};
    for (double s : {0.0, 1.0, 7.5}) {
        const RadialProfile f = sl_solve(s, rhs, g);
        for (double v : f.values) CHECK(v == 0.0);
    }
}

TEST_CASE("sl_solve near -xi_0 raises a singular-system error") {
    const Grid1D g = make_uniform_grid(1.0, 2.0, 120);
    const auto eigs = radial_eigenpairs(1, g);
    const RadialProfile rhs = sample_source_c(g);
    CHECK_THROWS_AS(sl_solve(-eigs[0].xi, rhs, g), SingularSystemError);
    CHECK_THROWS_AS(sl_solve(-eigs[0].xi + 1e-12, rhs, g), SingularSystemError);
    try {
        sl_solve(-eigs[0].xi, rhs, g);
    } catch (const SingularSystemError& e) {
        CHECK(e.nearest_eigenvalue == doctest::Approx(-eigs[0].xi).epsilon(1e-9));
    }
}

TEST_CASE("sl_solve converges at 2nd order against a 4x-refined dense oracle") {
    // h_1 on n = 60 against the dense non-divergence solve at 4x refinement
    auto rhs = [](double r, double s) { return -2.0 / (r * r * r) + s * (2.0 - r) / r; };
    const int n = 60;
    const Grid1D g = make_uniform_grid(1.0, 2.0, n);
    const RadialProfile h1 = solve_h(1.0, g);
    const int nf = 4 * (n + 1) - 1;  // coarse nodes sit on the fine grid
    const auto fine = oracles::dense_bvp_nondivergence(1.0, nf, rhs, 1.0);
    double max_err = 0.0;
    for (int i = 0; i <= n + 1; ++i)
        max_err = std::max(max_err, std::abs(h1.values[i] - fine[4 * i]));
    CHECK(max_err < 1.5 * (1.0 / 61.0) * (1.0 / 61.0));  // O(h^2)
}

TEST_CASE("solve_h anchors and order relations") {
    const Grid1D g = make_uniform_grid(1.0, 2.0, 2000);
    const RadialProfile h0 = solve_h(0.0, g);
    CHECK(std::abs(boundary_flux(h0) - (-2.0 + 1.0 / kLn2)) < 1e-6);

    const Grid1D gs = make_uniform_grid(1.0, 2.0, 300);
    const RadialProfile a = solve_h(0.0, gs);
    const RadialProfile b = solve_h(1.0, gs);
    const RadialProfile c = solve_h(5.0, gs);
    for (std::size_t i = 0; i < gs.size(); ++i) {
        CHECK(b.values[i] >= a.values[i] - 1e-10);
        const double barrier = (2.0 - gs.nodes[i]) / gs.nodes[i];
        CHECK(c.values[i] <= barrier + 1e-10);
    }
}

TEST_CASE("solve_p anchors, positivity and the finite-difference oracle") {
    const Grid1D g = make_uniform_grid(1.0, 2.0, 2000);
    const RadialProfile h0 = solve_h(0.0, g);
    const RadialProfile p0 = solve_p(0.0, h0);
    const double expected_flux = 3.0 / (4.0 * kLn2 * kLn2) - 1.0 / (2.0 * kLn2) - 0.5;
    CHECK(std::abs(boundary_flux(p0) - expected_flux) < 1e-6);
    CHECK(expected_flux == doctest::Approx(0.3396793).epsilon(1e-6));

    // closed form of p_0 at the midpoint node
    const Grid1D gm = make_uniform_grid(1.0, 2.0, 199);
    const RadialProfile p0m = solve_p(0.0, solve_h(0.0, gm));
    CHECK(std::abs(p0m.values[100] - oracles::p0_closed_form(1.5)) < 1e-5);

    for (double v : p0.values) CHECK(v >= -1e-10);

    // forward difference in s approximates p_s to O(ds) + O(h^2)
    const Grid1D gs = make_uniform_grid(1.0, 2.0, 400);
    const double ds = 0.01;
    const RadialProfile ha = solve_h(0.0, gs);
    const RadialProfile hb = solve_h(ds, gs);
    const RadialProfile p = solve_p(0.0, ha);
    double max_err = 0.0;
    for (std::size_t i = 0; i < gs.size(); ++i)
        max_err = std::max(max_err,
                           std::abs((hb.values[i] - ha.values[i]) / ds - p.values[i]));
    CHECK(max_err < 2e-3);  // O(ds) dominates

    // profile inconsistent with its grid is rejected
    CHECK_THROWS_AS(solve_p(0.0, RadialProfile{make_uniform_grid(1.0, 2.0, 10),
                                               std::vector<double>(13, 0.0)}),
                    std::invalid_argument);
    RadialProfile wrong_grid{make_uniform_grid(1.0, 2.0, 10), std::vector<double>(12, 0.0)};
    CHECK_THROWS_AS(sl_solve(0.0, wrong_grid, gs), std::invalid_argument);
}

TEST_CASE("boundary_flux stencil facts") {
    const Grid1D g = make_uniform_grid(1.0, 2.0, 30);
    const RadialProfile quad = sample(g, [](double r) { return (r - 1.0) * (2.0 - r); });
    CHECK(boundary_flux(quad) == doctest::Approx(1.0).epsilon(1e-12));  // exact on quadratics
    RadialProfile zero{g, std::vector<double>(g.size(), 0.0)};
    CHECK(boundary_flux(zero) == 0.0);

    Grid1D tiny = make_uniform_grid(1.0, 2.0, 1);
    tiny.nodes.pop_back();
    tiny.n = 0;
    RadialProfile bad{tiny, std::vector<double>(2, 0.0)};
    CHECK_THROWS_AS(boundary_flux(bad), std::invalid_argument);
}

TEST_CASE("radial eigenpairs against the Bessel cross-product oracle") {
    const double k = oracles::first_cross_product_root();
    const double xi0_exact = k * k;
    CHECK(k == doctest::Approx(3.123).epsilon(5e-4));  // sanity on the oracle itself
    CHECK(xi0_exact == doctest::Approx(9.753).epsilon(1e-3));

    const Grid1D g200 = make_uniform_grid(1.0, 2.0, 200);
    const Grid1D g400 = make_uniform_grid(1.0, 2.0, 400);
    const auto e200 = radial_eigenpairs(3, g200);
    const auto e400 = radial_eigenpairs(3, g400);
    CHECK(e200[0].xi == doctest::Approx(xi0_exact).epsilon(1e-4));
    const double err200 = std::abs(e200[0].xi - xi0_exact);
    const double err400 = std::abs(e400[0].xi - xi0_exact);
    CHECK(err400 < err200 / 3.5);  // 2nd-order convergence to the oracle root

    CHECK(e200[0].xi > 0.0);
    CHECK(e200[0].xi < e200[1].xi);
    CHECK(e200[1].xi < e200[2].xi);

    CHECK(weighted_inner(e200[0].rho, e200[0].rho) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(weighted_inner(e200[0].rho, e200[1].rho)) < 1e-10);
    CHECK(std::abs(weighted_inner(e200[0].rho, e200[2].rho)) < 1e-10);

    CHECK_THROWS_AS(radial_eigenpairs(30, g200), std::invalid_argument);  // n < 10K
}

TEST_CASE("weighted_inner closed forms") {
    const Grid1D g = make_uniform_grid(1.0, 2.0, 200);
    const RadialProfile one = sample(g, [](double) { return 1.0; });
    const RadialProfile lin = sample(g, [](double r) { return r; });
    CHECK(weighted_inner(one, one) == doctest::Approx(1.5).epsilon(1e-14));  // exact: linear integrand
    const double h = g.h;
    CHECK(std::abs(weighted_inner(one, lin) - 7.0 / 3.0) < h * h / 6.0 * 1.01);

    const Grid1D g2 = make_uniform_grid(1.0, 2.0, 100);
    const RadialProfile other = sample(g2, [](double) { return 1.0; });
    CHECK_THROWS_AS(weighted_inner(one, other), std::invalid_argument);
}

TEST_CASE("c_k, d_k coefficients: Parseval bound and reconstruction") {
    const Grid1D g = make_uniform_grid(1.0, 2.0, 800);
    const auto eigs = radial_eigenpairs(80, g);
    const auto [c, d] = coefficients_ck_dk(eigs);

    double sum_c2 = 0.0;
    for (double v : c) sum_c2 += v * v;
    CHECK(sum_c2 <= 15.0 / 16.0 + 1e-12);  // ||-2/r^3||^2_{L2,r} = 15/16

    // truncated expansion of -2/r^3 improves in L_{2,r} as K grows
    const RadialProfile f = sample_source_c(g);
    auto recon_err = [&](int K) {
        RadialProfile r{g, std::vector<double>(g.size(), 0.0)};
        for (int k = 0; k < K; ++k)
            for (std::size_t i = 0; i < g.size(); ++i)
                r.values[i] += c[k] * eigs[k].rho.values[i];
        RadialProfile diff{g, std::vector<double>(g.size())};
        for (std::size_t i = 0; i < g.size(); ++i) diff.values[i] = r.values[i] - f.values[i];
        return std::sqrt(weighted_inner(diff, diff));
    };
    const double e10 = recon_err(10), e20 = recon_err(20), e40 = recon_err(40);
    CHECK(e20 < e10);
    CHECK(e40 < e20);

    CHECK_THROWS_AS(coefficients_ck_dk({}), std::invalid_argument);
}

TEST_CASE("grid convergence of the boundary flux at 2nd order") {
    for (double s : {0.0, 1.0, 5.0}) {
        const double ref =
            radial::boundary_flux(solve_h(s, make_uniform_grid(1.0, 2.0, 1600)));
        const double f200 = radial::boundary_flux(solve_h(s, make_uniform_grid(1.0, 2.0, 200)));
        const double f400 = radial::boundary_flux(solve_h(s, make_uniform_grid(1.0, 2.0, 400)));
        CHECK(std::abs(f200 - ref) / std::abs(f400 - ref) >= 3.5);
    }
}

TEST_CASE("monotonicity of h_s, p_s and the boundary flux in s") {
    const Grid1D g = make_uniform_grid(1.0, 2.0, 300);
    double prev_flux = -1e300;
    RadialProfile prev_h;
    bool have_prev = false;
    for (double s = 0.0; s <= 10.0 + 1e-9; s += 1.0) {
        const RadialProfile h = solve_h(s, g);
        const RadialProfile p = solve_p(s, h);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double barrier = (2.0 - g.nodes[i]) / g.nodes[i];
            CHECK(h.values[i] <= barrier + 1e-10);
            CHECK(p.values[i] >= -1e-10);
            if (have_prev) CHECK(h.values[i] >= prev_h.values[i] - 1e-10);
        }
        const double flux = boundary_flux(h);
        CHECK(flux >= prev_flux - 1e-10);
        prev_flux = flux;
        prev_h = h;
        have_prev = true;
    }
}
