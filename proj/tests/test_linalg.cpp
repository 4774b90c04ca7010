#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "soapfilm/linalg.hpp"

using namespace soapfilm;

namespace {

std::mt19937_64 rng(123);

double urand(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

TEST_CASE("spd tridiagonal solve reproduces a manufactured solution") {
    const int n = 50;
    std::vector<double> d(n), e(n - 1), x_true(n);
    for (int i = 0; i < n; ++i) d[i] = 4.0 + urand(0.0, 1.0);
    for (int i = 0; i + 1 < n; ++i) e[i] = -1.0 + 0.2 * urand(-1.0, 1.0);
    for (int i = 0; i < n; ++i) x_true[i] = urand(-1.0, 1.0);
    std::vector<double> rhs(n, 0.0);
    for (int i = 0; i < n; ++i) {
        rhs[i] = d[i] * x_true[i];
        if (i > 0) rhs[i] += e[i - 1] * x_true[i - 1];
        if (i + 1 < n) rhs[i] += e[i] * x_true[i + 1];
    }
    std::vector<double> x;
    REQUIRE(linalg::solve_spd_tridiagonal(d, e, rhs, x));
    for (int i = 0; i < n; ++i) CHECK(x[i] == doctest::Approx(x_true[i]).epsilon(1e-12));
}

TEST_CASE("spd tridiagonal solve rejects an indefinite matrix") {
    std::vector<double> d = {1.0, -2.0, 1.0};
    std::vector<double> e = {0.1, 0.1};
    std::vector<double> rhs = {1.0, 1.0, 1.0};
    std::vector<double> x;
    CHECK_FALSE(linalg::solve_spd_tridiagonal(d, e, rhs, x));
}

TEST_CASE("pivoting tridiagonal solver handles rows needing pivoting") {
    // small diagonal forces the row swap path
    std::vector<double> a = {0.0, 5.0, 1.0, 2.0};
    std::vector<double> b = {1e-14, 1.0, 3.0, 1.0};
    std::vector<double> c = {2.0, 1.0, 0.5, 0.0};
    std::vector<double> x_true = {1.0, -2.0, 0.5, 3.0};
    const int n = 4;
    std::vector<double> rhs(n, 0.0);
    for (int i = 0; i < n; ++i) {
        rhs[i] = b[i] * x_true[i];
        if (i > 0) rhs[i] += a[i] * x_true[i - 1];
        if (i + 1 < n) rhs[i] += c[i] * x_true[i + 1];
    }
    std::vector<double> x;
    REQUIRE(linalg::solve_tridiagonal_pivoting(a, b, c, rhs, x));
    for (int i = 0; i < n; ++i) CHECK(x[i] == doctest::Approx(x_true[i]).epsilon(1e-10));
}

TEST_CASE("dense LU handles general matrices that need row interchanges") {
    for (int trial = 0; trial < 10; ++trial) {
        const int m = 30;
        std::vector<double> M(m * m);
        for (auto& v : M) v = urand(-1.0, 1.0);
        std::vector<double> xt(m);
        for (auto& v : xt) v = urand(-1.0, 1.0);
        std::vector<double> b(m, 0.0);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) b[r] += M[r * m + c] * xt[c];
        linalg::DenseLU lu(M, m);
        REQUIRE(lu.ok());
        const auto x = lu.solve(b);
        for (int i = 0; i < m; ++i) CHECK(std::abs(x[i] - xt[i]) < 1e-9);
    }
}

TEST_CASE("banded LU matches a dense oracle on random banded systems") {
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 40;
        const int kl = 1 + trial, ku = 2;
        std::vector<double> dense(n * n, 0.0);
        linalg::BandedMatrix band(n, kl, ku);
        for (int i = 0; i < n; ++i) {
            for (int j = std::max(0, i - kl); j <= std::min(n - 1, i + ku); ++j) {
                const double v = urand(-1.0, 1.0) + (i == j ? 6.0 : 0.0);
                dense[i * n + j] = v;
                band.at(i, j) = v;
            }
        }
        std::vector<double> x_true(n);
        for (auto& v : x_true) v = urand(-2.0, 2.0);
        std::vector<double> rhs(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) rhs[i] += dense[i * n + j] * x_true[j];

        REQUIRE(band.factor());
        std::vector<double> x = rhs;
        band.solve(x);
        linalg::DenseLU lu(dense, n);
        REQUIRE(lu.ok());
        const auto x_dense = lu.solve(rhs);
        for (int i = 0; i < n; ++i) {
            CHECK(x[i] == doctest::Approx(x_true[i]).epsilon(1e-10));
            CHECK(x[i] == doctest::Approx(x_dense[i]).epsilon(1e-11));
        }
    }
}

TEST_CASE("banded LU pivots: indefinite but nonsingular band system") {
    const int n = 12, kl = 2, ku = 2;
    linalg::BandedMatrix band(n, kl, ku);
    std::vector<double> dense(n * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = std::max(0, i - kl); j <= std::min(n - 1, i + ku); ++j) {
            const double v = (i == j) ? ((i % 2 == 0) ? 1e-13 : -2.0) : urand(0.5, 1.5);
            dense[i * n + j] = v;
            band.at(i, j) = v;
        }
    std::vector<double> rhs(n, 1.0);
    REQUIRE(band.factor());
    std::vector<double> x = rhs;
    band.solve(x);
    // residual check against the dense matrix
    for (int i = 0; i < n; ++i) {
        double r = rhs[i];
        for (int j = 0; j < n; ++j) r -= dense[i * n + j] * x[j];
        CHECK(std::abs(r) < 1e-8);
    }
}

TEST_CASE("tridiagonal eigenvalues: discrete Dirichlet Laplacian closed form") {
    // -u'' on (0,1), n interior nodes: eigenvalues (4/h^2) sin^2(k pi h / 2)
    const int n = 64;
    const double h = 1.0 / (n + 1);
    std::vector<double> d(n, 2.0 / (h * h)), e(n - 1, -1.0 / (h * h));
    const auto eigs = linalg::tridiagonal_smallest_eigenvalues(d, e, 5);
    for (int k = 1; k <= 5; ++k) {
        const double exact = 4.0 / (h * h) * std::pow(std::sin(k * M_PI * h / 2.0), 2);
        CHECK(eigs[k - 1] == doctest::Approx(exact).epsilon(1e-11));
    }
    // eigenvector for the smallest eigenvalue is parallel to sin(pi x)
    const auto v = linalg::tridiagonal_eigenvector(d, e, eigs[0]);
    std::vector<double> s(n);
    double nrm = 0.0;
    for (int i = 0; i < n; ++i) {
        s[i] = std::sin(M_PI * (i + 1) * h);
        nrm += s[i] * s[i];
    }
    nrm = std::sqrt(nrm);
    double proj = 0.0;
    for (int i = 0; i < n; ++i) proj += v[i] * s[i] / nrm;
    double resid = 0.0;
    for (int i = 0; i < n; ++i) resid += std::pow(v[i] - proj * s[i] / nrm, 2);
    CHECK(std::sqrt(resid) < 1e-8);
}
