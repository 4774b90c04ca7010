#include "soapfilm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace soapfilm::linalg {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

bool solve_spd_tridiagonal(std::vector<double> d, std::vector<double> e,
                           std::vector<double> rhs, std::vector<double>& x) {
    const std::size_t n = d.size();
    if (n == 0) { x.clear(); return true; }
    double scale = 0.0;
    for (double v : d) scale = std::max(scale, std::abs(v));
    const double tiny = scale * n * kEps;

    // forward elimination
    if (!(d[0] > tiny)) return false;
    for (std::size_t i = 1; i < n; ++i) {
        const double m = e[i - 1] / d[i - 1];
        d[i] -= m * e[i - 1];
        rhs[i] -= m * rhs[i - 1];
        if (!(d[i] > tiny)) return false;
    }
    x.assign(n, 0.0);
    x[n - 1] = rhs[n - 1] / d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        x[i] = (rhs[i] - e[i] * x[i + 1]) / d[i];
    return true;
}

bool solve_tridiagonal_pivoting(std::vector<double> a, std::vector<double> b,
                                std::vector<double> c, std::vector<double> rhs,
                                std::vector<double>& x, bool replace_tiny_pivots) {
    const std::size_t n = b.size();
    if (n == 0) { x.clear(); return true; }
    // extra superdiagonal for pivoting fill-in
    std::vector<double> c2(n, 0.0);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(b[i]));
    const double tiny = scale * n * kEps;
    auto pivot_guard = [&](double& p) {
        if (std::abs(p) > tiny) return true;
        if (!replace_tiny_pivots) return false;
        p = p < 0.0 ? -tiny : tiny;
        return true;
    };

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(a[i + 1]) > std::abs(b[i])) {
            std::swap(b[i], a[i + 1]);
            std::swap(c[i], b[i + 1]);
            std::swap(c2[i], c[i + 1]);
            std::swap(rhs[i], rhs[i + 1]);
        }
        if (!pivot_guard(b[i])) return false;
        const double m = a[i + 1] / b[i];
        b[i + 1] -= m * c[i];
        c[i + 1] -= m * c2[i];
        rhs[i + 1] -= m * rhs[i];
    }
    if (!pivot_guard(b[n - 1])) return false;
    x.assign(n, 0.0);
    x[n - 1] = rhs[n - 1] / b[n - 1];
    if (n >= 2) x[n - 2] = (rhs[n - 2] - c[n - 2] * x[n - 1]) / b[n - 2];
    for (long i = static_cast<long>(n) - 3; i >= 0; --i)
        x[i] = (rhs[i] - c[i] * x[i + 1] - c2[i] * x[i + 2]) / b[i];
    return true;
}

BandedMatrix::BandedMatrix(std::size_t n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), ldab_(static_cast<std::size_t>(2 * kl + ku + 1)),
      ab_(n * ldab_, 0.0), piv_(n, 0) {}

double& BandedMatrix::at(std::size_t i, std::size_t j) {
    return ab_[j * ldab_ + (kl_ + ku_ + static_cast<long>(i) - static_cast<long>(j))];
}

double BandedMatrix::at(std::size_t i, std::size_t j) const {
    return ab_[j * ldab_ + (kl_ + ku_ + static_cast<long>(i) - static_cast<long>(j))];
}

bool BandedMatrix::factor() {
    // LAPACK dgbtrf-style elimination with partial pivoting. Row i of the
    // matrix occupies band row kl+ku+i-j in column j.
    const long n = static_cast<long>(n_);
    const long kl = kl_, kv = kl_ + ku_;
    double scale = 0.0;
    for (double v : ab_) scale = std::max(scale, std::abs(v));
    const double tiny = scale * static_cast<double>(n) * kEps;

    auto elem = [&](long i, long j) -> double& {
        return ab_[static_cast<std::size_t>(j) * ldab_ + (kv + i - j)];
    };

    for (long j = 0; j < n; ++j) {
        const long pmax = std::min(n - 1, j + kl);
        long p = j;
        double best = std::abs(elem(j, j));
        for (long i = j + 1; i <= pmax; ++i) {
            const double v = std::abs(elem(i, j));
            if (v > best) { best = v; p = i; }
        }
        piv_[j] = static_cast<int>(p);
        if (best <= tiny) return false;
        const long jmax = std::min(n - 1, j + kv);
        if (p != j)
            for (long cc = j; cc <= jmax; ++cc) std::swap(elem(j, cc), elem(p, cc));
        const double pivot = elem(j, j);
        for (long i = j + 1; i <= pmax; ++i) {
            const double m = elem(i, j) / pivot;
            elem(i, j) = m;
            for (long cc = j + 1; cc <= jmax; ++cc) elem(i, cc) -= m * elem(j, cc);
        }
    }
    factored_ = true;
    return true;
}

void BandedMatrix::solve(std::vector<double>& rhs) const {
    if (!factored_) throw std::logic_error("BandedMatrix::solve before factor");
    const long n = static_cast<long>(n_);
    const long kl = kl_, kv = kl_ + ku_;
    auto elem = [&](long i, long j) -> double {
        return ab_[static_cast<std::size_t>(j) * ldab_ + (kv + i - j)];
    };
    for (long j = 0; j < n; ++j) {
        const long p = piv_[j];
        if (p != j) std::swap(rhs[j], rhs[p]);
        const long imax = std::min(n - 1, j + kl);
        for (long i = j + 1; i <= imax; ++i) rhs[i] -= elem(i, j) * rhs[j];
    }
    for (long i = n - 1; i >= 0; --i) {
        const long jmax = std::min(n - 1, i + kv);
        double s = rhs[i];
        for (long j = i + 1; j <= jmax; ++j) s -= elem(i, j) * rhs[j];
        rhs[i] = s / elem(i, i);
    }
}

DenseLU::DenseLU(std::vector<double> a, std::size_t n)
    : n_(n), lu_(std::move(a)), piv_(n, 0) {
    if (lu_.size() != n * n) throw std::invalid_argument("DenseLU: bad size");
    double scale = 0.0;
    for (double v : lu_) scale = std::max(scale, std::abs(v));
    const double tiny = scale * static_cast<double>(n) * kEps;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t p = j;
        double best = std::abs(lu_[j * n + j]);
        for (std::size_t i = j + 1; i < n; ++i) {
            const double v = std::abs(lu_[i * n + j]);
            if (v > best) { best = v; p = i; }
        }
        piv_[j] = static_cast<int>(p);
        if (best <= tiny) return;
        if (p != j)
            for (std::size_t cc = 0; cc < n; ++cc) std::swap(lu_[j * n + cc], lu_[p * n + cc]);
        const double pivot = lu_[j * n + j];
        for (std::size_t i = j + 1; i < n; ++i) {
            const double m = lu_[i * n + j] / pivot;
            lu_[i * n + j] = m;
            for (std::size_t cc = j + 1; cc < n; ++cc) lu_[i * n + cc] -= m * lu_[j * n + cc];
        }
    }
    ok_ = true;
}

std::vector<double> DenseLU::solve(std::vector<double> rhs) const {
    if (!ok_) throw std::runtime_error("DenseLU: singular matrix");
    const std::size_t n = n_;
    // rows were swapped in full during factorization, so all interchanges
    // apply to the right-hand side before the triangular solves
    for (std::size_t j = 0; j < n; ++j)
        if (static_cast<std::size_t>(piv_[j]) != j) std::swap(rhs[j], rhs[piv_[j]]);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = j + 1; i < n; ++i) rhs[i] -= lu_[i * n + j] * rhs[j];
    for (std::size_t i = n; i-- > 0;) {
        double s = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= lu_[i * n + j] * rhs[j];
        rhs[i] = s / lu_[i * n + i];
    }
    return rhs;
}

namespace {

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly less
/// than x (Sturm count via the shifted LDL^T recurrence).
int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x) {
    const std::size_t n = d.size();
    int count = 0;
    double q = d[0] - x;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
        if (q == 0.0) q = kEps * (std::abs(e[i - 1]) + kEps);
        q = d[i] - x - e[i - 1] * e[i - 1] / q;
        if (q < 0.0) ++count;
    }
    return count;
}

}  // namespace

std::vector<double> tridiagonal_smallest_eigenvalues(const std::vector<double>& d,
                                                     const std::vector<double>& e, int K) {
    const std::size_t n = d.size();
    if (K < 1 || static_cast<std::size_t>(K) > n)
        throw std::invalid_argument("tridiagonal_smallest_eigenvalues: bad K");
    // Gershgorin bounds
    double lo = d[0], hi = d[0];
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(e[i - 1]);
        if (i + 1 < n) r += std::abs(e[i]);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    std::vector<double> eigs(K);
    for (int k = 0; k < K; ++k) {
        double a = lo, b = hi;
        // k-th smallest: smallest x with count(x) >= k+1
        for (int it = 0; it < 200 && (b - a) > kEps * (std::abs(a) + std::abs(b)); ++it) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(d, e, mid) >= k + 1) b = mid; else a = mid;
        }
        eigs[k] = 0.5 * (a + b);
    }
    return eigs;
}

std::vector<double> tridiagonal_eigenvector(const std::vector<double>& d,
                                            const std::vector<double>& e, double lambda) {
    const std::size_t n = d.size();
    // deterministic quasi-random start
    std::vector<double> x(n);
    double seed = 0.5;
    for (std::size_t i = 0; i < n; ++i) {
        seed = std::fmod(seed * 997.0 + 0.12345, 1.0);
        x[i] = seed - 0.5;
    }
    std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) b[i] = d[i] - lambda;
    for (std::size_t i = 1; i < n; ++i) a[i] = e[i - 1];
    for (std::size_t i = 0; i + 1 < n; ++i) c[i] = e[i];

    for (int it = 0; it < 4; ++it) {
        std::vector<double> y;
        solve_tridiagonal_pivoting(a, b, c, x, y, /*replace_tiny_pivots=*/true);
        double nrm = 0.0;
        for (double v : y) nrm += v * v;
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / nrm;
    }
    return x;
}

}  // namespace soapfilm::linalg
