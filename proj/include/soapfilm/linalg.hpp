#pragma once

#include <cstddef>
#include <vector>

// Small dense / banded direct solvers sized for desk-scale grids.

namespace soapfilm::linalg {

/// Symmetric tridiagonal system (diag d, off-diagonal e) solved by
/// Cholesky-like elimination without pivoting; intended for positive
/// definite matrices. Returns false on a non-positive or negligible pivot
/// (caller decides how to report).
bool solve_spd_tridiagonal(std::vector<double> d, std::vector<double> e,
                           std::vector<double> rhs, std::vector<double>& x);

/// General tridiagonal solve with partial pivoting (sub a, diag b, super c).
/// With replace_tiny_pivots, negligible pivots are substituted by a tiny
/// signed value instead of failing (inverse-iteration use).
bool solve_tridiagonal_pivoting(std::vector<double> a, std::vector<double> b,
                                std::vector<double> c, std::vector<double> rhs,
                                std::vector<double>& x,
                                bool replace_tiny_pivots = false);

/// Banded matrix with kl subdiagonals and ku superdiagonals in LAPACK-style
/// band storage with room for pivoting fill-in: entry (i,j) lives at
/// ab[j * ldab + kl + ku + i - j], ldab = 2*kl + ku + 1.
class BandedMatrix {
public:
    BandedMatrix(std::size_t n, int kl, int ku);

    double& at(std::size_t i, std::size_t j);
    double at(std::size_t i, std::size_t j) const;

    std::size_t size() const { return n_; }
    int kl() const { return kl_; }
    int ku() const { return ku_; }

    /// LU factorization with partial pivoting, in place. Returns false when a
    /// pivot is negligible relative to the matrix scale.
    bool factor();

    /// Solve with the factored matrix.
    void solve(std::vector<double>& rhs) const;

    bool factored() const { return factored_; }

private:
    std::size_t n_;
    int kl_, ku_;
    std::size_t ldab_;
    std::vector<double> ab_;
    std::vector<int> piv_;
    bool factored_ = false;
};

/// Dense LU with partial pivoting.
class DenseLU {
public:
    explicit DenseLU(std::vector<double> a, std::size_t n);  // row-major n x n
    bool ok() const { return ok_; }
    std::vector<double> solve(std::vector<double> rhs) const;

private:
    std::size_t n_;
    std::vector<double> lu_;
    std::vector<int> piv_;
    bool ok_ = false;
};

/// K smallest eigenvalues of a symmetric tridiagonal matrix by Sturm-count
/// bisection; eigenvalues are returned in increasing order.
std::vector<double> tridiagonal_smallest_eigenvalues(const std::vector<double>& d,
                                                     const std::vector<double>& e, int K);

/// Eigenvector for an isolated eigenvalue of a symmetric tridiagonal matrix
/// via inverse iteration; normalized in the euclidean norm.
std::vector<double> tridiagonal_eigenvector(const std::vector<double>& d,
                                            const std::vector<double>& e, double lambda);

}  // namespace soapfilm::linalg
