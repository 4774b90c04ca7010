#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace soapfilm {

/// Uniform 1D grid with n interior nodes; nodes includes both endpoints.
struct Grid1D {
    double a = 0.0;
    double b = 1.0;
    int n = 0;          // interior node count
    double h = 0.0;     // spacing (b - a) / (n + 1)
    std::vector<double> nodes;

    std::size_t size() const { return nodes.size(); }
};

Grid1D make_uniform_grid(double a, double b, int n);

bool same_grid(const Grid1D& g1, const Grid1D& g2);

/// Values of a function of r on a grid over [1,2].
struct RadialProfile {
    Grid1D grid;
    std::vector<double> values;
};

/// Film displacement u(z) on a grid over [-1,1]; u(±1) = 0 and -1 < u < 1
/// for admissible profiles.
struct FilmProfile {
    Grid1D grid;
    std::vector<double> values;
};

/// A function of z on a grid over [-1,1], no boundary constraint.
struct ZFunction {
    Grid1D grid;
    std::vector<double> values;
};

/// Scalar field on the tensor grid of (-1,1) x (1,2), row-major with the
/// z index slow and the r index fast.
struct PotentialField {
    Grid1D zgrid;
    Grid1D rgrid;
    std::vector<double> values;

    std::size_t nz() const { return zgrid.size(); }
    std::size_t nr() const { return rgrid.size(); }
    double& at(std::size_t iz, std::size_t jr) { return values[iz * nr() + jr]; }
    double at(std::size_t iz, std::size_t jr) const { return values[iz * nr() + jr]; }
};

/// Coefficients of the transformed elliptic operator: matrix entries of A(v)
/// and the radial drift, evaluated nodewise on the tensor grid.
struct CoefficientField {
    Grid1D zgrid;
    Grid1D rgrid;
    std::vector<double> a11, a12, a22, d2;

    std::size_t nr() const { return rgrid.size(); }
    std::size_t idx(std::size_t iz, std::size_t jr) const { return iz * nr() + jr; }
};

class ComputeError : public std::runtime_error {
public:
    explicit ComputeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Linear system (numerically) singular. Carries the nearest offending
/// eigenvalue when the caller could identify one.
class SingularSystemError : public ComputeError {
public:
    SingularSystemError(const std::string& msg, double nearest_eigenvalue)
        : ComputeError(msg), nearest_eigenvalue(nearest_eigenvalue) {}
    double nearest_eigenvalue = 0.0;
};

class NonConvergenceError : public ComputeError {
public:
    NonConvergenceError(const std::string& msg, int iterations)
        : ComputeError(msg), iterations(iterations) {}
    int iterations = 0;
};

/// A profile left the admissible set S = { -1 < v < 1 }.
class AdmissibilityError : public ComputeError {
public:
    AdmissibilityError(const std::string& msg, int node, double value)
        : ComputeError(msg), node(node), value(value) {}
    int node = 0;
    double value = 0.0;
};

/// True when v(±1) = 0 and every value stays at least `margin` away from ±1.
bool in_admissible_set(const FilmProfile& u, double margin = 0.0);

/// Index of the first node violating the margin, or -1 if none.
int first_inadmissible_node(const FilmProfile& u, double margin);

FilmProfile zero_film(const Grid1D& zgrid);

FilmProfile reflect(const FilmProfile& u);

/// Centered interior second difference with homogeneous Dirichlet closure;
/// entries at the endpoints are set to 0.
std::vector<double> second_difference(const Grid1D& grid, const std::vector<double>& v);

/// First derivative: centered in the interior, one-sided 2nd-order at the ends.
std::vector<double> first_derivative(const Grid1D& grid, const std::vector<double>& v);

/// Local 4-point Lagrange cubic interpolation of grid data at x.
double interp_cubic(const Grid1D& grid, const std::vector<double>& v, double x);

double sup_norm(const std::vector<double>& v);

}  // namespace soapfilm
