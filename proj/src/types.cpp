#include "soapfilm/types.hpp"

#include <algorithm>
#include <cmath>

#include "soapfilm/kernels.hpp"

namespace soapfilm {

Grid1D make_uniform_grid(double a, double b, int n) {
    if (!(a < b)) throw std::invalid_argument("make_uniform_grid: need a < b");
    if (n < 1) throw std::invalid_argument("make_uniform_grid: need n >= 1");
    Grid1D g;
    g.a = a;
    g.b = b;
    g.n = n;
    g.h = (b - a) / (n + 1);
    g.nodes.resize(static_cast<std::size_t>(n) + 2);
    for (int i = 0; i <= n + 1; ++i) g.nodes[i] = a + i * g.h;
    g.nodes.front() = a;
    g.nodes.back() = b;
    return g;
}

bool same_grid(const Grid1D& g1, const Grid1D& g2) {
    return g1.n == g2.n && g1.a == g2.a && g1.b == g2.b;
}

bool in_admissible_set(const FilmProfile& u, double margin) {
    if (u.values.front() != 0.0 || u.values.back() != 0.0) return false;
    return first_inadmissible_node(u, margin) < 0;
}

int first_inadmissible_node(const FilmProfile& u, double margin) {
    const double lim = 1.0 - margin;
    for (std::size_t i = 0; i < u.values.size(); ++i)
        if (!(std::abs(u.values[i]) < lim)) return static_cast<int>(i);
    return -1;
}

FilmProfile zero_film(const Grid1D& zgrid) {
    return FilmProfile{zgrid, std::vector<double>(zgrid.size(), 0.0)};
}

FilmProfile reflect(const FilmProfile& u) {
    FilmProfile r = u;
    std::reverse(r.values.begin(), r.values.end());
    return r;
}

std::vector<double> second_difference(const Grid1D& grid, const std::vector<double>& v) {
    const std::size_t m = v.size();
    std::vector<double> d2(m, 0.0);
    const double ih2 = 1.0 / (grid.h * grid.h);
    for (std::size_t i = 1; i + 1 < m; ++i)
        d2[i] = (v[i - 1] - 2.0 * v[i] + v[i + 1]) * ih2;
    return d2;
}

std::vector<double> first_derivative(const Grid1D& grid, const std::vector<double>& v) {
    const std::size_t m = v.size();
    std::vector<double> d(m, 0.0);
    const double ih = 1.0 / grid.h;
    if (m < 3) throw std::invalid_argument("first_derivative: need at least 3 nodes");
    for (std::size_t i = 1; i + 1 < m; ++i) d[i] = 0.5 * ih * (v[i + 1] - v[i - 1]);
    d[0] = 0.5 * ih * (-3.0 * v[0] + 4.0 * v[1] - v[2]);
    d[m - 1] = 0.5 * ih * (3.0 * v[m - 1] - 4.0 * v[m - 2] + v[m - 3]);
    return d;
}

double interp_cubic(const Grid1D& grid, const std::vector<double>& v, double x) {
    const std::size_t m = v.size();
    if (m < 4) throw std::invalid_argument("interp_cubic: need at least 4 nodes");
    double t = (x - grid.a) / grid.h;
    long j = static_cast<long>(std::floor(t)) - 1;
    j = std::clamp<long>(j, 0, static_cast<long>(m) - 4);
    const double* xs = grid.nodes.data() + j;
    const double* ys = v.data() + j;
    double acc = 0.0;
    for (int k = 0; k < 4; ++k) {
        double w = 1.0;
        for (int l = 0; l < 4; ++l)
            if (l != k) w *= (x - xs[l]) / (xs[k] - xs[l]);
        acc += w * ys[k];
    }
    return acc;
}

double sup_norm(const std::vector<double>& v) {
    return kernels::max_abs(v.data(), v.size());
}

}  // namespace soapfilm
