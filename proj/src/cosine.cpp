#include "soapfilm/cosine.hpp"

#include <cmath>

namespace soapfilm::cosine {

namespace {
const double kPi = 3.14159265358979323846;
}

double evaluate(const OddCosineSum& f, double z) {
    double acc = 0.0;
    for (std::size_t j = 0; j < f.coeffs.size(); ++j)
        acc += f.coeffs[j] * std::cos((2.0 * j + 1.0) * kPi * z / 2.0);
    return acc;
}

std::vector<double> odd_to_even(const OddCosineSum& f) {
    // b_0 = sum (-1)^k a_k, b_j = 2 sum_{k>=j} (-1)^{k-j} a_k; the alternating
    // suffix sums satisfy S_j = a_j - S_{j+1}.
    const std::size_t n = f.coeffs.size();
    std::vector<double> b(n, 0.0);
    double suffix = 0.0;
    for (std::size_t j = n; j-- > 0;) {
        suffix = f.coeffs[j] - suffix;
        b[j] = 2.0 * suffix;
    }
    if (!b.empty()) b[0] *= 0.5;
    return b;
}

PositivityBound positivity_bound(const OddCosineSum& f) {
    PositivityBound out;
    if (f.coeffs.empty()) return out;
    double tail = 0.0;
    for (std::size_t j = 1; j < f.coeffs.size(); ++j)
        tail += (2.0 * j + 1.0) * std::abs(f.coeffs[j]);
    out.C = f.coeffs[0] - tail;
    out.positive = out.C > 0.0;
    return out;
}

}  // namespace soapfilm::cosine
