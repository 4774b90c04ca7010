#pragma once

#include <vector>

// Finite sums of odd cosines sum_j a_j cos((2j+1) pi z / 2): evaluation,
// reduction to an even cosine series after division by cos(pi z / 2), and the
// sufficient positivity bound a_0 - sum_{j>=1} (2j+1) |a_j|.

namespace soapfilm::cosine {

struct OddCosineSum {
    std::vector<double> coeffs;  // a_0 .. a_n
};

double evaluate(const OddCosineSum& f, double z);

/// Coefficients b_j of f(z) / cos(pi z / 2) = sum_j b_j cos(j pi z).
std::vector<double> odd_to_even(const OddCosineSum& f);

struct PositivityBound {
    double C = 0.0;
    bool positive = false;  // C > 0; when true, f(z) >= C cos(pi z / 2) on (-1,1)
};

PositivityBound positivity_bound(const OddCosineSum& f);

}  // namespace soapfilm::cosine
