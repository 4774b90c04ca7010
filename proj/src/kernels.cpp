#include "soapfilm/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace soapfilm::kernels {

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double dot3(const double* a, const double* b, const double* c, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i] * c[i];
    return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double max_abs(const double* x, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i]));
    return m;
}

double shifted_ratio_sum(const double* num, const double* den, double shift, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += num[i] / (den[i] + shift);
    return s;
}

}  // namespace scalar

namespace {

struct Dispatch {
    Isa isa;
    double (*dot)(const double*, const double*, std::size_t);
    double (*dot3)(const double*, const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    double (*max_abs)(const double*, std::size_t);
    double (*shifted_ratio_sum)(const double*, const double*, double, std::size_t);
};

Dispatch select() {
    if (avx2::available())
        return {Isa::avx2, avx2::dot, avx2::dot3, avx2::axpy, avx2::max_abs,
                avx2::shifted_ratio_sum};
    return {Isa::scalar, scalar::dot, scalar::dot3, scalar::axpy, scalar::max_abs,
            scalar::shifted_ratio_sum};
}

const Dispatch& table() {
    static const Dispatch d = select();
    return d;
}

}  // namespace

#ifndef SOAPFILM_HAVE_AVX2
namespace avx2 {
bool compiled() { return false; }
bool available() { return false; }
double dot(const double*, const double*, std::size_t) {
    throw std::logic_error("avx2 kernels not compiled");
}
double dot3(const double*, const double*, const double*, std::size_t) {
    throw std::logic_error("avx2 kernels not compiled");
}
void axpy(double, const double*, double*, std::size_t) {
    throw std::logic_error("avx2 kernels not compiled");
}
double max_abs(const double*, std::size_t) {
    throw std::logic_error("avx2 kernels not compiled");
}
double shifted_ratio_sum(const double*, const double*, double, std::size_t) {
    throw std::logic_error("avx2 kernels not compiled");
}
}  // namespace avx2
#endif

Isa active_isa() { return table().isa; }

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

double dot(const double* a, const double* b, std::size_t n) { return table().dot(a, b, n); }

double dot3(const double* a, const double* b, const double* c, std::size_t n) {
    return table().dot3(a, b, c, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    table().axpy(alpha, x, y, n);
}

double max_abs(const double* x, std::size_t n) { return table().max_abs(x, n); }

double shifted_ratio_sum(const double* num, const double* den, double shift, std::size_t n) {
    return table().shifted_ratio_sum(num, den, shift, n);
}

}  // namespace soapfilm::kernels
