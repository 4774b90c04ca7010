#pragma once

#include <cstddef>

// Data-parallel arithmetic kernels used by the quadrature, series-summation
// and time-stepping paths. Each kernel has a scalar reference implementation
// and, on x86-64 hardware that supports it, an AVX2+FMA variant selected at
// runtime. The variants are equivalence-tested against the reference; results
// may differ by reassociation roundoff only.

namespace soapfilm::kernels {

enum class Isa { scalar, avx2 };

/// Instruction set the dispatched entry points resolve to on this host.
Isa active_isa();
const char* isa_name(Isa isa);

// Dispatched entry points.
double dot(const double* a, const double* b, std::size_t n);
double dot3(const double* a, const double* b, const double* c, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double max_abs(const double* x, std::size_t n);
/// Sum of num[i] / (den[i] + shift).
double shifted_ratio_sum(const double* num, const double* den, double shift, std::size_t n);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double dot3(const double* a, const double* b, const double* c, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double max_abs(const double* x, std::size_t n);
double shifted_ratio_sum(const double* num, const double* den, double shift, std::size_t n);
}  // namespace scalar

namespace avx2 {
bool compiled();   // AVX2 translation unit present in this build
bool available();  // compiled() and the CPU supports AVX2+FMA
double dot(const double* a, const double* b, std::size_t n);
double dot3(const double* a, const double* b, const double* c, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double max_abs(const double* x, std::size_t n);
double shifted_ratio_sum(const double* num, const double* den, double shift, std::size_t n);
}  // namespace avx2

}  // namespace soapfilm::kernels
