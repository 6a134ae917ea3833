#pragma once

// Data-parallel inner loops. Every OpenMP kernel has a serial reference with
// the same arithmetic order, so the two produce bit-identical results; tests
// compare them and bench/ times them.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "helson/meromorph.hpp"

namespace helson::kernels {

// Primes <= limit by the plain sieve of Eratosthenes.
std::vector<std::uint32_t> base_primes(std::uint32_t limit);

// Appends the primes in [lo, hi) to out. base must contain every prime <= sqrt(hi - 1).
void sieve_segment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> base,
                   std::vector<std::uint64_t>& out);

std::vector<std::uint64_t> sieve_range_serial(std::uint64_t lo, std::uint64_t hi,
                                              std::span<const std::uint32_t> base,
                                              std::uint64_t segment_size);
std::vector<std::uint64_t> sieve_range_parallel(std::uint64_t lo, std::uint64_t hi,
                                                std::span<const std::uint32_t> base,
                                                std::uint64_t segment_size);

// out[k] = g(1 - i t_k) with t_k = t0 + k dt.
void sample_trace_serial(const AssembledG& model, double t0, double dt, std::span<cplx> out);
void sample_trace_parallel(const AssembledG& model, double t0, double dt, std::span<cplx> out);

struct EnvelopeGrid {
    double re_min = 1.0;
    double re_max = 6.0;
    std::size_t re_count = 51;
    double im_min = -1000.0;
    double im_max = 1000.0;
    std::size_t im_count = 20001;
};

// max over the grid of |g(z)| |z|^2 e^{Re z}, i.e. |g / G_1|.
double envelope_sup_serial(const AssembledG& model, const EnvelopeGrid& grid);
double envelope_sup_parallel(const AssembledG& model, const EnvelopeGrid& grid);

// Trapezoid rule for sum_k w_k p_k e^{(1 - s) u_k} du over u_k = u0 + k du,
// with half weights at both ends. Chunked so the serial and parallel versions
// add in the same order.
cplx laplace_trapezoid_serial(std::span<const cplx> p, double u0, double du, cplx s);
cplx laplace_trapezoid_parallel(std::span<const cplx> p, double u0, double du, cplx s);

constexpr std::size_t kLaplaceChunk = 4096;

}  // namespace helson::kernels
