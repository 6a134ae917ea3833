#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "helson/meromorph.hpp"

namespace helson {

struct TransformConfig {
    double half_width = 4096.0;            // T
    std::uint64_t grid_size = 1ull << 20;  // N, power of two
    double tail_tolerance = 1.0e-3;        // bound on 2 e^{-1} / T
    double causality_tolerance = 1.0e-6;
    double decay_tolerance = 1.0e-8;
    double reality_tolerance = 1.0e-10;
    double roundtrip_tolerance = 1.0e-4;
    bool parallel = true;

    double dt() const noexcept { return 2.0 * half_width / static_cast<double>(grid_size); }
};

// h(t) = g(1 - i t) on t_k = -T + k dt, k = 0 .. N-1, plus h(T) for the
// trapezoid end correction.
struct BoundaryTrace {
    double half_width = 0.0;
    double dt = 0.0;
    std::vector<cplx> values;
    cplx right_end{};
    bool conjugate_symmetric = false;

    double t_at(std::size_t k) const noexcept { return -half_width + static_cast<double>(k) * dt; }
};

// Throws ValidationError if N is not a power of two or the tail estimate
// 2 e^{-1} / T exceeds cfg.tail_tolerance.
BoundaryTrace sample_boundary(const AssembledG& model, const TransformConfig& cfg,
                              bool conjugate_symmetric = false);

// Samples of p on a uniform grid u_k = (k - zero_index) du covering [-1, U_max],
// with q(x) = p(log x).
class KernelTable {
public:
    KernelTable() = default;
    KernelTable(double du, std::size_t zero_index, std::vector<cplx> samples);

    double du() const noexcept { return du_; }
    std::size_t zero_index() const noexcept { return zero_index_; }
    std::size_t size() const noexcept { return p_.size(); }
    std::span<const cplx> samples() const noexcept { return p_; }
    double u_at(std::size_t k) const noexcept {
        return (static_cast<double>(k) - static_cast<double>(zero_index_)) * du_;
    }
    double u_min() const noexcept { return u_at(0); }
    double u_max() const noexcept { return u_at(p_.size() - 1); }
    // Upper end of the range served by block_integral.
    double integral_u_max() const noexcept;

    // Linear interpolation of p at u.
    cplx p_eval(double u) const;
    // q(x) = p(log x). Throws ValidationError outside [1, e^{U_max}].
    cplx q_eval(double x) const;

    // int_a^b q(x) dx = int_{log a}^{log b} p(u) e^u du, trapezoid rule on the
    // grid with linear interpolation in the partial end cells.
    cplx block_integral(double a, double b) const;
    // int_1^x q.
    cplx cumulative(double x) const;

    // Diagnostics measured when the table was produced.
    double causality_residue() const noexcept;  // max |p| on [-1, 0)
    double tail_magnitude() const noexcept;     // max |p| on the top 5% of the grid
    double max_imag() const noexcept { return max_imag_; }
    void set_max_imag(double v) noexcept { max_imag_ = v; }
    bool is_real() const noexcept;

    // Drops imaginary parts, recording the largest one discarded.
    void project_real();

private:
    cplx cumulative_u(double u) const;

    double du_ = 0.0;
    std::size_t zero_index_ = 0;
    std::vector<cplx> p_;
    std::vector<cplx> cum_;  // int_0^{u_k} p e^u du, indexed from zero_index_
    double max_imag_ = 0.0;
};

// p(y) = (1 / 2 pi) int h(t) e^{-i t y} dt by FFT with trapezoid end corrections,
// truncated to u in [-1, N du / 2]. Throws ValidationError if the grid does not
// reach required_u_max. With project_to_real the imaginary parts are measured
// and dropped.
KernelTable fourier_to_kernel(const BoundaryTrace& trace, double required_u_max,
                              bool project_to_real = false);

// Full pipeline: sample h, transform, and (in real mode) project.
KernelTable build_kernel(const AssembledG& model, const TransformConfig& cfg, double required_u_max,
                         bool real_mode);

struct RoundtripSample {
    cplx s;
    cplx quadrature;
    cplx exact;
    double abs_error = 0.0;
    double rel_error = 0.0;       // |quad - g(s)| / |g(s)|
    double envelope_error = 0.0;  // |quad - g(s)| / |G_1(s)|
};

struct RoundtripReport {
    std::vector<RoundtripSample> samples;
    double max_abs_error = 0.0;
    double max_rel_error = 0.0;
    double max_envelope_error = 0.0;
};

// int_1^{e^{U_max}} q(x) x^{-s} dx by trapezoid rule in u = log x.
cplx mellin_forward(const KernelTable& table, cplx s, bool parallel = true);

// Compares mellin_forward against eval_g. Throws ValidationError if some Re s < 1.1.
RoundtripReport mellin_roundtrip_check(const KernelTable& table, const AssembledG& model,
                                       std::span<const cplx> s_samples, bool parallel = true);

// (sum |p|^2 du) / ((1 / 2 pi) sum |h|^2 dt); 1 up to truncation.
double parseval_ratio(const BoundaryTrace& trace, const KernelTable& table);

// Binary format: "HZKQ", u32 version, f64 du, f64 U_max, u64 count, then
// count little-endian (re, im) f64 pairs.
void write_kernel(std::ostream& os, const KernelTable& table);
KernelTable read_kernel(std::istream& is);
void save_kernel(const std::filesystem::path& path, const KernelTable& table);
KernelTable load_kernel(const std::filesystem::path& path);

// u, re p, im p
void write_kernel_csv(std::ostream& os, const KernelTable& table, std::size_t stride = 1);

constexpr std::uint32_t kKernelFormatVersion = 1;

}  // namespace helson
