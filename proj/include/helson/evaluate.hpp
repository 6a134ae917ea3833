#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include <json.hpp>

#include "helson/assigner.hpp"
#include "helson/mellin.hpp"

namespace helson {

// prod_{p <= X} (1 - chi(p) p^{-s})^{-1} as exp of a compensated log sum.
// Throws ValidationError for Re s <= 1 or X beyond the table.
cplx eval_zeta_chi(const ChiTable& table, cplx s, double x_max);
// sum_{p <= X} -log(1 - chi(p) p^{-s}), the logarithm used by eval_zeta_chi.
cplx log_zeta_chi(const ChiTable& table, cplx s, double x_max);
std::vector<cplx> eval_zeta_chi_many(const ChiTable& table, std::span<const cplx> s, double x_max);

// -sum_{p <= X} chi(p) p^{-s} log p.
cplx eval_gtilde_partial(const ChiTable& table, cplx s, double x_max);

struct PrimePowerTail {
    cplx value;
    double truncation_bound = 0.0;  // bound on the omitted terms with p^a > X^2
};

// -sum over p <= X, a >= 2, p^a <= X^2 of chi(p)^a log p p^{-a s}.
// Throws ValidationError unless Re s > 1/2 + margin.
PrimePowerTail prime_power_tail(const ChiTable& table, cplx s, double x_max, double margin = 0.05);

// Central difference of log_zeta_chi in s.
cplx numerical_log_derivative(const ChiTable& table, cplx s, double x_max, double step = 1.0e-4);

// int_1^X q(x) x^{-s} dx by trapezoid in u = log x.
cplx kernel_moment(const KernelTable& kernel, cplx s, double x_max);

struct ConvergencePoint {
    double x = 0.0;
    cplx value;        // D(X, s)
    double delta = 0.0;  // |D(X_k) - D(X_{k-1})|; 0 for the first point
};

struct ConvergenceReport {
    cplx s;
    std::vector<ConvergencePoint> points;
    double fitted_exponent = 0.0;  // decay exponent of the successive differences
    double expected_exponent = 0.0;  // Re s - alpha
    std::size_t warmup = 0;          // first difference index used by the fit
    std::size_t increases_after_warmup = 0;
};

// D(X, s) = int_1^X q x^{-s} dx - sum_{p <= X} chi(p) p^{-s} log p at each X.
ConvergenceReport difference_series(const ChiTable& table, const KernelTable& kernel, cplx s,
                                    std::span<const double> x_sequence, double alpha);

// Least-squares slope of log delta against log X over points [warmup+1, end), negated.
double fit_decay_exponent(const std::vector<ConvergencePoint>& pts, std::size_t warmup);

// X = 2, 4, 8, ... up to the limit.
std::vector<double> dyadic_sequence(std::uint64_t limit);

// r(x) = int_1^x q - sum_{p < x} chi(p) log p, recomputed from scratch. The
// strict inequality matches the half-open blocks [x_j, x_{j+1}) and differs
// from p <= x only when x itself is prime (x_0 = 2).
cplx r_of_x(const ChiTable& table, const KernelTable& kernel, double x);

// X, re D, im D, |dD|
void write_convergence_csv(std::ostream& os, const ConvergenceReport& rep);
nlohmann::json convergence_summary(const ConvergenceReport& rep);

}  // namespace helson
