#pragma once

#include <cmath>
#include <complex>

namespace helson {

// Neumaier's variant of Kahan summation. The running compensation is part of
// the observable state so that checkpointed sums resume bit-identically.
class CompensatedSum {
public:
    CompensatedSum() = default;
    CompensatedSum(double sum, double comp) : sum_(sum), comp_(comp) {}

    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }
    double raw_sum() const noexcept { return sum_; }
    double raw_comp() const noexcept { return comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexCompensatedSum {
public:
    ComplexCompensatedSum() = default;
    ComplexCompensatedSum(CompensatedSum re, CompensatedSum im) : re_(re), im_(im) {}

    void add(std::complex<double> z) noexcept {
        re_.add(z.real());
        im_.add(z.imag());
    }

    std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }
    const CompensatedSum& re() const noexcept { return re_; }
    const CompensatedSum& im() const noexcept { return im_; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

}  // namespace helson
