#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "helson/spectrum.hpp"

namespace helson {

// x_{j+1} = x_j + x_j^{21/40} (unconditional) or x_j + 4 sqrt(x_j) log x_j (rh).
double next_boundary(double x, Regime regime) noexcept;

// Lazily generated block boundaries x_0 = 2 < x_1 < ...
class BlockSchedule {
public:
    explicit BlockSchedule(Regime regime) : regime_(regime) {}
    BlockSchedule(Regime regime, std::size_t index, double x) : regime_(regime), index_(index), x_(x) {}

    Regime regime() const noexcept { return regime_; }
    std::size_t index() const noexcept { return index_; }
    double current() const noexcept { return x_; }
    double peek_next() const noexcept { return next_boundary(x_, regime_); }
    void advance() noexcept {
        x_ = peek_next();
        ++index_;
    }

    // x_0 .. x_J with x_J <= limit < x_{J+1}.
    static std::vector<double> boundaries_up_to(Regime regime, double limit);

private:
    Regime regime_;
    std::size_t index_ = 0;
    double x_ = 2.0;
};

struct PrimeSegment {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::vector<std::uint64_t> primes;
};

constexpr std::uint64_t kSegmentSize = 1ull << 20;

// Primes in [lo, hi). Throws ValidationError unless 2 <= lo <= hi <= limit + 1.
PrimeSegment segmented_sieve(std::uint64_t lo, std::uint64_t hi, std::uint64_t limit = kMaxSieveLimit);

// All primes <= limit.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit, bool parallel = true);

// Ascending primes from `start` up to `limit`, sieved a batch of segments ahead
// of the consumer.
class PrimeStream {
public:
    PrimeStream(std::uint64_t start, std::uint64_t limit, bool parallel = true,
                std::uint64_t segment_size = kSegmentSize);

    std::optional<std::uint64_t> peek();
    std::optional<std::uint64_t> next();
    // Appends primes p < bound to out (bound is a real block boundary).
    void take_below(double bound, std::vector<std::uint64_t>& out);

    std::uint64_t limit() const noexcept { return limit_; }

private:
    bool refill();

    std::uint64_t limit_;
    std::uint64_t cursor_;  // next unsieved integer
    bool parallel_;
    std::uint64_t segment_size_;
    std::vector<std::uint32_t> base_;
    std::vector<std::uint64_t> buffer_;
    std::size_t pos_ = 0;
};

// Primes in the j-th block [x_j, x_{j+1}). Throws ValidationError if x_{j+1} > limit + 1.
std::vector<std::uint64_t> primes_in_block(Regime regime, std::size_t j, std::uint64_t limit);

}  // namespace helson
