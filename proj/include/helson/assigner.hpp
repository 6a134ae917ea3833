#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "helson/mellin.hpp"
#include "helson/primes.hpp"
#include "helson/spectrum.hpp"
#include "helson/summation.hpp"

namespace helson {

// Character value for a code: cubic 0 -> 1, 1 -> e^{2 pi i/3}, 2 -> e^{-2 pi i/3};
// real 0 -> +1, 1 -> -1; l_roots k -> e^{2 pi i k / l}.
cplx decode_chi(const Alphabet& alphabet, std::uint8_t code);

// Values of chi at the primes <= sieve_limit, in ascending prime order.
struct ChiTable {
    Alphabet alphabet;
    std::uint64_t sieve_limit = 0;
    std::vector<std::uint64_t> primes;
    std::vector<std::uint8_t> codes;

    std::size_t size() const noexcept { return codes.size(); }
    cplx value(std::size_t i) const { return decode_chi(alphabet, codes[i]); }
};

// k in {0, +1, -1} minimising |2 k pi / 3 - c|; ties resolved in the order 0, +1, -1.
int choose_cubic(double c) noexcept;
// +1 for rho >= 0, else -1.
int choose_real(double rho) noexcept;
// k in [0, l) with e^{2 pi i k / l} nearest to e^{i c}.
unsigned choose_root(double c, unsigned l) noexcept;

// arg rho in [-pi, pi); 0 when rho = 0.
double snap_argument(cplx rho) noexcept;

// Code for the value closest in angle to rho under the alphabet's rule.
std::uint8_t choose_code(const Alphabet& alphabet, cplx rho) noexcept;

// |rho_new| <= max(|rho_old| - log p / 4, 3 log p).
bool step_contracts(cplx rho_old, cplx rho_new, double log_p) noexcept;

struct BlockState {
    std::uint64_t j = 0;
    double x = 2.0;
    ComplexCompensatedSum r;
};

struct StepRecord {
    std::uint64_t prime = 0;
    cplx rho_old;
    cplx rho_new;
    std::uint8_t code = 0;
};

struct BlockOutcome {
    std::uint64_t steps = 0;
    std::uint64_t violations = 0;  // failures of step_contracts
};

// rho <- r + block_integral, then for each prime in order snap chi(p) to arg rho
// and subtract chi(p) log p. The state's residual ends as r(x_{j+1}); j and x
// are left for the caller to advance.
BlockOutcome assign_block(BlockState& state, cplx block_integral, std::span<const std::uint64_t> primes,
                          const Alphabet& alphabet, std::vector<std::uint8_t>& codes_out,
                          std::vector<StepRecord>* trace = nullptr);

// Same recurrence with given codes; used to re-derive residuals from a table.
BlockOutcome replay_block(BlockState& state, cplx block_integral, std::span<const std::uint64_t> primes,
                          std::span<const std::uint8_t> codes, const Alphabet& alphabet,
                          std::vector<StepRecord>* trace = nullptr);

struct BlockRecord {
    std::uint64_t j = 0;
    double x = 0.0;              // block start x_j (the final record holds the end point)
    cplx r;                      // r(x_j)
    std::uint64_t primes_in_block = 0;
    cplx block_integral;         // int over [x_j, x_{j+1}) of q
};

struct BlockLog {
    std::vector<BlockRecord> records;
};

// j, x_j, Re r, Im r, |r|/log x_j, primes_in_block
void write_blocklog_csv(std::ostream& os, const BlockLog& log);
BlockLog read_blocklog_csv(std::istream& is);

// End of the block starting at x: the scheduled successor, or limit + 1 once
// the successor passes the sieve limit.
double block_end(double x, Regime regime, std::uint64_t limit) noexcept;

struct PipelineState {
    BlockState block;
    std::vector<std::uint8_t> codes;
    BlockLog log;
    std::uint64_t steps = 0;
    std::uint64_t violations = 0;
};

struct PipelineOptions {
    bool parallel_sieve = true;
    std::size_t checkpoint_every = 0;  // blocks; 0 disables
    std::function<void(const PipelineState&)> on_checkpoint;
    std::optional<PipelineState> resume;
    // Throws PipelineInterrupted after this many blocks (after any checkpoint).
    std::optional<std::uint64_t> stop_after_block;
};

struct PipelineInterrupted : HelsonError {
    explicit PipelineInterrupted(std::uint64_t j)
        : HelsonError(ErrorKind::resource, "pipeline interrupted at block " + std::to_string(j)) {}
};

struct PipelineResult {
    ChiTable table;
    BlockLog log;
    std::uint64_t steps = 0;
    std::uint64_t violations = 0;
};

// Walks every block up to the sieve limit. Real alphabets use Re of the block
// integrals, keeping residuals exactly real.
PipelineResult run_pipeline(const SpectrumSpec& spec, const KernelTable& kernel,
                            const PipelineOptions& opts = {});

// Checkpoint file "HZCP"; the fingerprint ties it to one configuration.
void save_checkpoint(const std::filesystem::path& path, const PipelineState& state,
                     std::uint64_t fingerprint);
PipelineState load_checkpoint(const std::filesystem::path& path, std::uint64_t fingerprint);

// "HZTA" table format; primes are re-sieved on load and checked against the count.
void write_chi_table(std::ostream& os, const ChiTable& table);
ChiTable read_chi_table(std::istream& is);
void save_chi_table(const std::filesystem::path& path, const ChiTable& table);
ChiTable load_chi_table(const std::filesystem::path& path);
std::uint64_t chi_payload_checksum(const ChiTable& table);

struct StepReplayReport {
    std::uint64_t steps_checked = 0;
    std::uint64_t violations = 0;
    double worst_margin = 0.0;  // max |rho_new| / bound over checked steps
};

// Replays `count` uniformly sampled steps (all of them if count >= total)
// from the logged block starts; deterministic in seed.
StepReplayReport replay_sampled_steps(const ChiTable& table, const KernelTable& kernel,
                                      const BlockLog& log, std::size_t count, std::uint64_t seed);

struct RecurrenceReport {
    std::size_t blocks_checked = 0;
    double max_deviation = 0.0;
    bool structure_ok = true;  // boundaries and prime counts consistent with the schedule
};

// Recomputes r(x_{j+1}) from r(x_j), the kernel and the table for every logged block.
RecurrenceReport replay_recurrence(const ChiTable& table, const KernelTable& kernel, const BlockLog& log,
                                   Regime regime);

struct RBoundReport {
    std::size_t warmup = 0;   // M
    double constant = 3.0;    // K
    std::size_t violations = 0;
    double max_ratio_after_warmup = 0.0;
    double max_ratio = 0.0;
};

// M is the first index from which |r(x_{j+1})| <= max(|r(x_j)|, 3 log x_{j+1})
// holds for every later block; K = max(max_{i <= M} |r(x_i)| / log x_i, 3).
RBoundReport residual_bound(const BlockLog& log);

}  // namespace helson
