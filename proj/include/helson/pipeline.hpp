#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "helson/evaluate.hpp"
#include "helson/kernels.hpp"
#include "helson/mellin.hpp"
#include "helson/spectrum.hpp"

namespace helson {

struct Diagnostics {
    std::vector<cplx> d_series_s{{0.8, 0.0}};  // s values for the D(X, s) report
    std::vector<double> x_grid;                 // empty: dyadic up to the sieve limit
    std::vector<cplx> roundtrip_s;              // empty: default 20-point sample
    std::size_t replay_samples = 10'000;
    std::uint64_t replay_seed = 20261015;
    double residue_radius = 0.01;
    std::size_t residue_nodes = 512;
    double residue_tolerance = 1.0e-8;
    double recurrence_tolerance = 1.0e-9;
    kernels::EnvelopeGrid envelope{1.0, 6.0, 11, -1000.0, 1000.0, 4001};
};

struct RunConfig {
    SpectrumSpec spec;
    TransformConfig transform;
    std::filesystem::path output_dir = "out";
    std::size_t checkpoint_every = 500;
    Diagnostics diagnostics;
};

// Relative output_dir entries resolve against base_dir.
RunConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
nlohmann::json config_to_json(const RunConfig& cfg);
RunConfig load_config(const std::filesystem::path& path);
// Stable hash of the configuration, used to match checkpoints.
std::uint64_t config_fingerprint(const RunConfig& cfg);

// Twenty points with Re s in [1.1, 3] and |Im s| <= 50.
std::vector<cplx> default_roundtrip_samples();

namespace artifacts {
inline constexpr const char* atoms = "atoms.csv";
inline constexpr const char* kernel = "kernel.hzkq";
inline constexpr const char* chi = "chi.hzta";
inline constexpr const char* blocklog = "blocklog.csv";
inline constexpr const char* summary = "summary.json";
inline constexpr const char* checkpoint = "checkpoint.hzcp";
}  // namespace artifacts

struct BuildOptions {
    bool force = false;
    bool resume = false;
    std::optional<std::uint64_t> stop_after_block;  // simulated crash for tests
};

// Writes atoms.csv, kernel.hzkq, chi.hzta, blocklog.csv and summary.json.
// Returns the summary document.
nlohmann::json cmd_build(const RunConfig& cfg, const BuildOptions& opts = {});

struct CheckResult {
    std::string name;
    bool passed = false;
    nlohmann::json measured;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
    nlohmann::json to_json() const;
};

VerifyReport cmd_verify(const std::filesystem::path& artifact_dir);

// Euler product and log-derivative pieces at s with primes up to X.
nlohmann::json cmd_eval(const std::filesystem::path& artifact_dir, cplx s, double x_max);

// D(X, s) series for the configured s values; writes report_D_<k>.csv and report.json.
nlohmann::json cmd_report(const std::filesystem::path& artifact_dir);

}  // namespace helson
