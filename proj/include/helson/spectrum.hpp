#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "helson/error.hpp"

namespace helson {

using cplx = std::complex<double>;

enum class AlphabetKind : std::uint8_t { cubic = 0, real = 1, l_roots = 2 };

// Allowed character values: cube roots of unity, {+1, -1}, or l-th roots.
struct Alphabet {
    AlphabetKind kind = AlphabetKind::cubic;
    unsigned l = 3;

    static Alphabet cubic() { return {AlphabetKind::cubic, 3}; }
    static Alphabet real() { return {AlphabetKind::real, 2}; }
    static Alphabet roots(unsigned l) { return {AlphabetKind::l_roots, l}; }

    // Number of distinct character values.
    unsigned size() const noexcept;
    bool operator==(const Alphabet&) const = default;
};

enum class Regime : std::uint8_t { unconditional = 0, rh = 1 };

// Left edge of the strip in which zeros and poles may be prescribed.
constexpr double boundary_abscissa(Regime r) noexcept {
    return r == Regime::unconditional ? 21.0 / 40.0 : 0.5;
}

constexpr double kMaxAbsImag = 1.0e4;
constexpr std::uint64_t kMaxSieveLimit = 10'000'000'000ULL;
constexpr unsigned kMaxRootsOrder = 16;

struct StripPoint {
    double re = 0.0;
    double im = 0.0;
    std::uint32_t multiplicity = 1;

    cplx point() const noexcept { return {re, im}; }
    bool operator==(const StripPoint&) const = default;
};

struct SpectrumSpec {
    std::vector<StripPoint> zeros;
    std::vector<StripPoint> poles;
    Alphabet alphabet = Alphabet::cubic();
    Regime regime = Regime::unconditional;
    std::uint64_t sieve_limit = 100'000'000ULL;

    double alpha() const noexcept { return boundary_abscissa(regime); }
    bool operator==(const SpectrumSpec&) const = default;
};

struct ResidueTarget {
    cplx point;
    std::int64_t residue = 0;
    std::size_t order_index = 0;
};

// Returns every violated constraint; empty means the spec is valid.
std::vector<std::string> check_spec(const SpectrumSpec& spec);

// Throws ValidationError listing all violations; otherwise returns the spec unchanged.
const SpectrumSpec& validate_spec(const SpectrumSpec& spec);

// One target per distinct point of Z and P, zeros carrying -multiplicity and
// poles +multiplicity, sorted by (|im|, re, im).
std::vector<ResidueTarget> build_residue_targets(const SpectrumSpec& spec);

SpectrumSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const SpectrumSpec& spec);

std::string to_string(Regime r);
std::string to_string(const Alphabet& a);

}  // namespace helson
