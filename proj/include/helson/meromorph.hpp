#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "helson/spectrum.hpp"

namespace helson {

// Zero-free weight e^{-z} z^{-2}; real on the real axis and O(|z|^{-2}).
cplx weight_g1(cplx z) noexcept;

// g_{z0}(z) = 1 / ((z - z0) (z - z0 + 1)^{2n}): simple pole at z0 with residue 1.
struct PoleAtom {
    cplx z0;
    std::uint32_t n = 1;
    double c_budget = 0.0;

    cplx operator()(cplx z) const noexcept;
};

// Smallest n for which the closed-form sup bounds of g_{z0} on {Re z > 1}
// and on {|z - z0| > 3} are both below c_budget.
// Throws ValidationError unless alpha < Re z0 < 1 and c_budget > 0.
std::uint32_t choose_exponent(cplx z0, double c_budget, double alpha);

// Certified upper bounds used by choose_exponent.
double atom_bound_right_halfplane(double re_z0, std::uint32_t n) noexcept;
double atom_bound_far_field(std::uint32_t n) noexcept;

// g(z) = G_1(z) * sum_i weight_i g_i(z).
class AssembledG {
public:
    AssembledG(std::vector<PoleAtom> atoms, std::vector<cplx> weights,
               std::vector<ResidueTarget> targets, double alpha);

    std::span<const PoleAtom> atoms() const noexcept { return atoms_; }
    std::span<const cplx> weights() const noexcept { return weights_; }
    std::span<const ResidueTarget> targets() const noexcept { return targets_; }
    double alpha() const noexcept { return alpha_; }

    // Unchecked evaluation; poles give inf/nan.
    cplx evaluate(cplx z) const noexcept;
    // sum_i weight_i g_i(z), i.e. g / G_1. Bounded by 1 in modulus on Re z > 1.
    cplx normalized_sum(cplx z) const noexcept;

private:
    std::vector<PoleAtom> atoms_;
    std::vector<cplx> weights_;
    std::vector<ResidueTarget> targets_;
    double alpha_;
};

struct AssembleOptions {
    // Give conjugate targets a common exponent so g is real on the real axis.
    bool conjugate_symmetric = false;
};

// Throws ValidationError on an empty target list and ResourceError if G_1
// underflows at a target.
AssembledG assemble_g(std::span<const ResidueTarget> targets, double alpha,
                      AssembleOptions opts = {});

// Builds targets from a validated spec and assembles them with the mode's options.
AssembledG assemble_from_spec(const SpectrumSpec& spec);

constexpr double kPoleProximity = 1.0e-12;

// Throws HelsonError(validation) if Re z <= alpha or z is within 1e-12 of a pole.
cplx eval_g(const AssembledG& model, cplx z);

// (1 / 2 pi i) * contour integral of g over |z - center| = radius, trapezoid rule.
// Throws ValidationError if the circle comes within 2*radius of another pole or
// the line Re z = alpha.
cplx contour_residue(const AssembledG& model, cplx center, double radius, std::size_t nodes = 512);
cplx contour_residue(const AssembledG& model, const ResidueTarget& target, double radius,
                     std::size_t nodes = 512);

// index, re z0, im z0, n, C, re weight, im weight, residue
void write_atoms_csv(std::ostream& os, const AssembledG& model);

}  // namespace helson
