#pragma once
// Dual evaluation of the 3D trilinear functional on the heat-evolved
// control: (a) pseudo-spectral on the lattice, (b) tensor expansion of the
// second-derivative products, (c) the A/B/C/D regrouping, (d) the closed
// product formula. Also checks the ten product identities and the
// vanishing-integral families.

#include <string>
#include <utility>
#include <vector>

#include "npelab/control/control.hpp"

namespace npelab::bounds {

struct ReductionReport {
    double t = 0.0;
    double psi_3d = 0.0;           // pseudo-spectral Psi(S(t,u))
    double tensor_route = 0.0;     // p^6 x second-derivative tensor expansion
    double abcd_route = 0.0;       // p^6 x A/B/C/D regrouped integrals
    double product_formula = 0.0;  // (5/4)(a3^2 a1 - a2^2 a1) J1 J3 (J2+J4)
    double rel_3d_vs_product = 0.0;
    double rel_3d_vs_tensor = 0.0;
    double rel_tensor_vs_abcd = 0.0;
    double max_zero_identity = 0.0;  // worst member of the vanishing families
    // |lhs - rhs| / max(|rhs|, eps) for each of the ten product identities
    std::vector<std::pair<std::string, double>> term_identities;
};

ReductionReport reduction_check(const control::ControlParams& params, double t);

// The ten product identities alone (for arbitrary non-degenerate
// amplitudes, so both coefficient combinations appear).
std::vector<std::pair<std::string, double>> product_identity_residuals(
    const control::ControlParams& params, double t);

// Worst vanishing-family member at this t.
double zero_family_residual(const control::ControlParams& params, double t);

}  // namespace npelab::bounds
