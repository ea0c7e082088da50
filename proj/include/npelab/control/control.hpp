#pragma once
// The universal starting control u = curl curl (chi^3 w(p.), 0, 0), built in
// spectral space as exact tensor products of 1D windowed coefficients.
// chi^3 is the indicator of the cube [-pi/p, pi/p]^3 and w is the fixed
// three-factor trig polynomial with free amplitudes (a1, a2, a3).

#include <array>
#include <vector>

#include "npelab/heat1d/trigpoly.hpp"
#include "npelab/spectral/field.hpp"

namespace npelab::control {

struct ControlParams {
    int p = 2;
    double a1 = 1.0, a2 = 0.0, a3 = 1.0;
    int N = 32;           // lattice truncation
    double eps_div = 1e-10;

    // (5/4)(a3^2 a1 - a2^2 a1), the prefactor of the product formula; the
    // stabilization argument needs it positive.
    double positivity_prefactor() const {
        return 1.25 * (a3 * a3 * a1 - a2 * a2 * a1);
    }
    void validate() const;  // throws on p < 2, zero amplitudes, N < 3p
};

// One rank-1 tensor term coef * f0(x1) f1(x2) f2(x3).
struct RankOneTerm {
    double coef;
    std::array<heat1d::TrigPoly, 3> f;
};
using TermList = std::vector<RankOneTerm>;

// w and its derivatives as rank-1 tensor sums (the A/B/C/D groupings).
TermList w_terms(const ControlParams& c);
TermList dw_terms(int axis, const ControlParams& c);            // axis 1..3
TermList d2w_terms(int i, int j, const ControlParams& c);       // (1,2),(1,3),(2,3),(2,2),(3,3)

// Evaluates a tensor sum at a physical point (no window).
double eval_terms(const TermList& terms, const std::array<double, 3>& x);

// The control field itself: u = p^2 chi^3 (-(d22+d33)w, d12 w, d13 w)(p x).
spectral::SpectralField3 build_control(const ControlParams& c);

// curl^-1 u = p chi^3 (0, d3 w, -d2 w)(p x), assembled independently from
// the first-derivative factorization (cross-check target).
spectral::SpectralField3 build_curl_inv_control(const ControlParams& c);

// Spectral field of chi^3 * (sum of rank-1 terms)(p x) as a single scalar
// placed in the given component slot.
spectral::SpectralField3 tensor_field(const TermList& terms, int component, int p, int N,
                                      double scale, double eps_div = 1e-10);

struct SupportReport {
    double inside_max;
    double outside_max;
    int grid_n;
};

// Evaluates u on an n^3 physical grid and measures leakage outside the
// closed support cube (a truncation-decay diagnostic).
SupportReport support_check(const spectral::SpectralField3& u, int p, int n);

}  // namespace npelab::control
