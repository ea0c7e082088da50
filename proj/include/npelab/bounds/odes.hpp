#pragma once
// Differential identities for J2+J4 and g = 12R+9Q, checked by 4th-order
// finite differences against the stated right-hand sides, plus the 1D zero
// identities and initial values.

#include <vector>

#include "npelab/bounds/series.hpp"

namespace npelab::bounds {

struct OdeReport {
    double j24_residual = 0.0;      // max FD residual of the J2+J4 equation
    double abeq_residual = 0.0;     // max FD residual of the g equation
    double j24_initial_err = 0.0;   // |(J2+J4)(0) - 11 pi / 4p|
    double g_initial_err = 0.0;     // |g(0) - 27 pi / 2p|
    double zeroint_max = 0.0;       // max |int S^2(chi sin) S(chi cos)|
    double eq41_max = 0.0;          // max |int S(chi(cos+cos2)) S^2(chi(sin+sin2/2))|
    double rhs_min = 0.0;           // min of the J2+J4 RHS over the grid
};

OdeReport ode_identity_checks(int p, const std::vector<double>& t_grid, int K,
                              double dt = 1e-3);

}  // namespace npelab::bounds
