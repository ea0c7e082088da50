#pragma once
// Exponential lower-bound certificates: each series is evaluated with its
// rigorous truncation tail on a time grid and compared against the claimed
// constant. Margins are strict including tails.

#include <vector>

#include "npelab/bounds/reports.hpp"
#include "npelab/bounds/series.hpp"

namespace npelab::bounds {

// Geometric time grid for the certificates: {0} then t0 * r^j up to T.
std::vector<double> certificate_time_grid(double t0 = 1e-3, double T = 10.0,
                                          double ratio = 1.35);

// alpha = 9 sin^2(pi/p) sin(2pi/p) / (2 pi^2 p^6)
double alpha_constant(int p);
// The lattice-sum bound constant consistent with alpha through the identity
// tildeJ = (4p^2/pi^2) J: 9 sin^2(pi/p) sin(2pi/p) / (8 p^8).
double lattice_bound_constant(int p);
// C1 = (pi/2) (2 c(1) d(1) c(2) + c(1)^2 d(2))
double C1_constant(int p);

struct CertificateSet {
    std::vector<BoundReport> reports;
    double beta_emp = 0.0;  // min over grid of (product formula) * e^{18t}
};

// Runs every certificate for p in ps over [0, T]:
//   tildeJ > alpha e^{-6t};  J > (9 s^2 s2 / 8p^8) e^{-6t} (the constant the
//   proof supports; the printed 4p^8 variant is reported informationally);
//   J1 >= C1 e^{-6t};  J3 > 0 with log J3 + 6t bounded below;  J2+J4 > 0
//   plus the variation-of-constants chain; and the composed beta certificate
//   at p = 2.
CertificateSet lower_bound_certificates(const std::vector<int>& ps,
                                        const std::vector<double>& t_grid, int K);

}  // namespace npelab::bounds
