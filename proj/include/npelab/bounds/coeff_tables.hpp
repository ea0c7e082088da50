#pragma once
// The named coefficient families driving every series bound, as closed
// forms with exact resonant values. All are verified against the windowed
// quadrature oracle in the tests.
//
//   c(k)  : cosine coefficients of chi (1 + cos p xi)
//   d(k)  : cosine coefficients of chi (cos p xi + cos 2p xi)
//   a1(k) : sine   coefficients of chi sin p xi
//   b1(k) : cosine coefficients of -(chi cos 2p xi)
//   A(k) = (pi/2p) a1(k),  B(k) = (pi/2) b1(k)
//   c1, d1, A1, B1: the monotone comparison envelopes.

namespace npelab::bounds {

double c_coef(int k, int p);
double d_coef(int k, int p);
double a1_coef(int k, int p);
double b1_coef(int k, int p);
double A_coef(int k, int p);
double B_coef(int k, int p);

double c1_aux(double k, int p);  // 1 / (k (k^2 - p^2))
double d1_aux(double k, int p);  // k / ((k^2 - p^2)(k^2 - 4p^2))
double A1_aux(double k, int p);  // 1 / (k^2 - p^2)
double B1_aux(double k, int p);  // k / (k^2 - 4p^2)

// Lattice term kernels at t = 0 (the exponential factors are handled by the
// sweeps, which check at the worst case t = 0).
double F11_kernel(int m, int l, int p);  // c(m) d(l) c(m+l)
double F12_kernel(int m, int l, int p);  // c(m) c(l) d(m+l)
double F1_kernel(int k, int l, int p);   // A(k) A(k+l) B(l)
double F2_kernel(int k, int l, int p);   // -A(k) A(l) B(k+l)

}  // namespace npelab::bounds
