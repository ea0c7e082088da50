#pragma once
// Exact Fourier coefficients of window-localized trig polynomials
// chi_{pi/p}(xi) * f(p*xi) on [-pi, pi].
//
// Cosine series are written f = coeff(0)/2 + sum_{k>=1} coeff(k) cos(k xi),
// sine series f = sum_{k>=1} coeff(k) sin(k xi), so coeff(k) is always the
// (1/pi) * integral against cos(k xi) / sin(k xi).
//
// The closed forms are rational multiples of sin(pi k / p); wavenumbers
// k = h*p hit a removable singularity and take their tabulated limit
// values. Resonant values are special-cased exactly, never computed as a
// floating-point 0/0 limit.

#include <complex>
#include <vector>

#include "npelab/heat1d/trigpoly.hpp"

namespace npelab::heat1d {

struct TailMajorant {
    double C = 0.0;  // |coeff(k)| <= C * k^-q for all k >= k_min
    double q = 0.0;
    int k_min = 0;
    // Integral bound on sum_{k>K} |coeff(k)|; +inf when q <= 1.
    double sum_above(int K) const;
};

class WindowedSeries {
  public:
    // K >= 3*p required (the series bounds need three resonance bands).
    WindowedSeries(const TrigPoly& f, int p, int K);

    int p() const { return p_; }
    int K() const { return K_; }
    Parity parity() const { return parity_; }
    const TrigPoly& source() const { return source_; }

    // Basis coefficient; evaluated by closed form for any k >= 0 (also
    // beyond K).
    double coeff(int k) const;

    // Amplitude of the k-th basis function: coeff(0)/2 for the cosine
    // constant, coeff(k) otherwise.
    double amp(int k) const { return k == 0 ? 0.5 * coeff(0) : coeff(k); }

    // Complex exponential coefficient g_hat(k), k in Z.
    std::complex<double> complex_coeff(int k) const;

    const TailMajorant& tail() const { return tail_; }
    // sum_{k=1..K} |coeff(k)|  (plus |coeff(0)/2| for cosine series)
    double l1_partial() const { return l1_partial_; }
    // rigorous bound on sum_{k>=0} |amp(k)|
    double l1_bound() const;
    // rigorous bound on sup_k |amp(k)|
    double sup_bound() const;

    // Value of the windowed function chi(x)*f(p x) (for oracles/plots).
    double windowed_value(double x) const;

  private:
    TrigPoly source_;
    int p_, K_;
    Parity parity_;
    std::vector<double> table_;  // coeff(0..K)
    TailMajorant tail_;
    double l1_partial_ = 0.0;
    double sup_partial_ = 0.0;
};

// The defining integral evaluated by adaptive quadrature; the oracle every
// closed form is tested against.
double windowed_coeff_quadrature(const TrigPoly& f, int p, int k, Parity basis,
                                 double abs_tol = 1e-13);

}  // namespace npelab::heat1d
