#pragma once
// 1D periodic heat solutions with window-localized trig-polynomial data,
// S(t,x) = sum_k amp(k) basis(kx) exp(-k^2 t), plus the triple-product
// integrals the J-functionals are made of.

#include <functional>
#include <vector>

#include "npelab/heat1d/windowed.hpp"

namespace npelab::heat1d {

class Heat1DSolution {
  public:
    explicit Heat1DSolution(WindowedSeries series) : s_(std::move(series)) {}

    const WindowedSeries& series() const { return s_; }
    int p() const { return s_.p(); }

    // Time-damped basis amplitude amp(k) * exp(-k^2 t).
    double amp(int k, double t) const;

    // Series evaluation on a grid (kernel-dispatched recurrence).
    std::vector<double> eval(double t, const std::vector<double>& xs) const;
    double eval_one(double t, double x) const;

    // Green-function convolution oracle: wrapped Gaussian against the initial
    // datum, adaptive quadrature. Requires t > 0.
    double green_eval(double t, double x, int images = 6,
                      double abs_tol = 1e-12) const;

    // integral over [-pi, pi]; constant in t.
    double mass(double t) const;

  private:
    WindowedSeries s_;
};

// Exact integral of S1*S2*S3 over [-pi, pi] by resonance bookkeeping
// (product-to-sum identities), summing the two free indices over
// [0..K1] x [0..K2] with the third index determined. `tail` receives a
// rigorous bound on the discarded part at this t (requires the free slots'
// coefficient tails to be summable).
double triple_product_series(const Heat1DSolution& s1, const Heat1DSolution& s2,
                             const Heat1DSolution& s3, double t,
                             double* tail = nullptr);

// Same integral by trapezoid quadrature on a uniform grid fine enough to be
// exact for the truncated series (n > K1+K2+K3 points).
double triple_product_quadrature(const Heat1DSolution& s1, const Heat1DSolution& s2,
                                 const Heat1DSolution& s3, double t);

// Spec'd operation: returns the series value and asserts the two routes
// agree to 1e-9 absolute.
double triple_product_integral(const Heat1DSolution& s1, const Heat1DSolution& s2,
                               const Heat1DSolution& s3, double t);

struct DerivativeIdentityReport {
    bool dx_hypothesis_ok;    // phi(+-pi) = 0
    bool dt_hypothesis_ok;    // additionally phi'(+-pi) = 0
    double dx_residual;       // max | d/dx S(t,x;chi phi(p.)) - p S(t,x;chi phi'(p.)) |
    double dt_residual;       // max | d/dt S - p^2 S(t,x;chi phi''(p.)) |
};

// Checks the heat-derivative exchange identities on a grid at time t.
DerivativeIdentityReport derivative_identities(const TrigPoly& f, int p, double t,
                                               int K = 256, int grid_n = 512);

}  // namespace npelab::heat1d
