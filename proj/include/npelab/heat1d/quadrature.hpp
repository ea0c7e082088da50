#pragma once
// Adaptive Simpson quadrature. Used as the independent oracle for every
// closed-form Fourier coefficient and for Green-function convolutions.

#include <functional>

namespace npelab::heat1d {

struct QuadratureResult {
    double value;
    double err_estimate;
    long evals;
};

// Integrates f over [a, b] to absolute tolerance abs_tol.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f,
                                  double a, double b, double abs_tol,
                                  int max_depth = 40);

}  // namespace npelab::heat1d
