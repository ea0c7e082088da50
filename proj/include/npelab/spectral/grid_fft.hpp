#pragma once
// FFTW-backed transforms between sparse spectral coefficients and dense
// n^3 physical grids. Plans are cached per grid size; FFTW's planner is
// guarded (it is not thread-safe), execution is re-entrant.

#include <complex>
#include <functional>
#include <vector>

#include "npelab/spectral/field.hpp"

namespace npelab::spectral {

// Smallest 2^a 3^b 5^c 7^d >= n (FFT-friendly size).
int good_fft_size(int n);

// Dense real grid values f(x_j), x_j = 2 pi j / n per axis, from Hermitian
// coefficients. `emit` is called once and must deposit every coefficient
// with k3 >= 0 via the provided setter (the k3 < 0 half is implied).
std::vector<double> grid_from_coeffs(
    int n, const std::function<void(const std::function<void(const Key3&, const cplx&)>&)>& emit);

// Convenience: grid of one field component (0..2).
std::vector<double> grid_from_field(const SpectralField3& f, int component, int n);

// Forward transform: coefficient c(k) = n^-3 sum_j f(x_j) exp(-i k x_j),
// returned for all |k_i| <= kmax. Layout: vector indexed by
// ((k1+kmax)*(2*kmax+1) + (k2+kmax))*(2*kmax+1) + (k3+kmax).
std::vector<cplx> coeffs_from_grid(const std::vector<double>& grid, int n, int kmax);

}  // namespace npelab::spectral
