#pragma once
// Diagonal Fourier-space operators: curl, its inverse, the heat propagator,
// the Leray projection and coordinate shifts.

#include "npelab/spectral/field.hpp"

namespace npelab::spectral {

// coefficient at k: i k x v_hat(k)
SpectralField3 curl(const SpectralField3& v);

// coefficient at k: i (k x w_hat(k)) / |k|^2; inverse of curl on transverse
// zero-mean fields.
SpectralField3 curl_inv(const SpectralField3& w);

// coefficient at k: v_hat(k) * exp(-|k|^2 t)
SpectralField3 heat_evolve(const SpectralField3& v, double t);

// coefficient at k: v_hat(k) - k (k . v_hat) / |k|^2; raw (possibly
// non-transverse) coefficients in, transverse field out.
SpectralField3 leray_project(const std::vector<Mode>& raw, int N, double eps_div = 1e-10);

// u_hat(k) -> u_hat(k) * exp(-i k . shift)
SpectralField3 coordinate_shift(const SpectralField3& v, const std::array<double, 3>& shift);

// Scales every coefficient.
SpectralField3 scale(const SpectralField3& v, double s);

// Mode-wise sum on a common lattice.
SpectralField3 add(const SpectralField3& a, const SpectralField3& b);

}  // namespace npelab::spectral
