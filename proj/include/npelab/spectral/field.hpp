#pragma once
// Truncated Fourier representation of real, zero-mean, divergence-free
// vector fields on the torus (R/2piZ)^3. Coefficients are stored sparsely,
// one entry per mode, with both k and -k present so that reality symmetry
// u_hat(-k) = conj(u_hat(k)) is explicit.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace npelab::spectral {

using cplx = std::complex<double>;
using Vec3c = std::array<cplx, 3>;
using Key3 = std::array<int, 3>;

struct Lattice3 {
    int N = 0;  // modes with max-norm |k|_inf <= N
};

struct Mode {
    Key3 k;
    Vec3c c;
};

inline std::int64_t pack_key(const Key3& k) {
    // fits N up to ~1e6 per axis
    return (std::int64_t(k[0] + (1 << 20)) << 42) |
           (std::int64_t(k[1] + (1 << 20)) << 21) |
           std::int64_t(k[2] + (1 << 20));
}

class SpectralField3 {
  public:
    SpectralField3() = default;

    // Builds a field from caller-supplied entries. For each entry at k the
    // conjugate is filled at -k. Entries at k = 0 are zeroed (and flagged);
    // duplicate modes with conflicting values and transversality violations
    // beyond eps_div are rejected.
    static SpectralField3 make(const std::vector<Mode>& entries, int N,
                               double eps_div = 1e-10);

    // Internal fast path: modes must already be symmetric, zero-mean and
    // transverse; no checks beyond debug asserts.
    static SpectralField3 from_symmetric_modes(std::vector<Mode> modes, int N,
                                               double eps_div);

    const Lattice3& lattice() const { return lattice_; }
    double eps_div() const { return eps_div_; }
    bool zero_mean_repaired() const { return zero_mean_repaired_; }

    const std::vector<Mode>& modes() const { return modes_; }
    std::size_t size() const { return modes_.size(); }
    bool empty() const { return modes_.empty(); }

    std::optional<Vec3c> coeff(const Key3& k) const;

    // Parseval: ||v||^2 = (2 pi)^3 sum_k |v_hat(k)|^2.
    double l2_norm_sq() const;
    double l2_norm() const;

    // max_k |k . u_hat(k)| / ||u_hat(k)||  over stored modes
    double transversality_residual() const;

    // Largest |k|_inf actually present.
    int max_abs_component() const;

  private:
    Lattice3 lattice_;
    double eps_div_ = 1e-10;
    bool zero_mean_repaired_ = false;
    std::vector<Mode> modes_;  // sorted by packed key
};

double inner(const SpectralField3& a, const SpectralField3& b);

}  // namespace npelab::spectral
