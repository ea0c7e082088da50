#include "npelab/spectral/grid_fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace npelab::spectral {

namespace {

std::mutex g_planner_mutex;

struct PlanPair {
    fftw_plan c2r = nullptr;
    fftw_plan r2c = nullptr;
    int n = 0;
};

// One cached plan pair per grid size; buffers are allocated per call and the
// plans are created with FFTW_ESTIMATE so they work on any aligned arrays
// via the new-array execute interface.
PlanPair& plans_for(int n) {
    static std::unordered_map<int, PlanPair> cache;
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    PlanPair p;
    p.n = n;
    const std::size_t nc = std::size_t(n) * n * (n / 2 + 1);
    const std::size_t nr = std::size_t(n) * n * n;
    fftw_complex* cbuf = fftw_alloc_complex(nc);
    double* rbuf = fftw_alloc_real(nr);
    p.c2r = fftw_plan_dft_c2r_3d(n, n, n, cbuf, rbuf, FFTW_ESTIMATE);
    p.r2c = fftw_plan_dft_r2c_3d(n, n, n, rbuf, cbuf, FFTW_ESTIMATE);
    fftw_free(cbuf);
    fftw_free(rbuf);
    return cache.emplace(n, p).first->second;
}

}  // namespace

int good_fft_size(int n) {
    auto smooth = [](int v) {
        for (int f : {2, 3, 5, 7})
            while (v % f == 0) v /= f;
        return v == 1;
    };
    while (!smooth(n)) ++n;
    return n;
}

std::vector<double> grid_from_coeffs(
    int n, const std::function<void(const std::function<void(const Key3&, const cplx&)>&)>& emit) {
    const std::size_t nc = std::size_t(n) * n * (n / 2 + 1);
    const std::size_t nr = std::size_t(n) * n * n;
    fftw_complex* cbuf = fftw_alloc_complex(nc);
    double* rbuf = fftw_alloc_real(nr);
    std::memset(cbuf, 0, nc * sizeof(fftw_complex));

    const int half = n / 2 + 1;
    auto set = [&](const Key3& k, const cplx& v) {
        if (k[2] < 0) return;  // implied by Hermitian symmetry
        const int i1 = ((k[0] % n) + n) % n;
        const int i2 = ((k[1] % n) + n) % n;
        if (k[2] >= half) throw std::runtime_error("grid_from_coeffs: grid too coarse");
        const std::size_t idx = (std::size_t(i1) * n + i2) * half + k[2];
        cbuf[idx][0] += v.real();
        cbuf[idx][1] += v.imag();
    };
    emit(set);

    fftw_execute_dft_c2r(plans_for(n).c2r, cbuf, rbuf);
    std::vector<double> out(rbuf, rbuf + nr);
    fftw_free(cbuf);
    fftw_free(rbuf);
    return out;
}

std::vector<double> grid_from_field(const SpectralField3& f, int component, int n) {
    return grid_from_coeffs(n, [&](const std::function<void(const Key3&, const cplx&)>& set) {
        for (const auto& m : f.modes()) set(m.k, m.c[std::size_t(component)]);
    });
}

std::vector<cplx> coeffs_from_grid(const std::vector<double>& grid, int n, int kmax) {
    if (grid.size() != std::size_t(n) * n * n)
        throw std::invalid_argument("coeffs_from_grid: bad grid size");
    if (2 * kmax >= n)
        throw std::invalid_argument("coeffs_from_grid: kmax too large for grid");
    const std::size_t nc = std::size_t(n) * n * (n / 2 + 1);
    fftw_complex* cbuf = fftw_alloc_complex(nc);
    double* rbuf = fftw_alloc_real(grid.size());
    std::memcpy(rbuf, grid.data(), grid.size() * sizeof(double));
    fftw_execute_dft_r2c(plans_for(n).r2c, rbuf, cbuf);

    const int half = n / 2 + 1;
    const int w = 2 * kmax + 1;
    std::vector<cplx> out(std::size_t(w) * w * w);
    const double scale = 1.0 / (double(n) * n * n);
    for (int k1 = -kmax; k1 <= kmax; ++k1) {
        for (int k2 = -kmax; k2 <= kmax; ++k2) {
            for (int k3 = -kmax; k3 <= kmax; ++k3) {
                cplx v;
                if (k3 >= 0) {
                    const int i1 = ((k1 % n) + n) % n;
                    const int i2 = ((k2 % n) + n) % n;
                    const std::size_t idx = (std::size_t(i1) * n + i2) * half + k3;
                    v = cplx(cbuf[idx][0], cbuf[idx][1]) * scale;
                } else {
                    const int i1 = (((-k1) % n) + n) % n;
                    const int i2 = (((-k2) % n) + n) % n;
                    const std::size_t idx = (std::size_t(i1) * n + i2) * half + (-k3);
                    v = std::conj(cplx(cbuf[idx][0], cbuf[idx][1])) * scale;
                }
                out[(std::size_t(k1 + kmax) * w + std::size_t(k2 + kmax)) * w +
                    std::size_t(k3 + kmax)] = v;
            }
        }
    }
    fftw_free(cbuf);
    fftw_free(rbuf);
    return out;
}

}  // namespace npelab::spectral
