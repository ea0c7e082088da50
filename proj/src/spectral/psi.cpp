#include "npelab/spectral/psi.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "npelab/kernels/kernels.hpp"
#include "npelab/spectral/grid_fft.hpp"

namespace npelab::spectral {

namespace {

constexpr double kTwoPiCubed = 248.05021344239853;

double ksq(const Key3& k) {
    return double(k[0]) * k[0] + double(k[1]) * k[1] + double(k[2]) * k[2];
}

Vec3c curl_inv_coeff(const Key3& k, const Vec3c& c) {
    const cplx i(0.0, 1.0);
    const double k2 = ksq(k);
    return {i * (double(k[1]) * c[2] - double(k[2]) * c[1]) / k2,
            i * (double(k[2]) * c[0] - double(k[0]) * c[2]) / k2,
            i * (double(k[0]) * c[1] - double(k[1]) * c[0]) / k2};
}

double psi_direct(const SpectralField3& y1, const SpectralField3& y2,
                  const SpectralField3& y3) {
    std::unordered_map<std::int64_t, const Mode*> lookup;
    lookup.reserve(y3.size());
    for (const auto& m : y3.modes()) lookup.emplace(pack_key(m.k), &m);

    cplx acc(0.0, 0.0);
    for (const auto& m1 : y1.modes()) {
        for (const auto& m2 : y2.modes()) {
            const Key3 q{-m1.k[0] - m2.k[0], -m1.k[1] - m2.k[1], -m1.k[2] - m2.k[2]};
            auto it = lookup.find(pack_key(q));
            if (it == lookup.end()) continue;
            const Vec3c v2 = curl_inv_coeff(m2.k, m2.c);
            const cplx adv = cplx(0.0, 1.0) *
                             (m1.c[0] * double(m2.k[0]) + m1.c[1] * double(m2.k[1]) +
                              m1.c[2] * double(m2.k[2]));
            const Vec3c& c3 = it->second->c;
            acc += adv * (v2[0] * c3[0] + v2[1] * c3[1] + v2[2] * c3[2]);
        }
    }
    return kTwoPiCubed * acc.real();
}

}  // namespace

int psi_grid_size(int N) { return good_fft_size(3 * N + 1); }

FieldGrids make_field_grids(const SpectralField3& f, int n) {
    FieldGrids g;
    g.n = n;
    for (int comp = 0; comp < 3; ++comp)
        g.y[std::size_t(comp)] = grid_from_field(f, comp, n);
    for (int j = 0; j < 3; ++j) {
        for (int m = 0; m < 3; ++m) {
            g.dv[std::size_t(j)][std::size_t(m)] =
                grid_from_coeffs(n, [&](const std::function<void(const Key3&, const cplx&)>& set) {
                    for (const auto& mode : f.modes()) {
                        const Vec3c v = curl_inv_coeff(mode.k, mode.c);
                        set(mode.k, cplx(0.0, 1.0) * double(mode.k[std::size_t(j)]) *
                                        v[std::size_t(m)]);
                    }
                });
        }
    }
    return g;
}

double psi_from_grids(const FieldGrids& a, const FieldGrids& b, const FieldGrids& c) {
    if (a.n != b.n || a.n != c.n) throw std::invalid_argument("psi_from_grids: grid mismatch");
    const std::size_t n3 = a.y[0].size();
    double acc = 0.0;
    for (int j = 0; j < 3; ++j)
        for (int m = 0; m < 3; ++m)
            acc += kernels::ops().dot3(a.y[std::size_t(j)].data(),
                                       b.dv[std::size_t(j)][std::size_t(m)].data(),
                                       c.y[std::size_t(m)].data(), n3);
    const double h3 = kTwoPiCubed / (double(a.n) * a.n * a.n);
    return acc * h3;
}

double psi_trilinear(const SpectralField3& y1, const SpectralField3& y2,
                     const SpectralField3& y3, PsiMethod method) {
    if (y1.lattice().N != y2.lattice().N || y1.lattice().N != y3.lattice().N)
        throw std::invalid_argument("psi_trilinear: lattice mismatch");
    if (method == PsiMethod::DirectSum) return psi_direct(y1, y2, y3);
    const int n = psi_grid_size(y1.lattice().N);
    const FieldGrids a = make_field_grids(y1, n);
    const FieldGrids b = (&y2 == &y1) ? FieldGrids{} : make_field_grids(y2, n);
    const FieldGrids c = (&y3 == &y1 || &y3 == &y2) ? FieldGrids{} : make_field_grids(y3, n);
    const FieldGrids& rb = (&y2 == &y1) ? a : b;
    const FieldGrids& rc = (&y3 == &y1) ? a : ((&y3 == &y2) ? rb : c);
    return psi_from_grids(a, rb, rc);
}

double phi_zero_threshold() { return 1e-14 * kTwoPiCubed; }

double phi_functional(const SpectralField3& w) {
    const double l2sq = w.l2_norm_sq();
    if (l2sq <= phi_zero_threshold()) return 0.0;
    return psi(w) / l2sq;
}

}  // namespace npelab::spectral
