#include "npelab/spectral/ops.hpp"

#include <cmath>
#include <unordered_map>

namespace npelab::spectral {

namespace {

Vec3c cross_ik(const Key3& k, const Vec3c& c) {
    // i * (k x c)
    const cplx i(0.0, 1.0);
    return {i * (double(k[1]) * c[2] - double(k[2]) * c[1]),
            i * (double(k[2]) * c[0] - double(k[0]) * c[2]),
            i * (double(k[0]) * c[1] - double(k[1]) * c[0])};
}

double ksq(const Key3& k) {
    return double(k[0]) * k[0] + double(k[1]) * k[1] + double(k[2]) * k[2];
}

}  // namespace

SpectralField3 curl(const SpectralField3& v) {
    std::vector<Mode> out;
    out.reserve(v.size());
    for (const auto& m : v.modes()) out.push_back({m.k, cross_ik(m.k, m.c)});
    return SpectralField3::from_symmetric_modes(std::move(out), v.lattice().N, v.eps_div());
}

SpectralField3 curl_inv(const SpectralField3& w) {
    std::vector<Mode> out;
    out.reserve(w.size());
    for (const auto& m : w.modes()) {
        const double k2 = ksq(m.k);
        Vec3c c = cross_ik(m.k, m.c);
        for (auto& x : c) x /= k2;
        out.push_back({m.k, c});
    }
    return SpectralField3::from_symmetric_modes(std::move(out), w.lattice().N, w.eps_div());
}

SpectralField3 heat_evolve(const SpectralField3& v, double t) {
    std::vector<Mode> out;
    out.reserve(v.size());
    for (const auto& m : v.modes()) {
        const double damp = std::exp(-ksq(m.k) * t);
        out.push_back({m.k, {m.c[0] * damp, m.c[1] * damp, m.c[2] * damp}});
    }
    return SpectralField3::from_symmetric_modes(std::move(out), v.lattice().N, v.eps_div());
}

SpectralField3 leray_project(const std::vector<Mode>& raw, int N, double eps_div) {
    std::vector<Mode> projected;
    projected.reserve(raw.size());
    for (const auto& m : raw) {
        if (m.k == Key3{0, 0, 0}) continue;
        const double k2 = ksq(m.k);
        const cplx kd = (double(m.k[0]) * m.c[0] + double(m.k[1]) * m.c[1] +
                         double(m.k[2]) * m.c[2]) /
                        k2;
        Vec3c c = m.c;
        for (int i = 0; i < 3; ++i) c[i] -= double(m.k[i]) * kd;
        projected.push_back({m.k, c});
    }
    return SpectralField3::make(projected, N, eps_div);
}

SpectralField3 coordinate_shift(const SpectralField3& v, const std::array<double, 3>& shift) {
    std::vector<Mode> out;
    out.reserve(v.size());
    for (const auto& m : v.modes()) {
        const double phase = -(m.k[0] * shift[0] + m.k[1] * shift[1] + m.k[2] * shift[2]);
        const cplx ph(std::cos(phase), std::sin(phase));
        out.push_back({m.k, {m.c[0] * ph, m.c[1] * ph, m.c[2] * ph}});
    }
    return SpectralField3::from_symmetric_modes(std::move(out), v.lattice().N, v.eps_div());
}

SpectralField3 scale(const SpectralField3& v, double s) {
    std::vector<Mode> out;
    out.reserve(v.size());
    for (const auto& m : v.modes())
        out.push_back({m.k, {m.c[0] * s, m.c[1] * s, m.c[2] * s}});
    return SpectralField3::from_symmetric_modes(std::move(out), v.lattice().N, v.eps_div());
}

SpectralField3 add(const SpectralField3& a, const SpectralField3& b) {
    std::unordered_map<std::int64_t, Mode> acc;
    acc.reserve(a.size() + b.size());
    for (const auto& m : a.modes()) acc.emplace(pack_key(m.k), m);
    for (const auto& m : b.modes()) {
        auto [it, inserted] = acc.emplace(pack_key(m.k), m);
        if (!inserted)
            for (int i = 0; i < 3; ++i) it->second.c[i] += m.c[i];
    }
    std::vector<Mode> out;
    out.reserve(acc.size());
    for (auto& [key, mode] : acc) {
        (void)key;
        out.push_back(mode);
    }
    const int N = std::max(a.lattice().N, b.lattice().N);
    return SpectralField3::from_symmetric_modes(std::move(out), N,
                                                std::max(a.eps_div(), b.eps_div()));
}

}  // namespace npelab::spectral
