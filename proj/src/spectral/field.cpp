#include "npelab/spectral/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace npelab::spectral {

namespace {

constexpr double kTwoPiCubed = 248.05021344239853;  // (2 pi)^3

double norm3(const Vec3c& c) {
    return std::sqrt(std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]));
}

Vec3c conj3(const Vec3c& c) {
    return {std::conj(c[0]), std::conj(c[1]), std::conj(c[2])};
}

double div_residual(const Key3& k, const Vec3c& c) {
    const cplx d = double(k[0]) * c[0] + double(k[1]) * c[1] + double(k[2]) * c[2];
    return std::abs(d);
}

void sort_modes(std::vector<Mode>& m) {
    std::sort(m.begin(), m.end(), [](const Mode& a, const Mode& b) {
        return pack_key(a.k) < pack_key(b.k);
    });
}

}  // namespace

SpectralField3 SpectralField3::make(const std::vector<Mode>& entries, int N,
                                    double eps_div) {
    SpectralField3 f;
    f.lattice_.N = N;
    f.eps_div_ = eps_div;

    std::unordered_map<std::int64_t, Mode> acc;
    acc.reserve(entries.size() * 2);
    auto put = [&](const Key3& k, const Vec3c& c) {
        const auto key = pack_key(k);
        auto it = acc.find(key);
        if (it == acc.end()) {
            acc.emplace(key, Mode{k, c});
            return;
        }
        double diff = 0.0, scale = 0.0;
        for (int m = 0; m < 3; ++m) {
            diff += std::abs(it->second.c[m] - c[m]);
            scale += std::abs(it->second.c[m]) + std::abs(c[m]);
        }
        if (diff > 1e-12 * std::max(1.0, scale))
            throw std::invalid_argument("make_field: conflicting duplicate mode");
    };

    for (const auto& e : entries) {
        const auto& k = e.k;
        if (std::max({std::abs(k[0]), std::abs(k[1]), std::abs(k[2])}) > N)
            throw std::invalid_argument("make_field: mode outside lattice");
        if (k == Key3{0, 0, 0}) {
            if (norm3(e.c) > 0.0) f.zero_mean_repaired_ = true;
            continue;
        }
        const double nrm = norm3(e.c);
        if (nrm > 0.0 && div_residual(k, e.c) > eps_div * nrm)
            throw std::invalid_argument("make_field: transversality violated");
        put(k, e.c);
        put({-k[0], -k[1], -k[2]}, conj3(e.c));
    }

    f.modes_.reserve(acc.size());
    for (auto& [key, mode] : acc) {
        (void)key;
        if (norm3(mode.c) > 0.0) f.modes_.push_back(mode);
    }
    sort_modes(f.modes_);
    return f;
}

SpectralField3 SpectralField3::from_symmetric_modes(std::vector<Mode> modes, int N,
                                                    double eps_div) {
    SpectralField3 f;
    f.lattice_.N = N;
    f.eps_div_ = eps_div;
    f.modes_ = std::move(modes);
    sort_modes(f.modes_);
    return f;
}

std::optional<Vec3c> SpectralField3::coeff(const Key3& k) const {
    const auto key = pack_key(k);
    auto it = std::lower_bound(modes_.begin(), modes_.end(), key,
                               [](const Mode& m, std::int64_t v) { return pack_key(m.k) < v; });
    if (it != modes_.end() && pack_key(it->k) == key) return it->c;
    return std::nullopt;
}

double SpectralField3::l2_norm_sq() const {
    double acc = 0.0;
    for (const auto& m : modes_)
        acc += std::norm(m.c[0]) + std::norm(m.c[1]) + std::norm(m.c[2]);
    return kTwoPiCubed * acc;
}

double SpectralField3::l2_norm() const { return std::sqrt(l2_norm_sq()); }

double SpectralField3::transversality_residual() const {
    double worst = 0.0;
    for (const auto& m : modes_) {
        const double nrm = norm3(m.c);
        if (nrm > 0.0) worst = std::max(worst, div_residual(m.k, m.c) / nrm);
    }
    return worst;
}

int SpectralField3::max_abs_component() const {
    int mx = 0;
    for (const auto& m : modes_)
        mx = std::max({mx, std::abs(m.k[0]), std::abs(m.k[1]), std::abs(m.k[2])});
    return mx;
}

double inner(const SpectralField3& a, const SpectralField3& b) {
    const SpectralField3& small = a.size() <= b.size() ? a : b;
    const SpectralField3& big = a.size() <= b.size() ? b : a;
    double acc = 0.0;
    for (const auto& m : small.modes()) {
        const auto other = big.coeff(m.k);
        if (!other) continue;
        for (int i = 0; i < 3; ++i)
            acc += (m.c[i] * std::conj((*other)[i])).real();
    }
    return kTwoPiCubed * acc;
}

}  // namespace npelab::spectral
