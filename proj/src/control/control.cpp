#include "npelab/control/control.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "npelab/heat1d/windowed.hpp"
#include "npelab/spectral/grid_fft.hpp"

namespace npelab::control {

using heat1d::TrigPoly;
using heat1d::WindowedSeries;
using spectral::cplx;
using spectral::Key3;
using spectral::Mode;
using spectral::SpectralField3;
using spectral::Vec3c;

namespace {
namespace fs = heat1d::factors;
constexpr double kPi = std::numbers::pi;
}  // namespace

void ControlParams::validate() const {
    if (p < 2) throw std::invalid_argument("ControlParams: p >= 2 required");
    if (a1 == 0.0 && a2 == 0.0 && a3 == 0.0)
        throw std::invalid_argument("ControlParams: amplitudes all zero");
    if (N < 3 * p)
        throw std::invalid_argument("ControlParams: N >= 3p required to resolve resonances");
}

TermList w_terms(const ControlParams& c) {
    return {
        {c.a3, {fs::sin_half_sin2(), fs::sin_half_sin2(), fs::one_plus_cos()}},
        {c.a2, {fs::sin_half_sin2(), fs::one_plus_cos(), fs::sin_half_sin2()}},
        {c.a1, {fs::one_plus_cos(), fs::sin_half_sin2(), fs::sin_half_sin2()}},
    };
}

TermList dw_terms(int axis, const ControlParams& c) {
    // Per-factor derivative: g -> g' = cos + cos2, (1+cos) -> -sin.
    TermList out;
    for (const auto& t : w_terms(c)) {
        RankOneTerm d = t;
        const auto& f = t.f[std::size_t(axis - 1)];
        d.f[std::size_t(axis - 1)] = f.pure_sin() ? fs::cos_plus_cos2()
                                                  : fs::sin_only() * -1.0;
        out.push_back(d);
    }
    return out;
}

TermList d2w_terms(int i, int j, const ControlParams& c) {
    if (i > j) std::swap(i, j);
    auto d1 = [](const TrigPoly& f) {
        return f.pure_sin() ? fs::cos_plus_cos2() : fs::sin_only() * -1.0;
    };
    auto d2 = [](const TrigPoly& f) {
        return f.pure_sin() ? fs::sin_two_sin2() * -1.0 : fs::cos_only() * -1.0;
    };
    TermList out;
    for (const auto& t : w_terms(c)) {
        RankOneTerm d = t;
        if (i == j) {
            d.f[std::size_t(i - 1)] = d2(t.f[std::size_t(i - 1)]);
        } else {
            d.f[std::size_t(i - 1)] = d1(t.f[std::size_t(i - 1)]);
            d.f[std::size_t(j - 1)] = d1(t.f[std::size_t(j - 1)]);
        }
        out.push_back(d);
    }
    return out;
}

double eval_terms(const TermList& terms, const std::array<double, 3>& x) {
    double acc = 0.0;
    for (const auto& t : terms)
        acc += t.coef * t.f[0].eval(x[0]) * t.f[1].eval(x[1]) * t.f[2].eval(x[2]);
    return acc;
}

namespace {

// Accumulates coef * g1(k1) g2(k2) g3(k3) over the truncation cube into a
// component of the mode array.
void accumulate_tensor(std::vector<Vec3c>& cube, int N, int component,
                       const RankOneTerm& term, int p, double scale) {
    const int K = N;
    std::array<WindowedSeries, 3> ws{WindowedSeries(term.f[0], p, std::max(K, 3 * p)),
                                     WindowedSeries(term.f[1], p, std::max(K, 3 * p)),
                                     WindowedSeries(term.f[2], p, std::max(K, 3 * p))};
    const int w = 2 * N + 1;
    std::vector<cplx> g1(std::size_t(w)), g2(std::size_t(w)), g3(std::size_t(w));
    for (int k = -N; k <= N; ++k) {
        g1[std::size_t(k + N)] = ws[0].complex_coeff(k);
        g2[std::size_t(k + N)] = ws[1].complex_coeff(k);
        g3[std::size_t(k + N)] = ws[2].complex_coeff(k);
    }
    const double cf = term.coef * scale;
    for (int k1 = -N; k1 <= N; ++k1) {
        const cplx a = g1[std::size_t(k1 + N)];
        if (a == cplx(0.0, 0.0)) continue;
        for (int k2 = -N; k2 <= N; ++k2) {
            const cplx ab = a * g2[std::size_t(k2 + N)];
            if (ab == cplx(0.0, 0.0)) continue;
            const std::size_t base =
                (std::size_t(k1 + N) * w + std::size_t(k2 + N)) * w;
            for (int k3 = -N; k3 <= N; ++k3) {
                const cplx v = ab * g3[std::size_t(k3 + N)];
                if (v != cplx(0.0, 0.0))
                    cube[base + std::size_t(k3 + N)][std::size_t(component)] += cf * v;
            }
        }
    }
}

SpectralField3 field_from_cube(std::vector<Vec3c>&& cube, int N, double eps_div) {
    const int w = 2 * N + 1;
    std::vector<Mode> modes;
    for (int k1 = -N; k1 <= N; ++k1)
        for (int k2 = -N; k2 <= N; ++k2)
            for (int k3 = -N; k3 <= N; ++k3) {
                if (k1 == 0 && k2 == 0 && k3 == 0) continue;
                const Vec3c& c =
                    cube[(std::size_t(k1 + N) * w + std::size_t(k2 + N)) * w +
                         std::size_t(k3 + N)];
                if (c[0] != cplx(0, 0) || c[1] != cplx(0, 0) || c[2] != cplx(0, 0))
                    modes.push_back({{k1, k2, k3}, c});
            }
    return SpectralField3::from_symmetric_modes(std::move(modes), N, eps_div);
}

}  // namespace

SpectralField3 tensor_field(const TermList& terms, int component, int p, int N,
                            double scale, double eps_div) {
    const int w = 2 * N + 1;
    std::vector<Vec3c> cube(std::size_t(w) * w * w, Vec3c{});
    for (const auto& t : terms) accumulate_tensor(cube, N, component, t, p, scale);
    return field_from_cube(std::move(cube), N, eps_div);
}

SpectralField3 build_control(const ControlParams& c) {
    c.validate();
    const double p2 = double(c.p) * c.p;
    const int w = 2 * c.N + 1;
    std::vector<Vec3c> cube(std::size_t(w) * w * w, Vec3c{});
    // u = p^2 chi^3 ( -(d22 + d33) w, d12 w, d13 w )(p x)
    for (const auto& t : d2w_terms(2, 2, c)) accumulate_tensor(cube, c.N, 0, t, c.p, -p2);
    for (const auto& t : d2w_terms(3, 3, c)) accumulate_tensor(cube, c.N, 0, t, c.p, -p2);
    for (const auto& t : d2w_terms(1, 2, c)) accumulate_tensor(cube, c.N, 1, t, c.p, p2);
    for (const auto& t : d2w_terms(1, 3, c)) accumulate_tensor(cube, c.N, 2, t, c.p, p2);
    return field_from_cube(std::move(cube), c.N, c.eps_div);
}

SpectralField3 build_curl_inv_control(const ControlParams& c) {
    c.validate();
    const double p1 = double(c.p);
    const int w = 2 * c.N + 1;
    std::vector<Vec3c> cube(std::size_t(w) * w * w, Vec3c{});
    for (const auto& t : dw_terms(3, c)) accumulate_tensor(cube, c.N, 1, t, c.p, p1);
    for (const auto& t : dw_terms(2, c)) accumulate_tensor(cube, c.N, 2, t, c.p, -p1);
    return field_from_cube(std::move(cube), c.N, c.eps_div);
}

SupportReport support_check(const spectral::SpectralField3& u, int p, int n) {
    if (n < 8 * p) throw std::invalid_argument("support_check: n >= 8p required");
    SupportReport rep{0.0, 0.0, n};
    std::array<std::vector<double>, 3> g;
    for (int comp = 0; comp < 3; ++comp) g[std::size_t(comp)] = grid_from_field(u, comp, n);
    const double rho = kPi / p;
    for (int i = 0; i < n; ++i) {
        double xi = 2.0 * kPi * i / n;
        if (xi > kPi) xi -= 2.0 * kPi;
        for (int j = 0; j < n; ++j) {
            double xj = 2.0 * kPi * j / n;
            if (xj > kPi) xj -= 2.0 * kPi;
            for (int k = 0; k < n; ++k) {
                double xk = 2.0 * kPi * k / n;
                if (xk > kPi) xk -= 2.0 * kPi;
                const std::size_t idx = (std::size_t(i) * n + std::size_t(j)) * n + std::size_t(k);
                const double mag = std::sqrt(g[0][idx] * g[0][idx] + g[1][idx] * g[1][idx] +
                                             g[2][idx] * g[2][idx]);
                const bool inside = std::abs(xi) <= rho && std::abs(xj) <= rho &&
                                    std::abs(xk) <= rho;
                if (inside)
                    rep.inside_max = std::max(rep.inside_max, mag);
                else
                    rep.outside_max = std::max(rep.outside_max, mag);
            }
        }
    }
    return rep;
}

}  // namespace npelab::control
