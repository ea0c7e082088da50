#include "npelab/heat1d/heat_solution.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "npelab/heat1d/quadrature.hpp"
#include "npelab/kernels/kernels.hpp"

namespace npelab::heat1d {

namespace {
constexpr double kPi = std::numbers::pi;
}

double Heat1DSolution::amp(int k, double t) const {
    return s_.amp(k) * std::exp(-double(k) * k * t);
}

std::vector<double> Heat1DSolution::eval(double t, const std::vector<double>& xs) const {
    const int K = s_.K();
    std::vector<double> ca(std::size_t(K) + 1, 0.0), sa(std::size_t(K) + 1, 0.0);
    for (int k = 0; k <= K; ++k) {
        const double a = amp(k, t);
        if (s_.parity() == Parity::Cos)
            ca[std::size_t(k)] = a;
        else
            sa[std::size_t(k)] = a;
    }
    std::vector<double> out(xs.size(), 0.0);
    kernels::ops().trig_eval(xs.data(), xs.size(), ca.data(), sa.data(),
                             std::size_t(K), out.data());
    return out;
}

double Heat1DSolution::eval_one(double t, double x) const {
    return eval(t, {x})[0];
}

double Heat1DSolution::green_eval(double t, double x, int images, double abs_tol) const {
    if (t <= 0.0) throw std::invalid_argument("green_eval: t > 0 required");
    const double r = kPi / p();
    auto green = [&](double y) {
        double acc = 0.0;
        for (int j = -images; j <= images; ++j) {
            const double z = y + 2.0 * kPi * j;
            acc += std::exp(-z * z / (4.0 * t));
        }
        return acc / (2.0 * std::sqrt(kPi * t));
    };
    auto integrand = [&](double xi) { return green(x - xi) * s_.source().eval(p() * xi); };
    return adaptive_simpson(integrand, -r, r, abs_tol).value;
}

double Heat1DSolution::mass(double /*t*/) const {
    // Only the k = 0 amplitude carries mass, and it does not decay.
    return (s_.parity() == Parity::Cos) ? 2.0 * kPi * s_.amp(0) : 0.0;
}

namespace {

struct Slot {
    const WindowedSeries* s;
    bool is_cos;
};

double damped_amp(const Slot& sl, int k, double t) {
    return sl.s->amp(k) * std::exp(-double(k) * k * t);
}

// Contribution classes for integral over [-pi,pi] of b1(k1 x) b2(k2 x) b3(k3 x):
// each entry is (k3 = |k1 +- k2| variant, sign).
struct Resonance {
    int k3;
    double sign;
};

void resonances(bool c1, bool c2, bool c3, int k1, int k2, Resonance out[3], int& cnt) {
    cnt = 0;
    auto push = [&](int k3, double sign, bool need_pos) {
        if (k3 < 0) return;
        if (need_pos && k3 == 0) return;
        out[cnt++] = {k3, sign};
    };
    if (c1 && c2 && c3) {
        push(k1 + k2, 1.0, false);
        push(k1 - k2, 1.0, false);
        push(k2 - k1, 1.0, false);
    } else if (c1 && !c2 && !c3) {
        // cos(k1) sin(k2) sin(k3): + for k2=k3+k1, k3=k1+k2; - for k1=k2+k3
        push(k2 - k1, 1.0, true);
        push(k1 + k2, 1.0, true);
        push(k1 - k2, -1.0, true);
    } else if (!c1 && c2 && !c3) {
        push(k1 - k2, 1.0, true);
        push(k1 + k2, 1.0, true);
        push(k2 - k1, -1.0, true);
    } else if (!c1 && !c2 && c3) {
        push(k1 - k2, 1.0, false);
        push(k2 - k1, 1.0, false);
        push(k1 + k2, -1.0, false);
    } else {
        throw std::invalid_argument("triple product: odd number of sine factors");
    }
}

}  // namespace

double triple_product_series(const Heat1DSolution& s1, const Heat1DSolution& s2,
                             const Heat1DSolution& s3, double t, double* tail) {
    const Slot a{&s1.series(), s1.series().parity() == Parity::Cos};
    const Slot b{&s2.series(), s2.series().parity() == Parity::Cos};
    const Slot c{&s3.series(), s3.series().parity() == Parity::Cos};
    const int odd = int(!a.is_cos) + int(!b.is_cos) + int(!c.is_cos);
    if (odd % 2 == 1) {
        if (tail) *tail = 0.0;
        return 0.0;  // odd integrand over the symmetric interval
    }

    const int K1 = a.s->K(), K2 = b.s->K();
    const int lo1 = a.is_cos ? 0 : 1, lo2 = b.is_cos ? 0 : 1;
    double acc = 0.0;
    Resonance res[3];
    int cnt = 0;
    for (int k1 = lo1; k1 <= K1; ++k1) {
        const double a1 = damped_amp(a, k1, t);
        if (a1 == 0.0) continue;
        for (int k2 = lo2; k2 <= K2; ++k2) {
            const double a2 = damped_amp(b, k2, t);
            if (a2 == 0.0) continue;
            resonances(a.is_cos, b.is_cos, c.is_cos, k1, k2, res, cnt);
            for (int r = 0; r < cnt; ++r) {
                const double a3 = damped_amp(c, res[r].k3, t);
                if (a3 == 0.0) continue;
                acc += res[r].sign * a1 * a2 * a3;
            }
        }
    }
    acc *= kPi / 2.0;
    if (a.is_cos && b.is_cos && c.is_cos)
        acc += kPi / 2.0 * a.s->amp(0) * b.s->amp(0) * c.s->amp(0);  // (0,0,0) extra

    if (tail) {
        // Discarded terms have k1 > K1 or k2 > K2; each contributes at most
        // three resonance partners bounded by sup|amp3|, and carries an
        // exponential factor of at most exp(-(min K + 1)^2 t).
        const double sup3 = c.s->sup_bound();
        const double t1 = a.s->tail().sum_above(K1);
        const double t2 = b.s->tail().sum_above(K2);
        const double l1a = a.s->l1_bound();
        const double l1b = b.s->l1_bound();
        const double mn = std::min(K1, K2) + 1;
        *tail = kPi / 2.0 * 3.0 * sup3 * (t1 * l1b + l1a * t2) * std::exp(-mn * mn * t);
    }
    return acc;
}

double triple_product_quadrature(const Heat1DSolution& s1, const Heat1DSolution& s2,
                                 const Heat1DSolution& s3, double t) {
    const int K = s1.series().K() + s2.series().K() + s3.series().K();
    int n = K + 9;
    std::vector<double> xs(std::size_t(n));
    for (int i = 0; i < n; ++i) xs[std::size_t(i)] = -kPi + 2.0 * kPi * i / n;
    const auto v1 = s1.eval(t, xs);
    const auto v2 = s2.eval(t, xs);
    const auto v3 = s3.eval(t, xs);
    const double sum = kernels::ops().dot3(v1.data(), v2.data(), v3.data(), xs.size());
    return sum * 2.0 * kPi / n;
}

double triple_product_integral(const Heat1DSolution& s1, const Heat1DSolution& s2,
                               const Heat1DSolution& s3, double t) {
    const double a = triple_product_series(s1, s2, s3, t);
    const double b = triple_product_quadrature(s1, s2, s3, t);
    if (std::abs(a - b) > 1e-9)
        throw std::runtime_error("triple product: series/quadrature disagreement");
    return a;
}

DerivativeIdentityReport derivative_identities(const TrigPoly& f, int p, double t,
                                               int K, int grid_n) {
    DerivativeIdentityReport rep{};
    const double fpi = f.eval(kPi);
    const double dfpi = f.derivative().eval(kPi);
    rep.dx_hypothesis_ok = std::abs(fpi) < 1e-12;
    rep.dt_hypothesis_ok = rep.dx_hypothesis_ok && std::abs(dfpi) < 1e-12;

    const WindowedSeries ws(f, p, K);
    const WindowedSeries wsd(f.derivative(), p, K);
    const WindowedSeries wsdd(f.derivative().derivative(), p, K);
    const Heat1DSolution Sd(wsd), Sdd(wsdd);

    std::vector<double> xs(std::size_t(grid_n));
    for (int i = 0; i < grid_n; ++i) xs[std::size_t(i)] = -kPi + 2.0 * kPi * i / grid_n;

    // d/dx and d/dt of the series, term by term.
    double dx_res = 0.0, dt_res = 0.0;
    const auto rhs_dx = Sd.eval(t, xs);
    const auto rhs_dt = Sdd.eval(t, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double ddx = 0.0, ddt = 0.0;
        for (int k = 0; k <= K; ++k) {
            const double e = std::exp(-double(k) * k * t);
            const double A = ws.amp(k) * e;
            if (ws.parity() == Parity::Cos) {
                ddx += -A * k * std::sin(k * xs[i]);
                ddt += -A * k * k * std::cos(k * xs[i]);
            } else {
                ddx += A * k * std::cos(k * xs[i]);
                ddt += -A * k * k * std::sin(k * xs[i]);
            }
        }
        dx_res = std::max(dx_res, std::abs(ddx - p * rhs_dx[i]));
        dt_res = std::max(dt_res, std::abs(ddt - double(p) * p * rhs_dt[i]));
    }
    rep.dx_residual = dx_res;
    rep.dt_residual = dt_res;
    return rep;
}

}  // namespace npelab::heat1d
