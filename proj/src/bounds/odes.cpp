#include "npelab/bounds/odes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace npelab::bounds {

namespace {
constexpr double kPi = std::numbers::pi;

double fd4(const std::function<double(double)>& f, double t, double h) {
    return (-f(t + 2 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + f(t - 2 * h)) / (12.0 * h);
}
}  // namespace

OdeReport ode_identity_checks(int p, const std::vector<double>& t_grid, int K, double dt) {
    const Tables tb(p, K);
    const double p2 = double(p) * p;
    OdeReport rep;
    rep.rhs_min = 1e300;

    auto J2J4 = [&](double t) {
        return eval_J(tb, 2, t).value + eval_J(tb, 4, t).value;
    };
    auto g = [&](double t) {
        return 12.0 * eval_R(tb, t).value + 9.0 * eval_Q(tb, t).value;
    };

    rep.j24_initial_err = std::abs(J2J4(0.0) - 11.0 * kPi / (4.0 * p));
    rep.g_initial_err = std::abs(g(0.0) - 27.0 * kPi / (2.0 * p));

    for (double t : t_grid) {
        if (t < 2.0 * dt) throw std::invalid_argument("ode checks need t >= 2 dt");

        // d/dt (J2+J4) + 24 p^2 (J2+J4)
        //   = 8 p^2 J2 + 9 p^2 Q + 12 p^2 R + 2 p^2 int S(1+cos) S^2(sin+2sin2)
        const double lhs_j24 = fd4(J2J4, t, dt) + 24.0 * p2 * J2J4(t);
        const double mix = triple_product_series(tb.SgD, tb.SgD, tb.C1, t);
        const double rhs_j24 = 8.0 * p2 * eval_J(tb, 2, t).value +
                               9.0 * p2 * eval_Q(tb, t).value +
                               12.0 * p2 * eval_R(tb, t).value + 2.0 * p2 * mix;
        rep.j24_residual = std::max(rep.j24_residual, std::abs(lhs_j24 - rhs_j24));
        rep.rhs_min = std::min(rep.rhs_min, rhs_j24);

        // d/dt g + 8 p^2 g = p^2 int S^2(cos) S(72+30cos-42cos2)
        //                    - 48 p^2 int S^2(sin) S(cos 2p.)
        const double lhs_g = fd4(g, t, dt) + 8.0 * p2 * g(t);
        const double comb = triple_product_series(tb.Se, tb.Se, tb.Scomb, t);
        const double tj = eval_tilde_J(tb, t).value;  // int S^2(sin) S(cos2p.) = -tj
        const double rhs_g = p2 * comb + 48.0 * p2 * tj;
        rep.abeq_residual = std::max(rep.abeq_residual, std::abs(lhs_g - rhs_g));

        // zero identities
        rep.zeroint_max = std::max(
            rep.zeroint_max, std::abs(triple_product_series(tb.Ssin, tb.Ssin, tb.Se, t)));
        rep.eq41_max = std::max(
            rep.eq41_max, std::abs(triple_product_series(tb.Sg, tb.Sg, tb.C2, t)));
    }
    return rep;
}

}  // namespace npelab::bounds
