#include "npelab/heat1d/quadrature.hpp"

#include <cmath>

namespace npelab::heat1d {

namespace {

struct Ctx {
    const std::function<double(double)>& f;
    long evals = 0;
    double eval(double x) {
        ++evals;
        return f(x);
    }
};

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(Ctx& c, double a, double b, double fa, double fm, double fb,
               double whole, double tol, int depth, double& err) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = c.eval(lm), frm = c.eval(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        err += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return recurse(c, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, err) +
           recurse(c, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, err);
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f,
                                  double a, double b, double abs_tol, int max_depth) {
    Ctx c{f};
    if (a == b) return {0.0, 0.0, 0};
    const double m = 0.5 * (a + b);
    const double fa = c.eval(a), fm = c.eval(m), fb = c.eval(b);
    const double whole = simpson(fa, fm, fb, b - a);
    double err = 0.0;
    const double v = recurse(c, a, b, fa, fm, fb, whole, abs_tol, max_depth, err);
    return {v, err, c.evals};
}

}  // namespace npelab::heat1d
