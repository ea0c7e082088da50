#include "npelab/bounds/coeff_tables.hpp"

#include <cmath>
#include <numbers>

namespace npelab::bounds {

namespace {
constexpr double kPi = std::numbers::pi;

// sin(pi k / p) with exact zeros on multiples of p.
double spk(int k, int p) {
    const int r = ((k % p) + p) % p;
    if (r == 0) return 0.0;
    const int a = (k - r) / p;
    const double s = std::sin(kPi * r / p);
    return (a % 2 == 0) ? s : -s;
}
}  // namespace

double c_coef(int k, int p) {
    if (k % p == 0) return (k == p) ? 1.0 / p : 0.0;
    const double kk = k, pp = p;
    return 2.0 * pp * pp * spk(k, p) / (kPi * kk * (pp * pp - kk * kk));
}

double d_coef(int k, int p) {
    if (k % p == 0) return (k == p || k == 2 * p) ? 1.0 / p : 0.0;
    const double kk = k, pp = p;
    return 6.0 * pp * pp * kk * spk(k, p) /
           (kPi * (pp * pp - kk * kk) * (4.0 * pp * pp - kk * kk));
}

double a1_coef(int k, int p) {
    if (k % p == 0) return (k == p) ? 1.0 / p : 0.0;
    const double kk = k, pp = p;
    return 2.0 * pp * spk(k, p) / (kPi * (pp * pp - kk * kk));
}

double b1_coef(int k, int p) {
    if (k % p == 0) return (k == 2 * p) ? -1.0 / p : 0.0;
    const double kk = k, pp = p;
    return 2.0 * kk * spk(k, p) / (kPi * (4.0 * pp * pp - kk * kk));
}

double A_coef(int k, int p) {
    if (k % p == 0) return (k == p) ? kPi / (2.0 * double(p) * p) : 0.0;
    const double kk = k, pp = p;
    return spk(k, p) / (pp * pp - kk * kk);
}

double B_coef(int k, int p) {
    if (k % p == 0) return (k == 2 * p) ? -kPi / (2.0 * p) : 0.0;
    const double kk = k, pp = p;
    return kk * spk(k, p) / (4.0 * pp * pp - kk * kk);
}

double c1_aux(double k, int p) { return 1.0 / (k * (k * k - double(p) * p)); }
double d1_aux(double k, int p) {
    const double p2 = double(p) * p;
    return k / ((k * k - p2) * (k * k - 4.0 * p2));
}
double A1_aux(double k, int p) { return 1.0 / (k * k - double(p) * p); }
double B1_aux(double k, int p) { return k / (k * k - 4.0 * double(p) * p); }

double F11_kernel(int m, int l, int p) {
    return c_coef(m, p) * d_coef(l, p) * c_coef(m + l, p);
}
double F12_kernel(int m, int l, int p) {
    return c_coef(m, p) * c_coef(l, p) * d_coef(m + l, p);
}
double F1_kernel(int k, int l, int p) {
    return A_coef(k, p) * A_coef(k + l, p) * B_coef(l, p);
}
double F2_kernel(int k, int l, int p) {
    return -A_coef(k, p) * A_coef(l, p) * B_coef(k + l, p);
}

}  // namespace npelab::bounds
