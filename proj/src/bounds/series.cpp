#include "npelab/bounds/series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "npelab/bounds/coeff_tables.hpp"

namespace npelab::bounds {

using heat1d::Heat1DSolution;
using heat1d::TrigPoly;
using heat1d::WindowedSeries;

namespace {

constexpr double kPi = std::numbers::pi;
namespace fs = heat1d::factors;

TrigPoly comb_poly() {
    // 30 (1 + cos) + 42 (1 - cos 2) = 72 + 30 cos - 42 cos 2
    TrigPoly f = TrigPoly::constant(72.0);
    f.add({1, heat1d::Parity::Cos, 30.0});
    f.add({2, heat1d::Parity::Cos, -42.0});
    return f;
}

// sum_{k>K} |c(k)|, |d(k)|, |A(k)| by integral majorants (|sin| <= 1).
double tail1_c(int p, int K) {
    const double K2 = double(K) * K, p2 = double(p) * p;
    return (1.0 / kPi) * std::log(K2 / (K2 - p2));
}
double tail1_d(int p, int K) {
    const double K2 = double(K) * K, p2 = double(p) * p;
    return (1.0 / kPi) * std::log((K2 - p2) / (K2 - 4.0 * p2));
}
double tail1_A(int p, int K) {
    // integral of dx/(x^2-p^2) from K
    const double pd = p;
    return (1.0 / (2.0 * pd)) * std::log((K + pd) / (K - pd));
}

double sup_abs_c(int p, int K) {
    double s = 0.0;
    for (int k = 1; k <= K; ++k) s = std::max(s, std::abs(c_coef(k, p)));
    return std::max(s, 2.0 * double(p) * p / (kPi * K * (double(K) * K - double(p) * p)));
}
double sup_abs_B(int p, int K) {
    double s = 0.0;
    for (int k = 1; k <= 2 * K + 2; ++k) s = std::max(s, std::abs(B_coef(k, p)));
    return s;  // |B(k)| ~ 1/k decays beyond the table
}
double l1_A(int p, int K) {
    double s = 0.0;
    for (int k = 1; k <= K; ++k) s += std::abs(A_coef(k, p));
    return s + tail1_A(p, K);
}
double l1_c(int p, int K) {
    double s = 0.0;
    for (int k = 1; k <= K; ++k) s += std::abs(c_coef(k, p));
    return s + tail1_c(p, K);
}
double l1_d(int p, int K) {
    double s = 0.0;
    for (int k = 1; k <= K; ++k) s += std::abs(d_coef(k, p));
    return s + tail1_d(p, K);
}

}  // namespace

Tables::Tables(int p_, int K_)
    : p(p_),
      K(K_),
      C1(WindowedSeries(fs::one_plus_cos(), p_, K_)),
      C2(WindowedSeries(fs::cos_plus_cos2(), p_, K_)),
      Ssin(WindowedSeries(fs::sin_only(), p_, K_)),
      Sg(WindowedSeries(fs::sin_half_sin2(), p_, K_)),
      SgD(WindowedSeries(fs::sin_two_sin2(), p_, K_)),
      Se(WindowedSeries(fs::cos_only(), p_, K_)),
      Sb1(WindowedSeries(fs::neg_cos2(), p_, K_)),
      Scomb(WindowedSeries(comb_poly(), p_, K_)) {}

SeriesValue eval_J(const Tables& tb, int idx, double t) {
    SeriesValue out;
    switch (idx) {
        case 1:
            out.value = triple_product_series(tb.C1, tb.C1, tb.C2, t, &out.tail);
            break;
        case 2:
            out.value = triple_product_series(tb.C2, tb.C2, tb.C1, t, &out.tail);
            break;
        case 3:
            out.value = triple_product_series(tb.C2, tb.C2, tb.C2, t, &out.tail);
            break;
        case 4:
            out.value = triple_product_series(tb.Ssin, tb.Sg, tb.C2, t, &out.tail);
            break;
        default:
            throw std::invalid_argument("eval_J: idx in 1..4");
    }
    return out;
}

SeriesValue eval_Q(const Tables& tb, double t) {
    SeriesValue out;
    out.value = triple_product_series(tb.Ssin, tb.Ssin, tb.C2, t, &out.tail);
    return out;
}

SeriesValue eval_R(const Tables& tb, double t) {
    SeriesValue out;
    out.value = triple_product_series(tb.C1, tb.C2, tb.Se, t, &out.tail);
    return out;
}

SeriesValue eval_tilde_J(const Tables& tb, double t) {
    SeriesValue out;
    out.value = triple_product_series(tb.Ssin, tb.Ssin, tb.Sb1, t, &out.tail);
    return out;
}

SeriesValue eval_J_lattice(int p, int K, double t, bool matched) {
    std::vector<double> A(std::size_t(2 * K + 3)), B(std::size_t(2 * K + 3));
    for (int k = 0; k <= 2 * K + 2; ++k) {
        A[std::size_t(k)] = A_coef(k, p);
        B[std::size_t(k)] = B_coef(k, p);
    }
    double acc = 0.0;
    for (int k = 1; k <= K; ++k) {
        for (int l = 1; l <= K; ++l) {
            const double e = std::exp(-(double(k) * k + double(l) * l +
                                        double(k + l) * (k + l)) *
                                      t);
            double term = 0.0;
            const bool fam1_in = matched ? (k + l <= K) : true;
            if (fam1_in)
                term += 2.0 * A[std::size_t(k)] * A[std::size_t(k + l)] * B[std::size_t(l)];
            term -= A[std::size_t(k)] * A[std::size_t(l)] * B[std::size_t(k + l)];
            acc += term * e;
        }
    }

    // Tail at t = 0, then damped by the smallest discarded exponent.
    const double t1A = tail1_A(p, K);
    const double L1A = l1_A(p, K);
    const double supB = sup_abs_B(p, K);
    const double supBtail =
        double(K + 1) / (double(K + 1) * (K + 1) - 4.0 * double(p) * p);
    double tail0 = 2.0 * (t1A * supB * L1A + L1A * supBtail * t1A)  // family 1
                   + 2.0 * t1A * L1A * supB;                        // family 2
    if (matched) tail0 += 2.0 * supB * L1A * t1A;  // the k+l > K strip inside the box
    SeriesValue out;
    out.value = acc;
    out.tail = tail0 * std::exp(-double(K + 1) * (K + 1) * t);
    return out;
}

SeriesValue eval_J10(int p, int K, double t) {
    double acc = 0.0;
    for (int m = 1; m <= K; ++m)
        acc += c_coef(m, p) * d_coef(m, p) * std::exp(-2.0 * double(m) * m * t);
    const double K2 = double(K) * K, p2 = double(p) * p;
    const double corr = 1.0 / ((1.0 - p2 / K2) * (1.0 - p2 / K2) * (1.0 - 4.0 * p2 / K2));
    const double tail0 = (12.0 * p2 * p2 / (kPi * kPi)) * corr / (5.0 * K2 * K2 * double(K));
    return {acc, tail0 * std::exp(-2.0 * double(K + 1) * (K + 1) * t)};
}

namespace {

SeriesValue lattice_cdc(int p, int K, double t, bool cdc) {
    // cdc: on  c(m) d(l) c(m+l); off c(m) c(l) d(m+l); box m,l <= K.
    double acc = 0.0;
    for (int m = 1; m <= K; ++m) {
        for (int l = 1; l <= K; ++l) {
            const double kern = cdc ? F11_kernel(m, l, p) : F12_kernel(m, l, p);
            if (kern == 0.0) continue;
            acc += kern *
                   std::exp(-2.0 * (double(m) * m + double(l) * l + double(m) * l) * t);
        }
    }
    const double supc = sup_abs_c(p, K);
    double supd = 0.0;
    for (int k = 1; k <= 2 * K + 2; ++k) supd = std::max(supd, std::abs(d_coef(k, p)));
    double tail0;
    if (cdc)
        tail0 = tail1_c(p, K) * l1_d(p, K) * supc + l1_c(p, K) * tail1_d(p, K) * supc;
    else
        tail0 = 2.0 * tail1_c(p, K) * l1_c(p, K) * supd;
    return {acc, tail0 * std::exp(-2.0 * double(K + 1) * (K + 1) * t)};
}

}  // namespace

SeriesValue eval_J11(int p, int K, double t) { return lattice_cdc(p, K, t, true); }
SeriesValue eval_J12(int p, int K, double t) { return lattice_cdc(p, K, t, false); }

double eval_J11_triangle(int p, int K, double t) {
    double acc = 0.0;
    for (int m = 1; m + 1 <= K; ++m)
        for (int l = 1; m + l <= K; ++l)
            acc += F11_kernel(m, l, p) *
                   std::exp(-2.0 * (double(m) * m + double(l) * l + double(m) * l) * t);
    return acc;
}

double eval_J10_box(int p, int K, double t) {
    double acc = 0.0;
    for (int m = 1; m <= K; ++m)
        acc += c_coef(m, p) * d_coef(m, p) * std::exp(-2.0 * double(m) * m * t);
    return acc;
}

double eval_J12_box(int p, int K, double t) {
    double acc = 0.0;
    for (int m = 1; m <= K; ++m)
        for (int l = 1; l <= K; ++l)
            acc += F12_kernel(m, l, p) *
                   std::exp(-2.0 * (double(m) * m + double(l) * l + double(m) * l) * t);
    return acc;
}

}  // namespace npelab::bounds
