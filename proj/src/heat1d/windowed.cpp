#include "npelab/heat1d/windowed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "npelab/heat1d/quadrature.hpp"

namespace npelab::heat1d {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(pi*k/p) with exact zeros on resonant wavenumbers.
double sin_pi_k_over_p(int k, int p) {
    const int r = ((k % p) + p) % p;
    if (r == 0) return 0.0;
    const int a = (k - r) / p;
    const double s = std::sin(kPi * r / p);
    return (a % 2 == 0) ? s : -s;
}

// One term's closed-form contribution to the basis coefficient at k.
double term_coeff(const TrigTerm& t, int p, int k) {
    const int H = t.harmonic * p;
    const double sgn = (t.harmonic % 2 == 0) ? 1.0 : -1.0;
    if (t.parity == Parity::Cos) {
        if (k == H) return (H == 0) ? 2.0 * t.amp / p : t.amp / p;
        if (k == 0) return 0.0;  // integral of cos(H xi) over the window, H != 0
        return t.amp * sgn * sin_pi_k_over_p(k, p) * 2.0 * k /
               (kPi * (double(k) * k - double(H) * H));
    }
    if (k == 0) return 0.0;
    if (k == H) return t.amp / p;
    return t.amp * sgn * sin_pi_k_over_p(k, p) * 2.0 * H /
           (kPi * (double(k) * k - double(H) * H));
}

double closed_form_coeff(const TrigPoly& f, int p, int k) {
    double acc = 0.0;
    for (const auto& t : f.terms()) acc += term_coeff(t, p, k);
    return acc;
}

// a(u) * (u - root)
std::vector<double> poly_mul_linear(const std::vector<double>& a, double root) {
    std::vector<double> out(a.size() + 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i + 1] += a[i];
        out[i] -= root * a[i];
    }
    return out;
}

}  // namespace

double TailMajorant::sum_above(int K) const {
    if (q <= 1.0) return std::numeric_limits<double>::infinity();
    if (K < k_min) K = k_min;
    return C * std::pow(double(K), 1.0 - q) / (q - 1.0);
}

WindowedSeries::WindowedSeries(const TrigPoly& f, int p, int K)
    : source_(f), p_(p), K_(K) {
    if (p < 2) throw std::invalid_argument("WindowedSeries: p >= 2 required");
    if (K < 3 * p) throw std::invalid_argument("WindowedSeries: K >= 3p required");
    if (f.terms().empty()) throw std::invalid_argument("WindowedSeries: empty polynomial");
    if (f.pure_cos())
        parity_ = Parity::Cos;
    else if (f.pure_sin())
        parity_ = Parity::Sin;
    else
        throw std::invalid_argument("WindowedSeries: mixed parity polynomial");

    table_.resize(std::size_t(K) + 1, 0.0);
    for (int k = 0; k <= K; ++k) table_[std::size_t(k)] = closed_form_coeff(f, p_, k);
    for (int k = 0; k <= K; ++k) {
        const double a = std::abs(amp(k));
        if (k > 0 || parity_ == Parity::Cos) l1_partial_ += a;
        sup_partial_ = std::max(sup_partial_, a);
    }

    // Tail majorant from the combined rational closed form
    //   coeff(k) = sin(pi k/p)/pi * [2k (cos) | 2 (sin)] * P(k^2) / prod(k^2 - H_i^2).
    // The exact degree of P captures the cancellation between terms, which
    // sets the true decay rate of the coefficients.
    const auto& ts = f.terms();
    const std::size_t m = ts.size();
    std::vector<double> P{0.0};
    for (std::size_t i = 0; i < m; ++i) {
        const double Hi = double(ts[i].harmonic) * p;
        double si = ts[i].amp * ((ts[i].harmonic % 2 == 0) ? 1.0 : -1.0);
        if (parity_ == Parity::Sin) si *= Hi;
        std::vector<double> prod{si};
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            const double Hj = double(ts[j].harmonic) * p;
            prod = poly_mul_linear(prod, Hj * Hj);
        }
        if (prod.size() > P.size()) P.resize(prod.size(), 0.0);
        for (std::size_t d = 0; d < prod.size(); ++d) P[d] += prod[d];
    }
    double pmax = 0.0;
    for (double c : P) pmax = std::max(pmax, std::abs(c));
    int deg = -1;
    for (int d = int(P.size()) - 1; d >= 0; --d) {
        if (std::abs(P[d]) > 1e-9 * pmax) {
            deg = d;
            break;
        }
    }
    const int kmin = 3 * p;
    tail_.k_min = kmin;
    if (deg < 0) {
        tail_.C = 0.0;
        tail_.q = 100.0;
        return;
    }
    double pup = 0.0;
    for (int d = 0; d <= deg; ++d)
        pup += std::abs(P[std::size_t(d)]) * std::pow(double(kmin), 2.0 * (d - deg));
    double dlow = 1.0;
    for (const auto& t : ts) {
        const double H = double(t.harmonic) * p;
        dlow *= 1.0 - (H * H) / (double(kmin) * kmin);
    }
    tail_.C = 2.0 * pup / (kPi * dlow);
    tail_.q = (parity_ == Parity::Cos) ? (2.0 * m - 1.0 - 2.0 * deg)
                                       : (2.0 * m - 2.0 * deg);
}

double WindowedSeries::coeff(int k) const {
    if (k < 0) throw std::invalid_argument("coeff: k >= 0 required");
    if (k <= K_) return table_[std::size_t(k)];
    return closed_form_coeff(source_, p_, k);
}

std::complex<double> WindowedSeries::complex_coeff(int k) const {
    const int a = std::abs(k);
    if (parity_ == Parity::Cos) {
        if (a == 0) return {amp(0), 0.0};
        return {0.5 * coeff(a), 0.0};
    }
    if (k == 0) return {0.0, 0.0};
    // f = sum b_k sin(k xi)  =>  g_hat(k) = -i b_k/2, g_hat(-k) = +i b_k/2
    return {0.0, (k > 0 ? -0.5 : 0.5) * coeff(a)};
}

double WindowedSeries::l1_bound() const { return l1_partial_ + tail_.sum_above(K_); }

double WindowedSeries::sup_bound() const {
    const double tail_sup = tail_.C * std::pow(double(K_ + 1), -tail_.q);
    return std::max(sup_partial_, tail_sup);
}

double WindowedSeries::windowed_value(double x) const {
    if (std::abs(x) > kPi / p_) return 0.0;
    return source_.eval(p_ * x);
}

double windowed_coeff_quadrature(const TrigPoly& f, int p, int k, Parity basis,
                                 double abs_tol) {
    const double r = kPi / p;
    auto integrand = [&](double xi) {
        const double fx = f.eval(p * xi);
        return fx * (basis == Parity::Cos ? std::cos(k * xi) : std::sin(k * xi));
    };
    return adaptive_simpson(integrand, -r, r, abs_tol).value / kPi;
}

}  // namespace npelab::heat1d
