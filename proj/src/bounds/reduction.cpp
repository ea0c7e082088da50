#include "npelab/bounds/reduction.hpp"

#include <array>
#include <cmath>
#include <map>
#include <memory>

#include "npelab/bounds/series.hpp"
#include "npelab/heat1d/heat_solution.hpp"
#include "npelab/spectral/ops.hpp"
#include "npelab/spectral/psi.hpp"

namespace npelab::bounds {

using control::ControlParams;
using control::RankOneTerm;
using control::TermList;
using heat1d::Heat1DSolution;
using heat1d::TrigPoly;
using heat1d::WindowedSeries;

namespace {
namespace fs = heat1d::factors;

// Heat solutions keyed by the source polynomial (shared within one check).
class SolutionCache {
  public:
    SolutionCache(int p, int K) : p_(p), K_(K) {}
    const Heat1DSolution& get(const TrigPoly& f) {
        const std::string key = f.str();
        auto it = cache_.find(key);
        if (it != cache_.end()) return *it->second;
        auto sol = std::make_unique<Heat1DSolution>(WindowedSeries(f, p_, K_));
        return *cache_.emplace(key, std::move(sol)).first->second;
    }

  private:
    int p_, K_;
    std::map<std::string, std::unique_ptr<Heat1DSolution>> cache_;
};

// Tensor-product triple integral over T^3: sum over rank-1 terms, product of
// per-axis 1D triple integrals.
double triple_tensor_integral(SolutionCache& sc, const TermList& X, const TermList& Y,
                              const TermList& Z, double t) {
    double acc = 0.0;
    for (const auto& x : X) {
        for (const auto& y : Y) {
            for (const auto& z : Z) {
                double prod = x.coef * y.coef * z.coef;
                for (int ax = 0; ax < 3 && prod != 0.0; ++ax) {
                    prod *= triple_product_series(sc.get(x.f[std::size_t(ax)]),
                                                  sc.get(y.f[std::size_t(ax)]),
                                                  sc.get(z.f[std::size_t(ax)]), t);
                }
                acc += prod;
            }
        }
    }
    return acc;
}

// A/B/C/D symbols: per-axis factor assignment and the amplitude sign.
struct Symbol {
    std::array<const TrigPoly*, 3> slot;  // role 0,1,2 -> factor
    int amp_index;                        // which of a1,a2,a3
    double sign;
};

struct SymbolSet {
    TrigPoly one_plus_cos = fs::one_plus_cos();
    TrigPoly cos_plus_cos2 = fs::cos_plus_cos2();
    TrigPoly sin_only = fs::sin_only();
    TrigPoly sin_half = fs::sin_half_sin2();
    TrigPoly sin_two = fs::sin_two_sin2();
    TrigPoly cos_only = fs::cos_only();

    Symbol make(char sym, const std::array<int, 3>& idx) const {
        switch (sym) {
            case 'A':  // a_k (1+cos)_k (cos+cos2)_i (cos+cos2)_j
                return {{&cos_plus_cos2, &cos_plus_cos2, &one_plus_cos}, idx[2], 1.0};
            case 'B':  // -a_i sin_i (cos+cos2)_j (sin+sin2/2)_k
                return {{&sin_only, &cos_plus_cos2, &sin_half}, idx[0], -1.0};
            case 'C':  // -a_i cos_i (sin+sin2/2)_j (sin+sin2/2)_k
                return {{&cos_only, &sin_half, &sin_half}, idx[0], -1.0};
            case 'D':  // -a_j (sin+2sin2)_i (1+cos)_j (sin+sin2/2)_k
                return {{&sin_two, &one_plus_cos, &sin_half}, idx[1], -1.0};
        }
        throw std::invalid_argument("unknown symbol");
    }
};

struct Monomial {
    char sym;
    std::array<int, 3> idx;
};

// integral over T^3 of the product of three A/B/C/D heat solutions.
double monomial_integral(SolutionCache& sc, const SymbolSet& ss, const ControlParams& c,
                         const Monomial& m1, const Monomial& m2, const Monomial& m3,
                         double t) {
    const std::array<double, 3> amps{c.a1, c.a2, c.a3};
    const Monomial ms[3] = {m1, m2, m3};
    Symbol sy[3] = {ss.make(m1.sym, m1.idx), ss.make(m2.sym, m2.idx),
                    ss.make(m3.sym, m3.idx)};
    double coef = 1.0;
    for (int i = 0; i < 3; ++i)
        coef *= sy[i].sign * amps[std::size_t(sy[i].amp_index - 1)];
    if (coef == 0.0) return 0.0;
    double acc = coef;
    for (int axis = 1; axis <= 3 && acc != 0.0; ++axis) {
        const TrigPoly* f[3];
        for (int i = 0; i < 3; ++i) {
            const auto& idx = ms[i].idx;
            int role = -1;
            for (int r = 0; r < 3; ++r)
                if (idx[std::size_t(r)] == axis) role = r;
            f[i] = sy[i].slot[std::size_t(role)];
        }
        acc *= triple_product_series(sc.get(*f[0]), sc.get(*f[1]), sc.get(*f[2]), t);
    }
    return acc;
}

double rel_diff(double a, double b) {
    // Absolute floor keeps identities whose both sides vanish (degenerate
    // amplitude choices) from reporting spurious relative error.
    const double scale = std::max({std::abs(a), std::abs(b), 1e-15});
    return std::abs(a - b) / scale;
}

}  // namespace

std::vector<std::pair<std::string, double>> product_identity_residuals(
    const ControlParams& c, double t) {
    SolutionCache sc(c.p, c.N);
    const SymbolSet ss;
    const Tables tb(c.p, c.N);
    const double J1 = eval_J(tb, 1, t).value;
    const double J2 = eval_J(tb, 2, t).value;
    const double J3 = eval_J(tb, 3, t).value;
    const double J4 = eval_J(tb, 4, t).value;
    const double a1 = c.a1, a2 = c.a2, a3 = c.a3;

    struct Item {
        const char* name;
        Monomial m1, m2, m3;
        double rhs;
    };
    const std::vector<Item> items = {
        {"A231.A123^2", {'A', {2, 3, 1}}, {'A', {1, 2, 3}}, {'A', {1, 2, 3}}, a1 * a3 * a3 * J1 * J2 * J3},
        {"B321.A123.B123", {'B', {3, 2, 1}}, {'A', {1, 2, 3}}, {'B', {1, 2, 3}}, 0.5 * a1 * a3 * a3 * J1 * J3 * J4},
        {"A231.A132^2", {'A', {2, 3, 1}}, {'A', {1, 3, 2}}, {'A', {1, 3, 2}}, a1 * a2 * a2 * J1 * J2 * J3},
        {"B231.A132.B132", {'B', {2, 3, 1}}, {'A', {1, 3, 2}}, {'B', {1, 3, 2}}, 0.5 * a1 * a2 * a2 * J1 * J3 * J4},
        {"B123.A132.D321", {'B', {1, 2, 3}}, {'A', {1, 3, 2}}, {'D', {3, 2, 1}}, 0.5 * a1 * a2 * a2 * J1 * J3 * J4},
        {"B213.A132.D312", {'B', {2, 1, 3}}, {'A', {1, 3, 2}}, {'D', {3, 1, 2}}, 0.25 * a1 * a2 * a2 * J1 * J2 * J3},
        {"B213.B132.D321", {'B', {2, 1, 3}}, {'B', {1, 3, 2}}, {'D', {3, 2, 1}}, -0.25 * a1 * a2 * a2 * J1 * J3 * J4},
        {"A123.B132.D231", {'A', {1, 2, 3}}, {'B', {1, 3, 2}}, {'D', {2, 3, 1}}, 0.5 * a1 * a3 * a3 * J1 * J3 * J4},
        {"A123.B312.D213", {'A', {1, 2, 3}}, {'B', {3, 1, 2}}, {'D', {2, 1, 3}}, 0.25 * a1 * a3 * a3 * J1 * J2 * J3},
        {"B123.B312.D231", {'B', {1, 2, 3}}, {'B', {3, 1, 2}}, {'D', {2, 3, 1}}, -0.25 * a1 * a3 * a3 * J1 * J3 * J4},
    };
    std::vector<std::pair<std::string, double>> out;
    for (const auto& it : items) {
        const double lhs = monomial_integral(sc, ss, c, it.m1, it.m2, it.m3, t);
        out.emplace_back(it.name, rel_diff(lhs, it.rhs));
    }
    return out;
}

double zero_family_residual(const ControlParams& c, double t) {
    SolutionCache sc(c.p, c.N);
    const SymbolSet ss;
    double worst = 0.0;
    const int perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    for (const auto& pr : perms) {
        const int i = pr[0], j = pr[1], k = pr[2];
        const std::array<int, 3> ijk{i, j, k}, ikj{i, k, j}, kij{k, i, j}, jki{j, k, i},
            kji{k, j, i}, jik{j, i, k};
        const Monomial Aijk{'A', ijk};
        auto z = [&](const Monomial& a, const Monomial& b, const Monomial& cc) {
            worst = std::max(worst, std::abs(monomial_integral(sc, ss, c, a, b, cc, t)));
        };
        z(Aijk, {'B', ikj}, {'B', ikj});
        z(Aijk, {'B', kij}, {'B', kij});
        z(Aijk, {'B', jki}, {'B', jki});
        z(Aijk, {'B', kji}, {'B', kji});
        z({'B', ijk}, {'B', ikj}, {'B', kij});
        z(Aijk, {'B', ikj}, {'C', kij});
        z(Aijk, {'B', kij}, {'D', kij});
        z({'B', ijk}, {'B', ikj}, {'D', jik});
        z({'B', ijk}, {'B', jki}, {'C', ijk});
    }
    return worst;
}

ReductionReport reduction_check(const ControlParams& c, double t) {
    c.validate();
    ReductionReport rep;
    rep.t = t;
    const double p6 = std::pow(double(c.p), 6.0);

    // (a) 3D pseudo-spectral on the truncated control.
    const auto u = control::build_control(c);
    const auto St = spectral::heat_evolve(u, t);
    rep.psi_3d = spectral::psi(St, spectral::PsiMethod::PseudoSpectral);

    // (b) second-derivative tensor expansion of the reduced integrand.
    SolutionCache sc(c.p, c.N);
    const TermList W12 = control::d2w_terms(1, 2, c);
    const TermList W13 = control::d2w_terms(1, 3, c);
    const TermList W23 = control::d2w_terms(2, 3, c);
    const TermList W22 = control::d2w_terms(2, 2, c);
    const TermList W33 = control::d2w_terms(3, 3, c);
    rep.tensor_route = p6 * (triple_tensor_integral(sc, W23, W12, W12, t) -
                             triple_tensor_integral(sc, W23, W13, W13, t) +
                             triple_tensor_integral(sc, W12, W13, W33, t) -
                             triple_tensor_integral(sc, W12, W13, W22, t));

    // (c) the A/B/C/D regrouping.
    const SymbolSet ss;
    auto M = [&](const Monomial& a, const Monomial& b, const Monomial& d) {
        return monomial_integral(sc, ss, c, a, b, d, t);
    };
    rep.abcd_route =
        p6 * (M({'A', {2, 3, 1}}, {'A', {1, 2, 3}}, {'A', {1, 2, 3}}) +
              2.0 * M({'B', {3, 2, 1}}, {'A', {1, 2, 3}}, {'B', {1, 2, 3}}) -
              M({'A', {2, 3, 1}}, {'A', {1, 3, 2}}, {'A', {1, 3, 2}}) -
              2.0 * M({'B', {2, 3, 1}}, {'A', {1, 3, 2}}, {'B', {1, 3, 2}}) +
              M({'B', {1, 2, 3}}, {'A', {1, 3, 2}}, {'D', {3, 2, 1}}) +
              M({'B', {2, 1, 3}}, {'A', {1, 3, 2}}, {'D', {3, 1, 2}}) +
              M({'B', {2, 1, 3}}, {'B', {1, 3, 2}}, {'D', {3, 2, 1}}) -
              M({'A', {1, 2, 3}}, {'B', {1, 3, 2}}, {'D', {2, 3, 1}}) -
              M({'A', {1, 2, 3}}, {'B', {3, 1, 2}}, {'D', {2, 1, 3}}) -
              M({'B', {1, 2, 3}}, {'B', {3, 1, 2}}, {'D', {2, 3, 1}}));

    // (d) the closed product formula.
    const Tables tb(c.p, c.N);
    const double J1 = eval_J(tb, 1, t).value;
    const double J2 = eval_J(tb, 2, t).value;
    const double J3 = eval_J(tb, 3, t).value;
    const double J4 = eval_J(tb, 4, t).value;
    rep.product_formula = c.positivity_prefactor() * J1 * J3 * (J2 + J4);

    rep.rel_3d_vs_product = rel_diff(rep.psi_3d, rep.product_formula);
    rep.rel_3d_vs_tensor = rel_diff(rep.psi_3d, rep.tensor_route);
    rep.rel_tensor_vs_abcd = rel_diff(rep.tensor_route, rep.abcd_route);

    rep.term_identities = product_identity_residuals(c, t);
    rep.max_zero_identity = zero_family_residual(c, t);
    return rep;
}

}  // namespace npelab::bounds
