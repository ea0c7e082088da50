#include "npelab/bounds/ratios.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "npelab/bounds/coeff_tables.hpp"

namespace npelab::bounds {

std::string status_str(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

void finalize(BoundReport& r) {
    if (r.dominance) {
        r.margin = r.worst - r.bound;
        r.status = (r.worst > r.bound) ? Status::Pass : Status::Fail;
        return;
    }
    r.margin = r.bound - r.worst - r.tail;
    if (r.worst + r.tail < r.bound)
        r.status = Status::Pass;
    else
        r.status = (r.worst < r.bound) ? Status::Inconclusive : Status::Fail;
}

namespace {

std::string loc(int p, int a, int b, int m, int l) {
    std::ostringstream os;
    os << "p=" << p;
    if (a >= 0) os << " a=" << a;
    if (b >= 0) os << " b=" << b;
    if (m >= 0) os << " m=" << m;
    if (l >= 0) os << " l=" << l;
    return os.str();
}

// Tracks the maximum for totals, minimum for dominance claims.
struct Tracker {
    bool dominance;
    double worst;
    std::string at;
    explicit Tracker(bool dom)
        : dominance(dom), worst(dom ? 1e300 : -1e300) {}
    void feed(double v, const std::string& where) {
        if (dominance ? (v < worst) : (v > worst)) {
            worst = v;
            at = where;
        }
    }
    bool touched() const { return at.size() > 0; }
};

void seal(BoundReport& r, const Tracker& tr) {
    if (tr.touched()) {
        r.worst = tr.worst;
        r.worst_at = tr.at;
    } else {
        // Vacuous domain (happens at p = 2 for the interior-triangle sweeps).
        r.worst = r.dominance ? 1e300 : 0.0;
        r.worst_at = "(empty domain)";
    }
    finalize(r);
}

constexpr int kBandCap = 24;  // dominance sweeps over the (a, b) bands

// ---- individual lemmas ----------------------------------------------------

BoundReport eq_5_17(const std::vector<int>& ps, int a_cap) {
    BoundReport r;
    r.lemma = "eq_5_17";
    r.description = "sum_a |c(ap+m)d(ap+m)| / (c(p-m)d(p-m)) < 1";
    r.bound = 1.0;
    Tracker tr(false);
    for (int p : ps) {
        for (int m = 1; m <= p - 1; ++m) {
            const double den = c_coef(p - m, p) * d_coef(p - m, p);
            double s = 0.0;
            for (int a = 2; a <= a_cap; ++a)
                s += std::abs(c_coef(a * p + m, p) * d_coef(a * p + m, p)) / den;
            tr.feed(s, loc(p, -1, -1, m, -1));
        }
    }
    r.tail = 24.0 / (5.0 * std::pow(double(a_cap), 5.0));
    r.swept = "m in [1,p-1], a in [2,a_cap]";
    seal(r, tr);
    return r;
}

BoundReport a_eq_2(const std::vector<int>& ps) {
    BoundReport r;
    r.lemma = "a_eq_2";
    r.description = "m(2p-m)^2(3p-m) / ((p+m)(3p+m)^2(4p+m)) < 1/6";
    r.bound = 1.0 / 6.0;
    Tracker tr(false);
    for (int p : ps) {
        for (int m = 1; m <= p - 1; ++m) {
            const double mm = m, pp = p;
            const double v = mm * (2 * pp - mm) * (2 * pp - mm) * (3 * pp - mm) /
                             ((pp + mm) * (3 * pp + mm) * (3 * pp + mm) * (4 * pp + mm));
            tr.feed(v, loc(p, -1, -1, m, -1));
        }
    }
    // Continuous envelope x/(1+x) * (2-x)^2(3-x)/((3+x)^2(4+x)), x in (0,1).
    for (int i = 1; i < 1000; ++i) {
        const double x = i * 1e-3;
        const double v = x / (1 + x) * (2 - x) * (2 - x) * (3 - x) /
                         ((3 + x) * (3 + x) * (4 + x));
        tr.feed(v, "x=" + std::to_string(x));
    }
    r.swept = "m in [1,p-1] and x-grid (0,1) step 1e-3";
    seal(r, tr);
    return r;
}

// Triangle dominance: pos/|neg| > 1 for the paired (m,s) terms in the
// squares (pa,p(a+1)) x (pb,p(b+1)).
BoundReport pair_dominance(const std::vector<int>& ps, const char* name,
                           const std::function<double(int, int, int)>& kern,
                           int b_min) {
    BoundReport r;
    r.lemma = name;
    r.description = "paired positive/|negative| triangle terms > 1";
    r.bound = 1.0;
    r.dominance = true;
    Tracker tr(true);
    for (int p : ps) {
        for (int a = 1; a <= kBandCap; ++a) {
            for (int b = b_min; b <= kBandCap; ++b) {
                for (int m = 1; m <= p - 2; ++m) {
                    for (int s = 1; m + s <= p - 1; ++s) {
                        const double pos = kern(p * a + m, p * (b + 1) - m - s, p);
                        const double neg = kern(p * a + m + s, p * (b + 1) - m, p);
                        if (neg == 0.0) continue;
                        tr.feed(pos / std::abs(neg), loc(p, a, b, m, s));
                    }
                }
            }
        }
    }
    std::ostringstream sw;
    sw << "a in [1," << kBandCap << "], b in [" << b_min << "," << kBandCap
       << "], m+s <= p-1";
    r.swept = sw.str();
    seal(r, tr);
    return r;
}

BoundReport j12poslem2(const std::vector<int>& ps, int a_cap) {
    BoundReport r;
    r.lemma = "J12poslem2";
    r.description = "sum_a |F12(pa+m,l)| / F12(p+m,l) < 3/10";
    r.bound = 0.3;
    Tracker tr(false);
    for (int p : ps) {
        for (int m = 1; m <= p - 2; ++m) {
            for (int l = 1; m + l <= p - 1; ++l) {
                const double den = F12_kernel(p + m, l, p);
                double s = 0.0;
                for (int a = 2; a <= a_cap; ++a)
                    s += std::abs(F12_kernel(a * p + m, l, p)) / den;
                tr.feed(s, loc(p, -1, -1, m, l));
            }
        }
    }
    r.tail = 72.0 / (5.0 * std::pow(double(a_cap), 5.0));
    r.swept = "m+l <= p-1, a in [2,a_cap]";
    seal(r, tr);
    return r;
}

BoundReport j12_and_j11_1(const std::vector<int>& ps, int a_cap) {
    BoundReport r;
    r.lemma = "J12andJ11_1";
    r.description = "sum_a |F11(ap+m,p+l)| / F12(m,p+l) < 1/5";
    r.bound = 0.2;
    Tracker tr(false);
    for (int p : ps) {
        for (int m = 1; m <= p - 2; ++m) {
            for (int l = 1; m + l <= p - 1; ++l) {
                const double den = F12_kernel(m, p + l, p);
                double s = 0.0;
                for (int a = 1; a <= a_cap; ++a)
                    s += std::abs(F11_kernel(a * p + m, p + l, p)) / den;
                tr.feed(s, loc(p, -1, -1, m, l));
            }
        }
    }
    r.tail = 12.0 / (5.0 * std::pow(double(a_cap), 5.0));
    r.swept = "m+l <= p-1, a in [1,a_cap]";
    seal(r, tr);
    return r;
}

BoundReport j12_and_j11_2(const std::vector<int>& ps, int a_cap) {
    BoundReport r;
    r.lemma = "J12andJ11_2";
    r.description = "sum_a |F11(m,ap+l)| / F12(m,p+l) < 3/50";
    r.bound = 0.06;
    Tracker tr(false);
    for (int p : ps) {
        for (int m = 1; m <= p - 2; ++m) {
            for (int l = 1; m + l <= p - 1; ++l) {
                const double den = F12_kernel(m, p + l, p);
                double s = 0.0;
                for (int a = 2; a <= a_cap; ++a)
                    s += std::abs(F11_kernel(m, a * p + l, p)) / den;
                tr.feed(s, loc(p, -1, -1, m, l));
            }
        }
    }
    r.tail = 13.5 / (5.0 * std::pow(double(a_cap), 5.0));
    r.swept = "m+l <= p-1, a in [2,a_cap]";
    seal(r, tr);
    return r;
}

BoundReport j12_pos_to_j11_neg(const std::vector<int>& ps) {
    BoundReport r;
    r.lemma = "J12_pos_to_J11_neg";
    r.description = "F12(2p-m,p-l) / (2|F11(2p-m,p-l)|) > 27/10";
    r.bound = 2.7;
    r.dominance = true;
    Tracker tr(true);
    for (int p : ps) {
        for (int m = 1; m <= p - 2; ++m) {
            for (int l = 1; m + l <= p - 1; ++l) {
                const double num = F12_kernel(2 * p - m, p - l, p);
                const double den = 2.0 * std::abs(F11_kernel(2 * p - m, p - l, p));
                if (den == 0.0) continue;
                tr.feed(num / den, loc(p, -1, -1, m, l));
            }
        }
    }
    // Continuous envelope g1(x) g2(z) on (0,1)^2.
    for (int i = 1; i < 1000; ++i) {
        const double x = i * 1e-3;
        const double g1 = (1 + x) * (3 - x) / (2 * (1 - x) * (1 - x));
        for (int j = 1; j < 1000; j += 7) {
            const double z = j * 1e-3;
            const double g2 = (3 - z) * (3 - z) / ((1 - z) * (5 - z));
            tr.feed(g1 * g2, "x=" + std::to_string(x) + " z=" + std::to_string(z));
        }
    }
    r.swept = "lattice m+l <= p-1 and (x,z)-grid";
    seal(r, tr);
    return r;
}

BoundReport j12red_j11turq(const std::vector<int>& ps) {
    BoundReport r;
    r.lemma = "J12redJ11turq";
    r.description = "2|F11(p-m,2p-l)| / F12(p-m,p-l) < 1/6";
    r.bound = 1.0 / 6.0;
    Tracker tr(false);
    for (int p : ps) {
        for (int m = 1; m <= p - 2; ++m) {
            for (int l = 1; m + l <= p - 1; ++l) {
                const double num = 2.0 * std::abs(F11_kernel(p - m, 2 * p - l, p));
                const double den = F12_kernel(p - m, p - l, p);
                tr.feed(num / den, loc(p, -1, -1, m, l));
            }
        }
    }
    r.swept = "m+l <= p-1";
    seal(r, tr);
    return r;
}

BoundReport j11poslem_total(const std::vector<int>& ps, int a_cap) {
    BoundReport r;
    r.lemma = "J11poslem_total";
    r.description = "sum_a |F11(pa-m,p-l)| / F11(p-m,p-l) < 7/60";
    r.bound = 7.0 / 60.0;
    Tracker tr(false);
    for (int p : ps) {
        for (int m = 1; m <= p - 1; ++m) {
            for (int l = 1; l <= p - 1; ++l) {
                const double den = F11_kernel(p - m, p - l, p);
                double s = 0.0;
                for (int a = 2; a <= a_cap; ++a)
                    s += std::abs(F11_kernel(a * p - m, p - l, p)) / den;
                tr.feed(s, loc(p, -1, -1, m, l));
            }
        }
    }
    r.tail = 12.0 / (5.0 * std::pow(double(a_cap), 5.0));
    r.swept = "m,l in [1,p-1], a in [2,a_cap]";
    seal(r, tr);
    return r;
}

BoundReport l2lem(const std::vector<int>& ps, int a_cap) {
    BoundReport r;
    r.lemma = "L2lem";
    r.description = "2 sum_a |F2(pa+m,l)| / F2(p-m,l+m) < 189/320";
    r.bound = 189.0 / 320.0;
    Tracker tr(false);
    for (int p : ps) {
        for (int m = 1; m <= p - 2; ++m) {
            for (int l = 1; m + l <= p - 1; ++l) {
                const double den = F2_kernel(p - m, l + m, p);
                double s = 0.0;
                for (int a = 3; a <= a_cap; ++a)
                    s += 2.0 * std::abs(F2_kernel(a * p + m, l, p)) / den;
                tr.feed(s, loc(p, -1, -1, m, l));
            }
        }
    }
    r.tail = (27.0 / 16.0) / (double(a_cap) * a_cap - 4.0);
    r.swept = "m+l <= p-1, a in [3,a_cap]";
    seal(r, tr);
    return r;
}

BoundReport i_partpos1(const std::vector<int>& ps, int a_cap) {
    BoundReport r;
    r.lemma = "I_partpos1";
    r.description = "sum_a |F1(pa+k,pb+l)| / F1(k,pb+l) < 3/4 (b >= 3)";
    r.bound = 0.75;
    Tracker tr(false);
    for (int p : ps) {
        for (int b = 3; b <= 10; ++b) {
            for (int k = 1; k <= p - 2; ++k) {
                for (int l = 1; k + l <= p - 1; ++l) {
                    const double den = F1_kernel(k, b * p + l, p);
                    double s = 0.0;
                    for (int a = 2; a <= a_cap; ++a)
                        s += std::abs(F1_kernel(a * p + k, b * p + l, p)) / den;
                    tr.feed(std::abs(s), loc(p, -1, b, k, l));
                }
            }
        }
    }
    r.tail = 0.5 * (1.0 / a_cap + 1.0 / (a_cap + 1.0));
    r.swept = "b in [3,10], k+l <= p-1, a in [2,a_cap]";
    seal(r, tr);
    return r;
}

BoundReport i_partpos_single(const std::vector<int>& ps, int a, double bound,
                             const char* name) {
    BoundReport r;
    r.lemma = name;
    r.description = "|F1(p(a+1)-k,p-l)| / F1(p-k,p-l), single band";
    r.bound = bound;
    Tracker tr(false);
    for (int p : ps) {
        for (int k = 1; k <= p - 2; ++k) {
            for (int l = 1; k + l <= p - 1; ++l) {
                const double den = F1_kernel(p - k, p - l, p);
                const double num = std::abs(F1_kernel(p * (a + 1) - k, p - l, p));
                tr.feed(num / den, loc(p, a, -1, k, l));
            }
        }
    }
    r.swept = "k+l <= p-1";
    seal(r, tr);
    return r;
}

BoundReport i_partpos2(const std::vector<int>& ps, int a_cap) {
    BoundReport r;
    r.lemma = "I_partpos2";
    r.description = "sum_a |F1(p+k,pa+l)| / F1(p+k,p+l) < 1";
    r.bound = 1.0;
    Tracker tr(false);
    for (int p : ps) {
        for (int k = 1; k <= p - 2; ++k) {
            for (int l = 1; k + l <= p - 1; ++l) {
                const double den = F1_kernel(p + k, p + l, p);
                double s = 0.0;
                for (int a = 4; a <= a_cap; ++a)
                    s += std::abs(F1_kernel(p + k, a * p + l, p)) / den;
                tr.feed(s, loc(p, -1, -1, k, l));
            }
        }
    }
    r.tail = 16.0 / (double(a_cap) * a_cap);
    r.swept = "k+l <= p-1, a in [4,a_cap]";
    seal(r, tr);
    return r;
}

BoundReport i_partpos3_total(const std::vector<int>& ps, int a_cap) {
    BoundReport r;
    r.lemma = "I_partpos3_total";
    r.description = "sum_a |F1(ap-k,2p-l)| / F1(p-k,2p-l) < 17/81";
    r.bound = 17.0 / 81.0;
    Tracker tr(false);
    for (int p : ps) {
        for (int k = 1; k <= p - 2; ++k) {
            for (int l = 1; k + l <= p - 1; ++l) {
                const double den = std::abs(F1_kernel(p - k, 2 * p - l, p));
                double s = 0.0;
                for (int a = 3; a <= a_cap; ++a)
                    s += std::abs(F1_kernel(a * p - k, 2 * p - l, p)) / den;
                tr.feed(s, loc(p, -1, -1, k, l));
            }
        }
    }
    r.tail = 8.0 / (3.0 * std::pow(double(a_cap), 3.0));
    r.swept = "k+l <= p-1, a in [3,a_cap]";
    seal(r, tr);
    return r;
}

BoundReport i_partpos3_single(const std::vector<int>& ps) {
    BoundReport r;
    r.lemma = "I_partpos3_single";
    r.description = "|F1(p+k,3p+l)| / F1(p-k,2p-l) < 8/15";
    r.bound = 8.0 / 15.0;
    Tracker tr(false);
    for (int p : ps) {
        for (int k = 1; k <= p - 2; ++k) {
            for (int l = 1; k + l <= p - 1; ++l) {
                const double den = std::abs(F1_kernel(p - k, 2 * p - l, p));
                const double num = std::abs(F1_kernel(p + k, 3 * p + l, p));
                tr.feed(num / den, loc(p, -1, -1, k, l));
            }
        }
    }
    r.swept = "k+l <= p-1";
    seal(r, tr);
    return r;
}

BoundReport i_plus_l_pos1(const std::vector<int>& ps, int a_cap) {
    BoundReport r;
    r.lemma = "I_plus_L_pos1";
    r.description = "sum_a |F1(ap+k,2p+l)| / F2(p-k,p+k+l) < 1/2";
    r.bound = 0.5;
    Tracker tr(false);
    for (int p : ps) {
        for (int k = 1; k <= p - 2; ++k) {
            for (int l = 1; k + l <= p - 1; ++l) {
                const double den = F2_kernel(p - k, p + k + l, p);
                double s = 0.0;
                for (int a = 1; a <= a_cap; ++a)
                    s += std::abs(F1_kernel(a * p + k, 2 * p + l, p)) / den;
                tr.feed(s, loc(p, -1, -1, k, l));
            }
        }
    }
    r.tail = 2.0 / std::pow(double(a_cap), 3.0);
    r.swept = "k+l <= p-1, a in [1,a_cap]";
    seal(r, tr);
    return r;
}

BoundReport i_plus_l_single(const std::vector<int>& ps, bool second) {
    BoundReport r;
    r.lemma = second ? "I_plus_L_pos3" : "I_plus_L_pos2";
    r.description = second ? "|F1(2p-k,2p-l)| / F2(2p-k,p-l) < 1/9"
                           : "|F1(p-k,3p-l)| / F2(p-k,2p-l) < 1/5";
    r.bound = second ? 1.0 / 9.0 : 0.2;
    Tracker tr(false);
    for (int p : ps) {
        for (int k = 1; k <= p - 2; ++k) {
            for (int l = 1; k + l <= p - 1; ++l) {
                double num, den;
                if (second) {
                    num = std::abs(F1_kernel(2 * p - k, 2 * p - l, p));
                    den = F2_kernel(2 * p - k, p - l, p);
                } else {
                    num = std::abs(F1_kernel(p - k, 3 * p - l, p));
                    den = F2_kernel(p - k, 2 * p - l, p);
                }
                tr.feed(num / den, loc(p, -1, -1, k, l));
            }
        }
    }
    r.swept = "k+l <= p-1";
    seal(r, tr);
    return r;
}

BoundReport env_f2(const std::vector<int>&) {
    BoundReport r;
    r.lemma = "env_f2_y";
    r.description = "(1+y)^2/(3+y) < 1 on (0,1)";
    r.bound = 1.0;
    Tracker tr(false);
    for (int i = 1; i < 1000; ++i) {
        const double y = i * 1e-3;
        tr.feed((1 + y) * (1 + y) / (3 + y), "y=" + std::to_string(y));
    }
    r.swept = "y-grid (0,1) step 1e-3";
    seal(r, tr);
    return r;
}

BoundReport env_K(const std::vector<int>&) {
    // Footnote claim: max of 12 + xy - (x+y)^2 over
    // S = [3,inf)x[0,1] u [0,1]x[3,inf) with x+y >= 4 equals -1.
    BoundReport r;
    r.lemma = "env_K_footnote";
    r.description = "max of 12+xy-(x+y)^2 over S equals -1 (checked < -1+1e-6)";
    r.bound = -1.0 + 1e-6;
    Tracker tr(false);
    double closest = -1e300;
    for (int i = 0; i <= 1000; ++i) {
        const double y = i * 1e-3;
        for (int j = 0; j <= 4000; ++j) {
            const double x = 3.0 + j * 1e-3;
            if (x + y < 4.0) continue;
            const double f = 12.0 + x * y - (x + y) * (x + y);
            closest = std::max(closest, f);
        }
    }
    tr.feed(closest, "grid max");
    r.swept = "x in [3,7], y in [0,1], x+y >= 4, step 1e-3";
    seal(r, tr);
    return r;
}

}  // namespace

std::vector<BoundReport> lemma_ratio_suite(const std::vector<int>& ps, int a_cap) {
    std::vector<BoundReport> out;
    out.push_back(eq_5_17(ps, a_cap));
    out.push_back(a_eq_2(ps));
    out.push_back(pair_dominance(ps, "J12poslem1_dominance",
                                 [](int m, int l, int p) { return F12_kernel(m, l, p); }, 1));
    out.push_back(j12poslem2(ps, a_cap));
    out.push_back(j12_and_j11_1(ps, a_cap));
    out.push_back(j12_and_j11_2(ps, a_cap));
    out.push_back(j12_pos_to_j11_neg(ps));
    out.push_back(j12red_j11turq(ps));
    out.push_back(pair_dominance(ps, "J11poslem_dominance",
                                 [](int m, int l, int p) { return F11_kernel(m, l, p); }, 2));
    out.push_back(j11poslem_total(ps, a_cap));
    out.push_back(pair_dominance(ps, "II_pos1_dominance",
                                 [](int m, int l, int p) { return F2_kernel(m, l, p); }, 1));
    out.push_back(l2lem(ps, a_cap));
    out.push_back(i_partpos1(ps, a_cap));
    out.push_back(i_partpos_single(ps, 1, 1.0 / 3.0, "I_partpos_rel1"));
    out.push_back(i_partpos_single(ps, 2, 1.0 / 15.0, "I_partpos_rel2"));
    out.push_back(i_partpos2(ps, a_cap));
    out.push_back(i_partpos3_total(ps, a_cap));
    out.push_back(i_partpos3_single(ps));
    out.push_back(i_plus_l_pos1(ps, a_cap));
    out.push_back(i_plus_l_single(ps, false));
    out.push_back(i_plus_l_single(ps, true));
    out.push_back(env_f2(ps));
    out.push_back(env_K(ps));
    return out;
}

}  // namespace npelab::bounds
