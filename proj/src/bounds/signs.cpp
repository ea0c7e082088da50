#include "npelab/bounds/signs.hpp"

#include <sstream>

#include "npelab/bounds/coeff_tables.hpp"

namespace npelab::bounds {

namespace {

int sgn(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Factor signs straight from the sign lemmas (band-wise, with the resonant
// values special-cased) -- independent of the closed-form values.
int sign_c(int k, int p) {
    if (k % p == 0) return k == p ? 1 : 0;
    const int a = k / p;
    if (a <= 1) return 1;
    return (a % 2 == 0) ? -1 : 1;
}
int sign_d(int k, int p) {
    if (k % p == 0) return (k == p || k == 2 * p) ? 1 : 0;
    const int a = k / p;
    if (a <= 2) return 1;
    return (a % 2 == 1) ? -1 : 1;
}
int sign_A(int k, int p) {
    if (k % p == 0) return k == p ? 1 : 0;
    const int a = k / p;
    if (a == 0) return 1;
    return (a % 2 == 1) ? 1 : -1;
}
int sign_B(int k, int p) {
    if (k % p == 0) return k == 2 * p ? -1 : 0;
    const int a = k / p;
    if (a <= 1) return (a == 0) ? 1 : -1;
    return (a % 2 == 1) ? 1 : -1;
}

// Sign of a non-resonant point by the lemma's region predicate. The band
// indices a = floor(m/p), b = floor(l/p) select the square; T flags the
// lower (m + l < p(a+b+1)) half.
int predict_cdc(int m, int l, int p) {
    const int a = m / p, b = l / p;
    const int T = (m + l < p * (a + b + 1)) ? 1 : ((m + l > p * (a + b + 1)) ? -1 : 0);
    if (T == 0) return 0;  // diagonal resonance m+l = multiple of p is a zero of c
    if (a == 0 && b == 0) return 1;
    const bool inverted = (a == 0 && b >= 2) || (a >= 1 && b == 1);
    return inverted ? -T : T;
}

int predict_ccd(int m, int l, int p) {
    const int a = m / p, b = l / p;
    if (a >= 1 && b >= 1) {
        const int thr = p * (a + b + 1);
        return (m + l < thr) ? 1 : ((m + l > thr) ? -1 : 0);
    }
    if ((a >= 2 && b == 0) || (a == 0 && b >= 2)) {
        const int thr = p * (std::max(a, b) + 1);
        return (m + l < thr) ? -1 : ((m + l > thr) ? 1 : 0);
    }
    return 1;  // (0,0), (0,1), (1,0): m + l < 3p holds throughout
}

int predict_AAB(int k, int l, int p) {
    const int a = k / p, b = l / p;
    if (a == 0 && b == 0) return 1;
    if (a == 0 && b == 1) {
        const int thr = 2 * p;
        return (k + l < thr) ? -1 : ((k + l > thr) ? 1 : 0);
    }
    if (a == 0 && b >= 2) {
        const int thr = p * (b + 1);
        return (k + l < thr) ? 1 : ((k + l > thr) ? -1 : 0);
    }
    const int thr = p * (a + b + 1);
    const int T = (k + l < thr) ? 1 : ((k + l > thr) ? -1 : 0);
    if (T == 0) return 0;
    if (a >= 1 && b >= 2) return -T;
    return T;  // a >= 1, b in {0, 1}
}

int predict_AAB2(int k, int l, int p) {
    const int a = k / p, b = l / p;
    if (a >= 1 && b >= 1) {
        const int thr = p * (a + b + 1);
        return (k + l < thr) ? 1 : ((k + l > thr) ? -1 : 0);
    }
    if ((a >= 2 && b == 0) || (a == 0 && b >= 2)) {
        const int thr = p * (std::max(a, b) + 1);
        return (k + l < thr) ? -1 : ((k + l > thr) ? 1 : 0);
    }
    if (a == 0 && b == 0) {
        return (k + l < p) ? -1 : ((k + l > p) ? 1 : 0);
    }
    return 1;  // (p,2p)x(0,p) and (0,p)x(p,2p)
}

}  // namespace

int predicted_sign(SignKind kind, int m, int l, int p) {
    // On band boundaries (any index a multiple of p) the open-square region
    // lemmas do not apply; predict by the factor-sign lemmas instead. This
    // also produces the resonant zero lines.
    if (m % p == 0 || l % p == 0 || (m + l) % p == 0) {
        switch (kind) {
            case SignKind::CDC:
                return sign_c(m, p) * sign_d(l, p) * sign_c(m + l, p);
            case SignKind::CCD:
                return sign_c(m, p) * sign_c(l, p) * sign_d(m + l, p);
            case SignKind::AAB:
                return sign_A(m, p) * sign_A(m + l, p) * sign_B(l, p);
            case SignKind::AAB2:
                return -sign_A(m, p) * sign_A(l, p) * sign_B(m + l, p);
        }
    }
    switch (kind) {
        case SignKind::CDC:
            return predict_cdc(m, l, p);
        case SignKind::CCD:
            return predict_ccd(m, l, p);
        case SignKind::AAB:
            return predict_AAB(m, l, p);
        case SignKind::AAB2:
            return predict_AAB2(m, l, p);
    }
    return 0;
}

int actual_sign(SignKind kind, int m, int l, int p) {
    switch (kind) {
        case SignKind::CDC:
            return sgn(F11_kernel(m, l, p));
        case SignKind::CCD:
            return sgn(F12_kernel(m, l, p));
        case SignKind::AAB:
            return sgn(F1_kernel(m, l, p));
        case SignKind::AAB2:
            return sgn(F2_kernel(m, l, p));
    }
    return 0;
}

SignMapResult check_sign_map(SignKind kind, int p, int extent) {
    SignMapResult res{kind, p, extent, 0, {}};
    for (int m = 1; m <= extent; ++m) {
        for (int l = 1; l <= extent; ++l) {
            const int got = actual_sign(kind, m, l, p);
            const int want = predicted_sign(kind, m, l, p);
            if (got != want) {
                ++res.mismatches;
                if (res.mismatch_list.size() < 32) {
                    std::ostringstream os;
                    os << m << "," << l << ": got " << got << " want " << want;
                    res.mismatch_list.push_back(os.str());
                }
            }
        }
    }
    return res;
}

std::string sign_map_csv(SignKind kind, int p, int extent) {
    std::ostringstream os;
    os << "m,l,sign,value\n";
    for (int m = 1; m <= extent; ++m)
        for (int l = 1; l <= extent; ++l) {
            double v = 0.0;
            switch (kind) {
                case SignKind::CDC: v = F11_kernel(m, l, p); break;
                case SignKind::CCD: v = F12_kernel(m, l, p); break;
                case SignKind::AAB: v = F1_kernel(m, l, p); break;
                case SignKind::AAB2: v = F2_kernel(m, l, p); break;
            }
            os << m << "," << l << "," << sgn(v) << "," << v << "\n";
        }
    return os.str();
}

std::string sign_kind_name(SignKind kind) {
    switch (kind) {
        case SignKind::CDC: return "cdc";
        case SignKind::CCD: return "ccd";
        case SignKind::AAB: return "AAB";
        case SignKind::AAB2: return "AAB2";
    }
    return "?";
}

}  // namespace npelab::bounds
