#include "npelab/heat1d/trigpoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace npelab::heat1d {

TrigPoly::TrigPoly(std::vector<TrigTerm> terms) {
    for (const auto& t : terms) merge(t);
}

TrigPoly TrigPoly::constant(double a) { return TrigPoly({{0, Parity::Cos, a}}); }
TrigPoly TrigPoly::cosine(int h, double amp) { return TrigPoly({{h, Parity::Cos, amp}}); }
TrigPoly TrigPoly::sine(int h, double amp) { return TrigPoly({{h, Parity::Sin, amp}}); }

void TrigPoly::merge(const TrigTerm& t) {
    if (t.harmonic < 0 || (t.parity == Parity::Sin && t.harmonic == 0))
        throw std::invalid_argument("TrigPoly: bad harmonic");
    if (!std::isfinite(t.amp)) throw std::invalid_argument("TrigPoly: non-finite amplitude");
    for (auto& u : terms_) {
        if (u.harmonic == t.harmonic && u.parity == t.parity) {
            u.amp += t.amp;
            return;
        }
    }
    if (t.amp != 0.0) terms_.push_back(t);
}

TrigPoly& TrigPoly::add(const TrigTerm& t) {
    merge(t);
    return *this;
}

TrigPoly TrigPoly::operator+(const TrigPoly& other) const {
    TrigPoly out = *this;
    for (const auto& t : other.terms_) out.merge(t);
    return out;
}

TrigPoly TrigPoly::operator*(double s) const {
    TrigPoly out = *this;
    for (auto& t : out.terms_) t.amp *= s;
    return out;
}

TrigPoly TrigPoly::derivative() const {
    TrigPoly out;
    for (const auto& t : terms_) {
        if (t.harmonic == 0) continue;
        if (t.parity == Parity::Cos)
            out.merge({t.harmonic, Parity::Sin, -t.amp * t.harmonic});
        else
            out.merge({t.harmonic, Parity::Cos, t.amp * t.harmonic});
    }
    return out;
}

double TrigPoly::eval(double theta) const {
    double acc = 0.0;
    for (const auto& t : terms_)
        acc += t.amp * (t.parity == Parity::Cos ? std::cos(t.harmonic * theta)
                                                : std::sin(t.harmonic * theta));
    return acc;
}

bool TrigPoly::pure_cos() const {
    for (const auto& t : terms_)
        if (t.parity == Parity::Sin) return false;
    return true;
}

bool TrigPoly::pure_sin() const {
    for (const auto& t : terms_)
        if (t.parity == Parity::Cos) return false;
    return true;
}

int TrigPoly::max_harmonic() const {
    int h = 0;
    for (const auto& t : terms_) h = std::max(h, t.harmonic);
    return h;
}

std::string TrigPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << t.amp << (t.parity == Parity::Cos ? "*cos(" : "*sin(") << t.harmonic << "t)";
    }
    return first ? "0" : os.str();
}

namespace factors {
TrigPoly one_plus_cos() { return TrigPoly({{0, Parity::Cos, 1.0}, {1, Parity::Cos, 1.0}}); }
TrigPoly cos_plus_cos2() { return TrigPoly({{1, Parity::Cos, 1.0}, {2, Parity::Cos, 1.0}}); }
TrigPoly sin_only() { return TrigPoly({{1, Parity::Sin, 1.0}}); }
TrigPoly sin_half_sin2() { return TrigPoly({{1, Parity::Sin, 1.0}, {2, Parity::Sin, 0.5}}); }
TrigPoly sin_two_sin2() { return TrigPoly({{1, Parity::Sin, 1.0}, {2, Parity::Sin, 2.0}}); }
TrigPoly cos_only() { return TrigPoly({{1, Parity::Cos, 1.0}}); }
TrigPoly neg_cos2() { return TrigPoly({{2, Parity::Cos, -1.0}}); }
}  // namespace factors

}  // namespace npelab::heat1d
