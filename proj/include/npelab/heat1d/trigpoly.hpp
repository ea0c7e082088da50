#pragma once
// Trigonometric polynomials f(theta) = sum of amp*cos(h theta) / amp*sin(h theta).
// These are the 1D factor functions of the control field and of everything
// the series machinery integrates.

#include <string>
#include <vector>

namespace npelab::heat1d {

enum class Parity { Cos, Sin };

struct TrigTerm {
    int harmonic;   // h >= 0 for cos (h = 0 is the constant), h >= 1 for sin
    Parity parity;
    double amp;
};

class TrigPoly {
  public:
    TrigPoly() = default;
    explicit TrigPoly(std::vector<TrigTerm> terms);

    static TrigPoly constant(double a);
    static TrigPoly cosine(int h, double amp);
    static TrigPoly sine(int h, double amp);

    TrigPoly& add(const TrigTerm& t);
    TrigPoly operator+(const TrigPoly& other) const;
    TrigPoly operator*(double s) const;

    // d/dtheta
    TrigPoly derivative() const;

    double eval(double theta) const;

    const std::vector<TrigTerm>& terms() const { return terms_; }
    bool pure_cos() const;
    bool pure_sin() const;
    int max_harmonic() const;

    // Values used by the boundary hypotheses of the heat-derivative lemma.
    double value_at_pi() const { return eval(3.14159265358979323846); }

    std::string str() const;

  private:
    void merge(const TrigTerm& t);
    std::vector<TrigTerm> terms_;
};

// The recurring factor functions.
namespace factors {
TrigPoly one_plus_cos();    // 1 + cos
TrigPoly cos_plus_cos2();   // cos + cos 2
TrigPoly sin_only();        // sin
TrigPoly sin_half_sin2();   // sin + (1/2) sin 2
TrigPoly sin_two_sin2();    // sin + 2 sin 2
TrigPoly cos_only();        // cos
TrigPoly neg_cos2();        // -cos 2
}  // namespace factors

}  // namespace npelab::heat1d
