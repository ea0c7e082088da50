#pragma once
// The J-functionals as series: heat-solution table bundle, the decomposed
// J1 pieces, the A/B lattice sum, and their rigorous truncation tails.

#include <memory>

#include "npelab/heat1d/heat_solution.hpp"

namespace npelab::bounds {

// Heat solutions of the seven windowed initial data the paper's series
// live on, all at one (p, K).
struct Tables {
    int p, K;
    heat1d::Heat1DSolution C1;     // chi (1 + cos p.)
    heat1d::Heat1DSolution C2;     // chi (cos p. + cos 2p.)
    heat1d::Heat1DSolution Ssin;   // chi sin p.
    heat1d::Heat1DSolution Sg;     // chi (sin p. + 1/2 sin 2p.)
    heat1d::Heat1DSolution SgD;    // chi (sin p. + 2 sin 2p.)
    heat1d::Heat1DSolution Se;     // chi cos p.
    heat1d::Heat1DSolution Sb1;    // -(chi cos 2p.)
    heat1d::Heat1DSolution Scomb;  // chi (72 + 30 cos p. - 42 cos 2p.)

    Tables(int p, int K);
};

struct SeriesValue {
    double value = 0.0;
    double tail = 0.0;  // rigorous bound on the discarded part at this t
};

// J1..J4 by the resonance engine (with tails).
SeriesValue eval_J(const Tables& tb, int idx, double t);

// Q(t) and R(t) of the ODE section.
SeriesValue eval_Q(const Tables& tb, double t);
SeriesValue eval_R(const Tables& tb, double t);

// tilde J(t) = -int S^2(chi sin p.) S(chi cos 2p.) dx.
SeriesValue eval_tilde_J(const Tables& tb, double t);

// The A/B lattice sum J(t). `matched` restricts the index set to the one
// induced by sine-index truncation K (for the exact identity against
// eval_tilde_J); otherwise the box k,l <= K is used and the tail accounts
// for the rest.
SeriesValue eval_J_lattice(int p, int K, double t, bool matched);

// J1 decomposition pieces (box partial sums + tails at this t).
SeriesValue eval_J10(int p, int K, double t);
SeriesValue eval_J11(int p, int K, double t);
SeriesValue eval_J12(int p, int K, double t);

// Triangle partial of J11 ({m,l >= 1, m+l <= K}) matching the index set of
// the direct triple-product evaluation of J1.
double eval_J11_triangle(int p, int K, double t);
double eval_J10_box(int p, int K, double t);
double eval_J12_box(int p, int K, double t);

}  // namespace npelab::bounds
