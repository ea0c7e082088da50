#pragma once
// The trilinear form Psi(y1,y2,y3) = integral of ((y1.grad) curl^-1 y2) . y3
// and the normalization functional Phi(w) = Psi(w,w,w) / ||w||^2.
//
// Two routes: a pseudo-spectral evaluation on a grid fine enough that the
// quadrature is exact for the truncated fields (n >= 3N+1), and the exact
// triple convolution over mode pairs, which serves as the oracle at small N.

#include <array>
#include <vector>

#include "npelab/spectral/field.hpp"

namespace npelab::spectral {

enum class PsiMethod { PseudoSpectral, DirectSum };

double psi_trilinear(const SpectralField3& y1, const SpectralField3& y2,
                     const SpectralField3& y3, PsiMethod method);

inline double psi(const SpectralField3& y, PsiMethod m = PsiMethod::PseudoSpectral) {
    return psi_trilinear(y, y, y, m);
}

// Phi(w) = Psi(w,w,w)/||w||^2 for ||w||^2 above the zero-field threshold,
// 0 otherwise.
double phi_functional(const SpectralField3& w);

// Zero-field threshold on ||w||^2.
double phi_zero_threshold();

// Grid bundle for one field: components and the nine derivatives of its
// curl^-1. Lets mixed trilinears reuse transforms (the stabilization search
// evaluates eight of them per time sample).
struct FieldGrids {
    int n = 0;
    std::array<std::vector<double>, 3> y;
    std::array<std::array<std::vector<double>, 3>, 3> dv;  // dv[j][m] = d_j (curl^-1 .)_m
};

FieldGrids make_field_grids(const SpectralField3& f, int n);

// integral of (a.grad)(curl^-1 b) . c evaluated from prepared grids.
double psi_from_grids(const FieldGrids& a, const FieldGrids& b, const FieldGrids& c);

// Grid size used by the pseudo-spectral route for lattice radius N.
int psi_grid_size(int N);

}  // namespace npelab::spectral
