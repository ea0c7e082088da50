#pragma once
// Data-parallel inner loops used throughout the library: reductions, vector
// updates, the masked 7-point Laplacian, and trigonometric series evaluation.
//
// Every kernel exists as a scalar reference implementation and (on x86-64)
// an AVX2+FMA variant. The active backend is chosen once at runtime from
// CPUID; NPELAB_KERNEL=scalar|avx2 overrides it. The two backends are
// equivalence-tested against each other in tests/test_kernels.cpp.

#include <cstddef>
#include <string>

namespace npelab::kernels {

struct Ops {
    // sum_i x[i]*y[i]
    double (*dot)(const double* x, const double* y, std::size_t n);
    // sum_i x[i]*y[i]*z[i]
    double (*dot3)(const double* x, const double* y, const double* z, std::size_t n);
    // y[i] += a*x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    // y[i] = x[i] + b*y[i]   (CG direction update)
    void (*xpby)(const double* x, double b, double* y, std::size_t n);
    // out[i] = mask[i] * (c0*in[i] + c1*sum of 6 axis neighbours), interior
    // slab z in [1, nz-2]; in[] must be zero on masked-out nodes.
    void (*stencil7)(double* out, const double* in, const double* mask,
                     double c0, double c1,
                     std::size_t nx, std::size_t ny, std::size_t nz);
    // out[i] = sum_k ( ca[k]*cos(k*x[i]) + sa[k]*sin(k*x[i]) ), k = 0..K.
    // Uses the angle-addition recurrence per point.
    void (*trig_eval)(const double* x, std::size_t n,
                      const double* ca, const double* sa, std::size_t K,
                      double* out);
};

// Active backend (set on first use).
const Ops& ops();

// Name of the active backend: "scalar" or "avx2".
const std::string& backend_name();

// Backends exposed for equivalence testing.
const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when unavailable on this build/CPU

}  // namespace npelab::kernels
