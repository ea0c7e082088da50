// Scalar reference kernels. These define the semantics; the SIMD variants
// must agree with them to round-off.

#include "npelab/kernels/kernels.hpp"

#include <cmath>

namespace npelab::kernels {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

double dot3_scalar(const double* x, const double* y, const double* z, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i] * z[i];
    return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void xpby_scalar(const double* x, double b, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + b * y[i];
}

void stencil7_scalar(double* out, const double* in, const double* mask,
                     double c0, double c1,
                     std::size_t nx, std::size_t ny, std::size_t nz) {
    const std::size_t sx = 1, sy = nx, sz = nx * ny;
    for (std::size_t z = 1; z + 1 < nz; ++z) {
        for (std::size_t y = 1; y + 1 < ny; ++y) {
            std::size_t row = z * sz + y * sy;
            for (std::size_t x = 1; x + 1 < nx; ++x) {
                std::size_t i = row + x;
                double nb = in[i + sx] + in[i - sx] + in[i + sy] + in[i - sy] +
                            in[i + sz] + in[i - sz];
                out[i] = mask[i] * (c0 * in[i] + c1 * nb);
            }
        }
    }
}

void trig_eval_scalar(const double* x, std::size_t n,
                      const double* ca, const double* sa, std::size_t K,
                      double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double c1 = std::cos(x[i]);
        const double s1 = std::sin(x[i]);
        // cos(kx), sin(kx) by the angle-addition recurrence
        double ck = 1.0, sk = 0.0;
        double acc = ca[0];  // k = 0 term; sin(0)=0
        for (std::size_t k = 1; k <= K; ++k) {
            const double cn = ck * c1 - sk * s1;
            const double sn = sk * c1 + ck * s1;
            ck = cn;
            sk = sn;
            acc += ca[k] * ck + sa[k] * sk;
        }
        out[i] = acc;
    }
}

const Ops kScalar = {dot_scalar, dot3_scalar, axpy_scalar, xpby_scalar,
                     stencil7_scalar, trig_eval_scalar};

}  // namespace

const Ops& scalar_ops() { return kScalar; }

}  // namespace npelab::kernels
