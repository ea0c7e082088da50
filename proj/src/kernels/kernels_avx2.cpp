// AVX2+FMA kernel variants. This TU is the only one compiled with -mavx2;
// it is selected at runtime, so the rest of the library stays portable.

#include "npelab/kernels/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cmath>

namespace npelab::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

double dot3_avx2(const double* x, const double* y, const double* z, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d xy = _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        acc = _mm256_fmadd_pd(xy, _mm256_loadu_pd(z + i), acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i] * y[i] * z[i];
    return s;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(y + i, r);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void xpby_avx2(const double* x, double b, double* y, std::size_t n) {
    const __m256d bv = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_fmadd_pd(bv, _mm256_loadu_pd(y + i), _mm256_loadu_pd(x + i));
        _mm256_storeu_pd(y + i, r);
    }
    for (; i < n; ++i) y[i] = x[i] + b * y[i];
}

void stencil7_avx2(double* out, const double* in, const double* mask,
                   double c0, double c1,
                   std::size_t nx, std::size_t ny, std::size_t nz) {
    const std::size_t sy = nx, sz = nx * ny;
    const __m256d c0v = _mm256_set1_pd(c0);
    const __m256d c1v = _mm256_set1_pd(c1);
    for (std::size_t z = 1; z + 1 < nz; ++z) {
        for (std::size_t y = 1; y + 1 < ny; ++y) {
            const std::size_t row = z * sz + y * sy;
            std::size_t x = 1;
            for (; x + 4 <= nx - 1; x += 4) {
                const std::size_t i = row + x;
                __m256d nb = _mm256_add_pd(_mm256_loadu_pd(in + i + 1),
                                           _mm256_loadu_pd(in + i - 1));
                nb = _mm256_add_pd(nb, _mm256_add_pd(_mm256_loadu_pd(in + i + sy),
                                                     _mm256_loadu_pd(in + i - sy)));
                nb = _mm256_add_pd(nb, _mm256_add_pd(_mm256_loadu_pd(in + i + sz),
                                                     _mm256_loadu_pd(in + i - sz)));
                __m256d r = _mm256_fmadd_pd(c0v, _mm256_loadu_pd(in + i),
                                            _mm256_mul_pd(c1v, nb));
                r = _mm256_mul_pd(r, _mm256_loadu_pd(mask + i));
                _mm256_storeu_pd(out + i, r);
            }
            for (; x + 1 < nx; ++x) {
                const std::size_t i = row + x;
                double nb = in[i + 1] + in[i - 1] + in[i + sy] + in[i - sy] +
                            in[i + sz] + in[i - sz];
                out[i] = mask[i] * (c0 * in[i] + c1 * nb);
            }
        }
    }
}

void trig_eval_avx2(const double* x, std::size_t n,
                    const double* ca, const double* sa, std::size_t K,
                    double* out) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        alignas(32) double c1a[4], s1a[4];
        for (int l = 0; l < 4; ++l) {
            c1a[l] = std::cos(x[i + l]);
            s1a[l] = std::sin(x[i + l]);
        }
        const __m256d c1 = _mm256_load_pd(c1a);
        const __m256d s1 = _mm256_load_pd(s1a);
        __m256d ck = _mm256_set1_pd(1.0);
        __m256d sk = _mm256_setzero_pd();
        __m256d acc = _mm256_set1_pd(ca[0]);
        for (std::size_t k = 1; k <= K; ++k) {
            const __m256d cn = _mm256_fmsub_pd(ck, c1, _mm256_mul_pd(sk, s1));
            const __m256d sn = _mm256_fmadd_pd(sk, c1, _mm256_mul_pd(ck, s1));
            ck = cn;
            sk = sn;
            acc = _mm256_fmadd_pd(_mm256_set1_pd(ca[k]), ck, acc);
            acc = _mm256_fmadd_pd(_mm256_set1_pd(sa[k]), sk, acc);
        }
        _mm256_storeu_pd(out + i, acc);
    }
    for (; i < n; ++i) {
        const double c1 = std::cos(x[i]);
        const double s1 = std::sin(x[i]);
        double ck = 1.0, sk = 0.0, acc = ca[0];
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

const Ops kAvx2 = {dot_avx2, dot3_avx2, axpy_avx2, xpby_avx2,
                   stencil7_avx2, trig_eval_avx2};

}  // namespace

const Ops* avx2_ops_impl() { return &kAvx2; }

}  // namespace npelab::kernels

#else

namespace npelab::kernels {
const Ops* avx2_ops_impl() { return nullptr; }
}  // namespace npelab::kernels

#endif
