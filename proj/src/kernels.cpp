// SPDX-License-Identifier: Apache-2.0
#include "copo/kernels.hpp"

#include <atomic>

#if defined(__x86_64__) || defined(_M_X64)
#define COPO_X86_64 1
#include <immintrin.h>
#else
#define COPO_X86_64 0
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
#define COPO_AARCH64 1
#include <arm_neon.h>
#else
#define COPO_AARCH64 0
#endif

namespace copo::kernels {

namespace {

// ---------------------------------------------------------------------------
// Scalar reference kernels
// ---------------------------------------------------------------------------

double dot_scalar(const double* a, const double* b, std::size_t len) {
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) y[i] += alpha * x[i];
}

// ---------------------------------------------------------------------------
// AVX2 + FMA kernels (function-level target attributes, so the TU builds
// without -mavx2 and the binary still runs on older cores)
// ---------------------------------------------------------------------------

#if COPO_X86_64

__attribute__((target("avx2,fma"))) double dot_avx2(const double* a, const double* b,
                                                    std::size_t len) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= len; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    }
    acc0 = _mm256_add_pd(acc0, acc1);
    __m128d lo = _mm256_castpd256_pd128(acc0);
    __m128d hi = _mm256_extractf128_pd(acc0, 1);
    lo = _mm_add_pd(lo, hi);
    double acc = _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
    for (; i < len; ++i) acc += a[i] * b[i];
    return acc;
}

__attribute__((target("avx2,fma"))) void axpy_avx2(double alpha, const double* x, double* y,
                                                   std::size_t len) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        _mm256_storeu_pd(y + i,
                         _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
        _mm256_storeu_pd(
            y + i + 4,
            _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4)));
    }
    for (; i + 4 <= len; i += 4) {
        _mm256_storeu_pd(y + i,
                         _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    }
    for (; i < len; ++i) y[i] += alpha * x[i];
}

bool avx2_supported() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

#endif  // COPO_X86_64

// ---------------------------------------------------------------------------
// NEON kernels
// ---------------------------------------------------------------------------

#if COPO_AARCH64

double dot_neon(const double* a, const double* b, std::size_t len) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    for (; i + 2 <= len; i += 2) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < len; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t len) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    }
    for (; i < len; ++i) y[i] += alpha * x[i];
}

#endif  // COPO_AARCH64

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

struct Vtable {
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
};

constexpr Vtable kScalar{dot_scalar, axpy_scalar};

Vtable vtable_for(Backend b) {
    switch (b) {
#if COPO_X86_64
        case Backend::Avx2:
            return {dot_avx2, axpy_avx2};
#endif
#if COPO_AARCH64
        case Backend::Neon:
            return {dot_neon, axpy_neon};
#endif
        default:
            return kScalar;
    }
}

Backend detect_best() {
#if COPO_X86_64
    if (avx2_supported()) return Backend::Avx2;
#endif
#if COPO_AARCH64
    return Backend::Neon;
#endif
    return Backend::Scalar;
}

struct Dispatch {
    std::atomic<Backend> backend;
    Vtable table;
    Dispatch() : backend(detect_best()), table(vtable_for(backend.load())) {}
};

Dispatch& dispatch() {
    static Dispatch d;
    return d;
}

}  // namespace

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::Avx2:
            return "avx2";
        case Backend::Neon:
            return "neon";
        default:
            return "scalar";
    }
}

std::vector<Backend> supported_backends() {
    std::vector<Backend> out{Backend::Scalar};
#if COPO_X86_64
    if (avx2_supported()) out.push_back(Backend::Avx2);
#endif
#if COPO_AARCH64
    out.push_back(Backend::Neon);
#endif
    return out;
}

Backend active_backend() { return dispatch().backend.load(); }

bool set_backend(Backend b) {
    for (Backend s : supported_backends()) {
        if (s == b) {
            dispatch().table = vtable_for(b);
            dispatch().backend.store(b);
            return true;
        }
    }
    return false;
}

double dot(const double* a, const double* b, std::size_t len) {
    return dispatch().table.dot(a, b, len);
}

void axpy(double alpha, const double* x, double* y, std::size_t len) {
    dispatch().table.axpy(alpha, x, y, len);
}

}  // namespace copo::kernels
