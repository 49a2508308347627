// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace copo::kernels {

/// Vectorized backends for the dense inner loops (dot products and
/// axpy updates used by tensor contraction and the power iteration).
/// The scalar kernels are the reference; SIMD variants must agree with
/// them up to floating-point reassociation.
enum class Backend {
    Scalar,
    Avx2,  // x86-64, AVX2 + FMA
    Neon,  // aarch64
};

std::string_view backend_name(Backend b);

/// Backends usable on this machine (always contains Scalar).
std::vector<Backend> supported_backends();

/// Currently dispatched backend. The best supported backend is picked
/// on first use.
Backend active_backend();

/// Force a backend (used by equivalence tests). Returns false and
/// leaves the dispatch unchanged if the backend is not supported here.
bool set_backend(Backend b);

/// sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t len);

/// y[i] += alpha * x[i]
void axpy(double alpha, const double* x, double* y, std::size_t len);

}  // namespace copo::kernels
