// SPDX-License-Identifier: Apache-2.0
#include "copo/cones.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

namespace copo {

namespace {

std::size_t diag_stride(const SymTensor& a) {
    std::size_t s = 0;
    for (std::size_t j = 0; j < a.order(); ++j) s = s * a.dim() + 1;
    return s;
}

bool entrywise_nonnegative(const SymTensor& a) {
    for (double v : a.values()) {
        if (v < 0.0) return false;
    }
    return true;
}

}  // namespace

SymTensor n_part(const SymTensor& a) {
    std::vector<double> values(a.size(), 0.0);
    const std::size_t stride = diag_stride(a);
    for (std::size_t f = 0; f < values.size(); ++f) {
        const bool diagonal = (f % stride == 0) && (f / stride < a.dim());
        if (!diagonal && a.values()[f] > 0.0) values[f] = a.values()[f];
    }
    // orbits share sign and value, so this is already symmetric
    return symmetrized(a.order(), a.dim(), std::move(values));
}

bool member(const SymTensor& a, ConeKind cone, const PowerConfig& cfg, double tol_psd) {
    if (cone == ConeKind::NonNeg) return entrywise_nonnegative(a);

    // Z = A - N(A) = eta*I - B with eta the largest diagonal of Z and
    // B >= 0. For even order Z is PSD iff eta - rho(B) >= 0; for odd
    // order Z is copositive under the same comparison. Acceptance demands
    // a positive margin, so bound error can never certify across the
    // boundary and exact-boundary tensors (margin 0) are rejected rather
    // than decided by rounding luck.
    const std::size_t n = a.dim();
    const std::size_t stride = diag_stride(a);

    std::vector<double> bvals(a.size());
    double eta = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) eta = std::max(eta, a.values()[i * stride]);
    for (std::size_t f = 0; f < bvals.size(); ++f) {
        const double v = a.values()[f];
        bvals[f] = std::min(v, 0.0);  // off-diagonal Z-part: keep only <= 0
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t f = i * stride;
        bvals[f] = a.values()[f];  // diagonal passes through to Z
    }
    // B = eta*I - Z, stored directly
    for (std::size_t f = 0; f < bvals.size(); ++f) bvals[f] = -bvals[f];
    for (std::size_t i = 0; i < n; ++i) bvals[i * stride] += eta;

    const SymTensor b = symmetrized(a.order(), n, std::move(bvals));
    const std::optional<bool> ok = detail::rho_at_most(b, eta - tol_psd, cfg);
    return ok.value_or(false);
}

}  // namespace copo
