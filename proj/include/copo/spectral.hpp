// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "copo/tensor.hpp"

namespace copo {

/// Settings for the higher-order power iteration.
struct PowerConfig {
    double tol = 1e-10;            // absolute gap between the eigenvalue bounds
    std::size_t max_sweeps = 10000;
    double perturbation = 1e-12;   // epsilon added to every entry so reducible
                                   // inputs stay on the convergent path

    void validate() const;
};

/// Result of a spectral-radius run. `lower`/`upper` are the rigorous
/// Collatz-Wielandt bounds for the perturbed iterate; the true radius of
/// the unperturbed tensor lies in
/// [max(0, lower - perturbation * dim^(order-1)), upper].
struct SpectralResult {
    double rho = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    std::size_t sweeps = 0;
    bool converged = false;
    std::vector<double> eigvec;  // 1-norm-normalized iterate at exit
};

/// Spectral radius of a nonnegative symmetric tensor by the higher-order
/// power iteration x <- (B' x^{m-1})^{[1/(m-1)]}, B' = B + eps * E.
/// Throws std::invalid_argument if B has a negative entry; non-convergence
/// is reported through `converged`, never thrown.
SpectralResult spectral_radius(const SymTensor& b, const PowerConfig& cfg = {});

/// Minimum H-eigenvalue of a Z-tensor (all off-diagonal entries <= 0),
/// via the shift identity lambda_min = t - rho(t*I - Z) with t the largest
/// diagonal entry. Throws if Z has a positive off-diagonal entry.
double z_min_h_eigenvalue(const SymTensor& z, const PowerConfig& cfg = {});

namespace detail {

/// Decide rho(B) <= threshold without always iterating to full
/// convergence: the monotone bounds allow an early verdict as soon as
/// upper <= threshold (true) or lower > threshold (false). Returns
/// nullopt when the sweep budget runs out with the bounds still
/// straddling the threshold.
std::optional<bool> rho_at_most(const SymTensor& b, double threshold, const PowerConfig& cfg);

}  // namespace detail

}  // namespace copo
