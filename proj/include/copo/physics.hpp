// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "copo/detector.hpp"
#include "copo/tensor.hpp"

namespace copo {

/// Quartic couplings of the Z3-symmetric two-doublet + complex-singlet
/// potential. ls12 enters the tensor only through |ls12|.
struct QuarticCouplings {
    double l1 = 0.0;
    double l2 = 0.0;
    double ls = 0.0;
    double l3 = 0.0;
    double l4 = 0.0;
    double ls1 = 0.0;
    double ls2 = 0.0;
    double ls12 = 0.0;

    /// Couplings with |value| > 4*pi (perturbativity advisory; never
    /// enforced).
    std::vector<std::string> perturbativity_warnings() const;
};

/// How the mixed s^2 h1 h2 entry treats the orbit parameter rho.
/// Listed: the explicit entry table (V_1233 = -|ls12|/12, rho only in
/// V_1122). Monomial: V_1233 = -|ls12| rho / 12, so the form reproduces
/// the potential's monomials exactly.
enum class CouplingMode {
    Listed,
    Monomial,
};

/// Closed-form stationary-point data of the potential. `rho_imaginary`
/// marks a rho whose square came out negative (reported by magnitude);
/// `degenerate` marks a vanishing shared denominator t.
struct AnalyticStability {
    double rho = 0.0;
    bool rho_imaginary = false;
    bool degenerate = false;
    double h1_sq = 0.0;
    double h2_sq = 0.0;
    double s_sq = 0.0;
    double v_min = 0.0;
    double t = 0.0;
};

/// Order-4 dimension-3 coupling tensor in field magnitudes (h1, h2, s)
/// at a fixed orbit parameter rho in [0, 1].
SymTensor coupling_tensor(const QuarticCouplings& c, double rho,
                          CouplingMode mode = CouplingMode::Listed);

AnalyticStability analytic_stationary(const QuarticCouplings& c);

enum class Stability {
    Yes,
    No,
    Undecided,
};

const char* stability_name(Stability s);

struct StabilityReport {
    Stability result = Stability::Undecided;
    std::vector<std::pair<double, Verdict>> per_rho;
    AnalyticStability analytic;
};

/// Scan the coupling tensor over the rho grid with the copositivity
/// detector: Yes iff every grid point is certified copositive, No iff any
/// point has a witness, Undecided otherwise. The analytic block rides
/// along for cross-reporting. Throws on an empty grid or grid values
/// outside [0, 1].
StabilityReport vacuum_stability(const QuarticCouplings& c, const DetectorConfig& cfg,
                                 std::span<const double> rho_grid,
                                 CouplingMode mode = CouplingMode::Listed);

/// points equally spaced values covering [0, 1].
std::vector<double> uniform_rho_grid(std::size_t points = 21);

}  // namespace copo
