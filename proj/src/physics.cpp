// SPDX-License-Identifier: Apache-2.0
#include "copo/physics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace copo {

std::vector<std::string> QuarticCouplings::perturbativity_warnings() const {
    const double cap = 4.0 * std::numbers::pi;
    const std::pair<const char*, double> named[] = {
        {"l1", l1},   {"l2", l2},   {"ls", ls},   {"l3", l3},
        {"l4", l4},   {"ls1", ls1}, {"ls2", ls2}, {"ls12", ls12},
    };
    std::vector<std::string> out;
    for (const auto& [name, v] : named) {
        if (std::abs(v) > cap) {
            out.push_back(std::string(name) + " = " + std::to_string(v) +
                          " exceeds the 4*pi perturbativity bound");
        }
    }
    return out;
}

const char* stability_name(Stability s) {
    switch (s) {
        case Stability::Yes:
            return "Yes";
        case Stability::No:
            return "No";
        default:
            return "Undecided";
    }
}

SymTensor coupling_tensor(const QuarticCouplings& c, double rho, CouplingMode mode) {
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw std::invalid_argument("rho must lie in [0, 1]");
    }
    const double mixed = mode == CouplingMode::Listed
                             ? -std::abs(c.ls12) / 12.0
                             : -std::abs(c.ls12) * rho / 12.0;

    OrbitEntrySpec spec;
    spec.order = 4;
    spec.dim = 3;
    spec.mode = OrbitEntrySpec::Mode::PerEntry;
    spec.entries = {
        {{1, 1, 1, 1}, c.l1},
        {{2, 2, 2, 2}, c.l2},
        {{3, 3, 3, 3}, c.ls},
        {{1, 1, 2, 2}, (c.l3 + c.l4 * rho * rho) / 6.0},
        {{1, 1, 3, 3}, c.ls1 / 6.0},
        {{2, 2, 3, 3}, c.ls2 / 6.0},
        {{1, 2, 3, 3}, mixed},
    };
    return SymTensor::build(spec);
}

AnalyticStability analytic_stationary(const QuarticCouplings& c) {
    const double s12 = std::abs(c.ls12);
    const double g = 4.0 * c.ls * c.l4 - s12 * s12;

    AnalyticStability out;
    out.t = (c.l1 + c.l2 - c.l3) * g +
            c.l4 * (4.0 * c.l1 * c.l2 - c.l3 * c.l3 - 4.0 * c.l1 * c.ls2 -
                    4.0 * c.l2 * c.ls1 + 2.0 * c.l3 * (c.ls1 + c.ls2) -
                    (c.ls1 - c.ls2) * (c.ls1 - c.ls2));
    if (out.t == 0.0) {
        out.degenerate = true;
        return out;
    }

    out.h1_sq = 0.5 *
                ((2.0 * c.l2 - c.l3) * g +
                 2.0 * c.l4 * ((c.l3 + c.ls1) * c.ls2 - 2.0 * c.l2 * c.ls1 - c.ls2 * c.ls2)) /
                out.t;
    out.h2_sq = 0.5 *
                ((2.0 * c.l1 - c.l3) * g +
                 2.0 * c.l4 * ((c.l3 + c.ls2) * c.ls1 - 2.0 * c.l1 * c.ls2 - c.ls1 * c.ls1)) /
                out.t;
    out.s_sq = c.l4 *
               (4.0 * c.l1 * c.l2 - c.l3 * c.l3 - 2.0 * c.l1 * c.ls2 - 2.0 * c.l2 * c.ls1 +
                c.l3 * (c.ls1 + c.ls2)) /
               out.t;
    out.v_min = 0.25 *
                ((4.0 * c.l1 * c.l2 - c.l3 * c.l3) * g -
                 4.0 * c.l4 *
                     (c.l1 * c.ls2 * c.ls2 + c.l2 * c.ls1 * c.ls1 - c.l3 * c.ls1 * c.ls2)) /
                out.t;

    // rho = |ls12| s^2 / (2 l4 h1 h2); its square is negative exactly when
    // h1^2 h2^2 < 0, which the table reports as an imaginary value.
    const double denom_sq = 4.0 * c.l4 * c.l4 * out.h1_sq * out.h2_sq;
    const double rho_sq = (s12 * s12 * out.s_sq * out.s_sq) / denom_sq;
    out.rho_imaginary = rho_sq < 0.0;
    out.rho = std::sqrt(std::abs(rho_sq));
    return out;
}

StabilityReport vacuum_stability(const QuarticCouplings& c, const DetectorConfig& cfg,
                                 std::span<const double> rho_grid, CouplingMode mode) {
    if (rho_grid.empty()) throw std::invalid_argument("rho grid must be nonempty");

    StabilityReport report;
    report.analytic = analytic_stationary(c);

    bool any_witness = false;
    bool all_copositive = true;
    for (double rho : rho_grid) {
        Verdict v = detect(coupling_tensor(c, rho, mode), cfg);
        if (v.status == Status::NotCopositive) any_witness = true;
        if (v.status != Status::Copositive) all_copositive = false;
        report.per_rho.emplace_back(rho, std::move(v));
    }
    report.result = any_witness          ? Stability::No
                    : all_copositive     ? Stability::Yes
                                         : Stability::Undecided;
    return report;
}

std::vector<double> uniform_rho_grid(std::size_t points) {
    if (points == 0) throw std::invalid_argument("grid needs at least one point");
    std::vector<double> grid;
    grid.reserve(points);
    if (points == 1) {
        grid.push_back(0.0);
        return grid;
    }
    for (std::size_t i = 0; i < points; ++i) {
        grid.push_back(static_cast<double>(i) / static_cast<double>(points - 1));
    }
    return grid;
}

}  // namespace copo
