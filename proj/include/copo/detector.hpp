// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "copo/cones.hpp"
#include "copo/spectral.hpp"
#include "copo/tensor.hpp"

namespace copo {

struct DetectorConfig {
    ConeKind cone = ConeKind::ZSplit;
    std::size_t max_iterations = 100;  // budget on loop-body executions
    PowerConfig power{};
    double vertex_tol = 0.0;           // witness needs form < -vertex_tol
    double membership_slack = kMembershipSlack;

    /// Record the simplicial partition (discarded + remaining simplices).
    bool keep_partition_log = false;

    /// Evaluate pending stack nodes on a thread pool. The verdict and all
    /// stats are identical to the single-threaded run; only wall time
    /// changes.
    bool parallel = false;
    unsigned threads = 0;  // 0 = hardware concurrency

    void validate() const;
};

enum class Status {
    Copositive,
    NotCopositive,
    Undecided,
};

const char* status_name(Status s);

struct DetectorStats {
    std::size_t iterations = 0;         // simplices examined
    std::size_t simplices_checked = 0;  // membership-accepted leaves
    std::size_t max_depth = 0;
    double wall_time_ms = 0.0;
    /// Diameter of the deepest simplex still on the stack when the budget
    /// ran out (0 on decided runs); gauges proximity to the cone boundary.
    double remaining_diameter = 0.0;
};

struct Verdict {
    Status status = Status::Undecided;
    std::optional<std::vector<double>> witness;  // x >= 0 with A x^m < 0
    DetectorStats stats;

    // populated only with keep_partition_log
    std::vector<Simplex> discarded;
    std::vector<Simplex> remaining;
};

/// Copositivity test by depth-first simplicial refinement of the standard
/// simplex. Each node is rejected through a negative vertex (witness),
/// discarded through cone membership of the restricted tensor, or bisected
/// along its longest edge. An empty stack proves copositivity; an
/// exhausted budget yields Undecided.
Verdict detect(const SymTensor& a, const DetectorConfig& cfg = {});

/// Split a simplex at the midpoint of its longest edge (ties broken by
/// the lexicographically smallest vertex pair (p, q)). Returns the
/// (u_p-replaced, u_q-replaced) children. Throws on a degenerate simplex.
std::pair<Simplex, Simplex> bisect(const Simplex& s);

}  // namespace copo
