// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "copo/detector.hpp"
#include "copo/tensor.hpp"

namespace copo {

/// Simple m-uniform hypergraph on vertices {1, ..., n} with at least one
/// edge. Edges are m-element vertex sets, stored 0-based and sorted.
class UniformHypergraph {
public:
    /// `edges` use 1-based vertex ids; duplicates within an edge or an
    /// edge of the wrong cardinality are rejected. Requires m >= 3,
    /// n >= m, and a nonempty edge set.
    UniformHypergraph(std::size_t n, std::size_t m,
                      const std::vector<std::vector<std::size_t>>& edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_cardinality() const { return m_; }
    const std::set<std::vector<std::size_t>>& edges() const { return edges_; }

private:
    std::size_t n_;
    std::size_t m_;
    std::set<std::vector<std::size_t>> edges_;  // sorted 0-based vertex lists
};

/// Adjacency tensor: order m, dimension n, with 1/(m-1)! on every
/// permutation of each edge and 0 elsewhere.
SymTensor adjacency_tensor(const UniformHypergraph& g);

/// k^(m-1) (A + I) - E, the dual-bound tensor whose copositivity
/// certifies coclique number <= k. Requires k >= 1.
SymTensor bound_tensor(const UniformHypergraph& g, std::size_t k);

struct CocliqueReport {
    std::size_t bound = 0;
    std::vector<std::pair<std::size_t, Verdict>> per_k;
};

/// Smallest k in [m-1, n] whose bound tensor the detector certifies
/// copositive; Undecided never certifies. Falls back to the trivial
/// bound n when no k certifies within budget.
CocliqueReport coclique_upper_bound(const UniformHypergraph& g, const DetectorConfig& cfg = {});

/// Exact coclique number by exhaustive search. Requires n <= 20.
std::size_t brute_force_coclique(const UniformHypergraph& g);

}  // namespace copo
