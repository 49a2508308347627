// SPDX-License-Identifier: Apache-2.0
#include "copo/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace copo {

UniformHypergraph::UniformHypergraph(std::size_t n, std::size_t m,
                                     const std::vector<std::vector<std::size_t>>& edges)
    : n_(n), m_(m) {
    if (m < 3) throw std::invalid_argument("edge cardinality m must be >= 3");
    if (n < m) throw std::invalid_argument("vertex count must be >= m");
    if (edges.empty()) throw std::invalid_argument("hypergraph must have at least one edge");
    for (const auto& e : edges) {
        if (e.size() != m) throw std::invalid_argument("every edge must have exactly m vertices");
        std::vector<std::size_t> sorted;
        sorted.reserve(m);
        for (std::size_t v : e) {
            if (v < 1 || v > n) throw std::invalid_argument("edge vertex out of range [1, n]");
            sorted.push_back(v - 1);
        }
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("edge vertices must be distinct");
        }
        edges_.insert(std::move(sorted));
    }
}

SymTensor adjacency_tensor(const UniformHypergraph& g) {
    const std::size_t m = g.edge_cardinality();
    const std::size_t n = g.vertex_count();
    double fact = 1.0;
    for (std::size_t j = 2; j < m; ++j) fact *= static_cast<double>(j);
    const double weight = 1.0 / fact;  // 1/(m-1)!

    OrbitEntrySpec spec;
    spec.order = m;
    spec.dim = n;
    spec.mode = OrbitEntrySpec::Mode::PerEntry;
    for (const auto& e : g.edges()) {
        std::vector<std::size_t> idx;
        idx.reserve(m);
        for (std::size_t v : e) idx.push_back(v + 1);
        spec.entries.emplace_back(std::move(idx), weight);
    }
    return SymTensor::build(spec);
}

SymTensor bound_tensor(const UniformHypergraph& g, std::size_t k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const std::size_t m = g.edge_cardinality();
    const std::size_t n = g.vertex_count();
    const double lambda = std::pow(static_cast<double>(k), static_cast<double>(m - 1));
    return lambda * (adjacency_tensor(g) + SymTensor::identity(m, n)) - SymTensor::all_ones(m, n);
}

CocliqueReport coclique_upper_bound(const UniformHypergraph& g, const DetectorConfig& cfg) {
    const std::size_t m = g.edge_cardinality();
    const std::size_t n = g.vertex_count();

    CocliqueReport report;
    report.bound = n;  // omega <= n holds trivially
    for (std::size_t k = m - 1; k <= n; ++k) {
        Verdict v = detect(bound_tensor(g, k), cfg);
        const Status status = v.status;
        report.per_k.emplace_back(k, std::move(v));
        if (status == Status::Copositive) {
            report.bound = k;
            break;
        }
    }
    return report;
}

std::size_t brute_force_coclique(const UniformHypergraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("brute-force coclique needs n <= 20");

    std::vector<std::uint32_t> edge_masks;
    edge_masks.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        std::uint32_t mask = 0;
        for (std::size_t v : e) mask |= (1u << v);
        edge_masks.push_back(mask);
    }

    std::size_t best = 0;
    const std::uint32_t limit = 1u << n;
    for (std::uint32_t set = 0; set < limit; ++set) {
        const std::size_t size = static_cast<std::size_t>(std::popcount(set));
        if (size <= best) continue;
        bool independent = true;
        for (std::uint32_t e : edge_masks) {
            if ((set & e) == e) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

}  // namespace copo
