// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "copo/detector.hpp"
#include "copo/tensor.hpp"

namespace copo {

/// Seeded benchmark family: per trial draw a random symmetric B with
/// orbit values uniform in (0, 1), compute rho(B), and test
/// A = (rho + eta_offset) I - B.
struct BenchSpec {
    std::size_t order = 3;
    std::size_t dim = 3;
    double eta_offset = 1.0;
    std::size_t trials = 10;
    std::uint64_t seed = 0;

    void validate() const;
};

struct BenchTrial {
    double rho = 0.0;
    Status verdict = Status::Undecided;
    std::size_t iterations = 0;
    double wall_time_ms = 0.0;
};

struct BenchReport {
    BenchSpec spec;
    std::vector<BenchTrial> trials;
    std::size_t n_yes = 0;
    std::size_t n_no = 0;
    std::size_t n_undecided = 0;
};

/// Uniform value in the open interval (0, 1) built from the top 53 bits
/// of the generator output; fixed mapping so seeded runs reproduce
/// byte-identical reports everywhere.
double uniform_open01(std::mt19937_64& rng);

/// Random symmetric tensor with one independent uniform (0, 1) draw per
/// orbit, in canonical (sorted multi-index, lexicographic) orbit order.
SymTensor random_symmetric_uniform(std::size_t order, std::size_t dim, std::mt19937_64& rng);

BenchReport run_bench(const BenchSpec& spec, const DetectorConfig& cfg);

}  // namespace copo
