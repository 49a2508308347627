// SPDX-License-Identifier: Apache-2.0
#include "copo/bench.hpp"

#include <stdexcept>

#include "copo/spectral.hpp"

namespace copo {

void BenchSpec::validate() const {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
}

double uniform_open01(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

SymTensor random_symmetric_uniform(std::size_t order, std::size_t dim, std::mt19937_64& rng) {
    OrbitEntrySpec spec;
    spec.order = order;
    spec.dim = dim;
    spec.mode = OrbitEntrySpec::Mode::PerEntry;
    multi_index::for_each_orbit(order, dim, [&](std::span<const std::size_t> idx) {
        std::vector<std::size_t> one_based(idx.begin(), idx.end());
        for (std::size_t& c : one_based) ++c;
        spec.entries.emplace_back(std::move(one_based), uniform_open01(rng));
    });
    return SymTensor::build(spec);
}

BenchReport run_bench(const BenchSpec& spec, const DetectorConfig& cfg) {
    spec.validate();
    BenchReport report;
    report.spec = spec;

    std::mt19937_64 rng(spec.seed);
    for (std::size_t trial = 0; trial < spec.trials; ++trial) {
        const SymTensor b = random_symmetric_uniform(spec.order, spec.dim, rng);
        const double rho = spectral_radius(b, cfg.power).rho;
        const SymTensor a =
            (rho + spec.eta_offset) * SymTensor::identity(spec.order, spec.dim) - b;
        const Verdict v = detect(a, cfg);

        BenchTrial t;
        t.rho = rho;
        t.verdict = v.status;
        t.iterations = v.stats.iterations;
        t.wall_time_ms = v.stats.wall_time_ms;
        report.trials.push_back(t);
        switch (v.status) {
            case Status::Copositive:
                ++report.n_yes;
                break;
            case Status::NotCopositive:
                ++report.n_no;
                break;
            default:
                ++report.n_undecided;
                break;
        }
    }
    return report;
}

}  // namespace copo
