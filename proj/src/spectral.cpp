// SPDX-License-Identifier: Apache-2.0
#include "copo/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace copo {

void PowerConfig::validate() const {
    if (!(tol > 0.0)) throw std::invalid_argument("power tol must be > 0");
    if (max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");
    if (perturbation < 0.0) throw std::invalid_argument("perturbation must be >= 0");
}

namespace {

void check_nonnegative(const SymTensor& b) {
    for (double v : b.values()) {
        if (v < 0.0) throw std::invalid_argument("spectral_radius needs a nonnegative tensor");
    }
}

struct SweepState {
    std::vector<double> x;
    double lower = 0.0;
    double upper = std::numeric_limits<double>::infinity();
};

// One power sweep on B' = B + eps*E. Tightens the monotone bounds and
// advances x; returns the per-sweep (raw) ratio bounds.
void sweep(const SymTensor& b, double eps, SweepState& st) {
    const std::size_t n = b.dim();
    const double m1 = static_cast<double>(b.order() - 1);

    std::vector<double> y = b.eval_contraction(st.x);
    if (eps > 0.0) {
        // E x^{m-1} = (sum x)^{m-1} on every coordinate; x is 1-normalized
        double s = 0.0;
        for (double v : st.x) s += v;
        const double epart = eps * std::pow(s, m1);
        for (double& v : y) v += epart;
    }

    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (st.x[i] > 0.0) {
            const double ratio = y[i] / std::pow(st.x[i], m1);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
    }
    st.lower = std::max(st.lower, lo);
    st.upper = std::min(st.upper, hi);

    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        st.x[i] = std::pow(y[i], 1.0 / m1);
        sum += st.x[i];
    }
    if (sum > 0.0) {
        for (double& v : st.x) v /= sum;
    } else {
        // zero tensor with eps = 0: restart from the barycenter
        std::fill(st.x.begin(), st.x.end(), 1.0 / static_cast<double>(n));
        st.lower = std::max(st.lower, 0.0);
        st.upper = std::min(st.upper, 0.0);
    }
}

SweepState initial_state(const SymTensor& b) {
    SweepState st;
    st.x.assign(b.dim(), 1.0 / static_cast<double>(b.dim()));
    return st;
}

}  // namespace

SpectralResult spectral_radius(const SymTensor& b, const PowerConfig& cfg) {
    cfg.validate();
    check_nonnegative(b);

    SweepState st = initial_state(b);
    SpectralResult res;
    while (res.sweeps < cfg.max_sweeps) {
        sweep(b, cfg.perturbation, st);
        ++res.sweeps;
        if (st.upper - st.lower <= cfg.tol) {
            res.converged = true;
            break;
        }
    }
    res.lower = st.lower;
    res.upper = st.upper;
    const double inflation =
        cfg.perturbation * std::pow(static_cast<double>(b.dim()), static_cast<double>(b.order() - 1));
    const double floor = std::max(0.0, st.lower - inflation);
    res.rho = std::clamp(0.5 * (st.lower + st.upper), floor, st.upper);
    res.eigvec = std::move(st.x);
    return res;
}

double z_min_h_eigenvalue(const SymTensor& z, const PowerConfig& cfg) {
    cfg.validate();
    const std::size_t n = z.dim();
    const std::size_t m = z.order();

    std::size_t diag_stride = 0;
    for (std::size_t j = 0; j < m; ++j) diag_stride = diag_stride * n + 1;

    double t = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        t = std::max(t, z.values()[i * diag_stride]);
    }

    std::vector<double> cvals(z.values().size());
    for (std::size_t f = 0; f < cvals.size(); ++f) cvals[f] = -z.values()[f];
    for (std::size_t i = 0; i < n; ++i) cvals[i * diag_stride] += t;
    for (double v : cvals) {
        if (v < 0.0) throw std::invalid_argument("not a Z-tensor: positive off-diagonal entry");
    }

    const SymTensor c = symmetrized(m, n, std::move(cvals));
    return t - spectral_radius(c, cfg).rho;
}

namespace detail {

std::optional<bool> rho_at_most(const SymTensor& b, double threshold, const PowerConfig& cfg) {
    cfg.validate();
    check_nonnegative(b);

    SweepState st = initial_state(b);
    for (std::size_t s = 0; s < cfg.max_sweeps; ++s) {
        sweep(b, cfg.perturbation, st);
        if (st.upper <= threshold) return true;
        if (st.lower > threshold) return false;
        if (st.upper - st.lower <= cfg.tol) {
            return 0.5 * (st.lower + st.upper) <= threshold;
        }
    }
    return std::nullopt;
}

}  // namespace detail

}  // namespace copo
