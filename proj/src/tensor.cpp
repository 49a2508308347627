// SPDX-License-Identifier: Apache-2.0
#include "copo/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "copo/kernels.hpp"

namespace copo {

namespace {

std::size_t checked_pow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > std::numeric_limits<std::size_t>::max() / base) {
            throw std::invalid_argument("tensor too large: dim^order overflows");
        }
        r *= base;
    }
    return r;
}

void check_shape(std::size_t order, std::size_t dim) {
    if (order < 2) throw std::invalid_argument("tensor order must be >= 2");
    if (dim < 2) throw std::invalid_argument("tensor dim must be >= 2");
}

void check_finite(const std::vector<double>& values) {
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("tensor entries must be finite");
    }
}

double max_abs(const std::vector<double>& values) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

// Orbit-average `values` in place. With `check` set, fails if some orbit's
// spread exceeds kSymmetryTol relative to the tensor's max magnitude.
// Orbits whose members are already identical are left bit-exact.
void symmetrize(std::size_t order, std::size_t dim, std::vector<double>& values, bool check) {
    const std::size_t total = values.size();
    std::vector<std::size_t> idx(order);
    std::vector<std::size_t> sorted(order);

    std::vector<double> sum(total, 0.0);
    std::vector<std::uint32_t> count(total, 0);
    std::vector<double> lo(total, 0.0), hi(total, 0.0);

    // Row-major order visits the sorted representative of each orbit first,
    // so slot c is initialized before any other member lands on it.
    std::vector<std::size_t> canon(total);
    for (std::size_t f = 0; f < total; ++f) {
        multi_index::unflatten(f, dim, idx);
        sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t c = multi_index::flatten(sorted, dim);
        canon[f] = c;
        if (count[c] == 0) {
            lo[c] = hi[c] = values[f];
        } else {
            lo[c] = std::min(lo[c], values[f]);
            hi[c] = std::max(hi[c], values[f]);
        }
        sum[c] += values[f];
        ++count[c];
    }

    if (check) {
        const double scale = std::max(max_abs(values), 1e-300);
        for (std::size_t c = 0; c < total; ++c) {
            if (count[c] == 0) continue;
            if (hi[c] - lo[c] > SymTensor::kSymmetryTol * scale) {
                throw std::invalid_argument(
                    "asymmetric tensor values: orbit spread " + std::to_string(hi[c] - lo[c]) +
                    " exceeds tolerance");
            }
        }
    }

    std::vector<double> resolved(total, 0.0);
    for (std::size_t c = 0; c < total; ++c) {
        if (count[c] == 0) continue;
        resolved[c] = (lo[c] == hi[c]) ? values[c] : sum[c] / static_cast<double>(count[c]);
    }
    for (std::size_t f = 0; f < total; ++f) values[f] = resolved[canon[f]];
}

// out[k] = sum_i x[i] * v[i*block + k]: contracts the leading mode.
void reduce_first_mode(const double* v, std::size_t n, std::size_t block, const double* x,
                       double* out) {
    std::fill(out, out + block, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        kernels::axpy(x[i], v + i * block, out, block);
    }
}

}  // namespace

namespace multi_index {

std::size_t flatten(std::span<const std::size_t> idx, std::size_t dim) {
    std::size_t f = 0;
    for (std::size_t c : idx) f = f * dim + c;
    return f;
}

void unflatten(std::size_t flat, std::size_t dim, std::span<std::size_t> idx) {
    for (std::size_t j = idx.size(); j-- > 0;) {
        idx[j] = flat % dim;
        flat /= dim;
    }
}

std::size_t distinct_permutations(std::span<const std::size_t> idx) {
    static constexpr std::size_t kFact[] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880};
    const std::size_t m = idx.size();
    std::vector<std::size_t> sorted(idx.begin(), idx.end());
    std::sort(sorted.begin(), sorted.end());
    std::size_t denom = 1;
    std::size_t run = 1;
    for (std::size_t j = 1; j <= m; ++j) {
        if (j < m && sorted[j] == sorted[j - 1]) {
            ++run;
        } else {
            denom *= kFact[run];
            run = 1;
        }
    }
    if (m >= std::size(kFact)) {
        // fall back for very high orders
        double r = 1.0;
        for (std::size_t j = 2; j <= m; ++j) r *= static_cast<double>(j);
        return static_cast<std::size_t>(r / static_cast<double>(denom) + 0.5);
    }
    return kFact[m] / denom;
}

void for_each_orbit(std::size_t order, std::size_t dim,
                    const std::function<void(std::span<const std::size_t>)>& fn) {
    std::vector<std::size_t> idx(order, 0);
    while (true) {
        fn(idx);
        // next non-decreasing index
        std::size_t j = order;
        while (j-- > 0) {
            if (idx[j] + 1 < dim) {
                const std::size_t v = idx[j] + 1;
                for (std::size_t k = j; k < order; ++k) idx[k] = v;
                break;
            }
            if (j == 0) return;
        }
    }
}

}  // namespace multi_index

// ---------------------------------------------------------------------------
// SquareMatrix
// ---------------------------------------------------------------------------

SquareMatrix SquareMatrix::identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

SquareMatrix SquareMatrix::mul(const SquareMatrix& other) const {
    if (n_ != other.n_) throw std::invalid_argument("matrix size mismatch");
    SquareMatrix out(n_);
    for (std::size_t c = 0; c < n_; ++c) {
        for (std::size_t r = 0; r < n_; ++r) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n_; ++k) acc += at(r, k) * other.at(k, c);
            out.at(r, c) = acc;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// SymTensor
// ---------------------------------------------------------------------------

SymTensor::SymTensor(std::size_t order, std::size_t dim)
    : order_(order), dim_(dim), values_(checked_pow(dim, order), 0.0) {
    check_shape(order, dim);
}

SymTensor::SymTensor(std::size_t order, std::size_t dim, std::vector<double> values)
    : order_(order), dim_(dim), values_(std::move(values)) {}

SymTensor SymTensor::from_values(std::size_t order, std::size_t dim,
                                 std::vector<double> values) {
    check_shape(order, dim);
    if (values.size() != checked_pow(dim, order)) {
        throw std::invalid_argument("value array length must be dim^order");
    }
    check_finite(values);
    symmetrize(order, dim, values, /*check=*/true);
    return SymTensor(order, dim, std::move(values));
}

SymTensor symmetrized(std::size_t order, std::size_t dim, std::vector<double> values) {
    symmetrize(order, dim, values, /*check=*/false);
    return SymTensor(order, dim, std::move(values));
}

SymTensor SymTensor::identity(std::size_t order, std::size_t dim) {
    SymTensor t(order, dim);
    std::size_t stride = 0;
    for (std::size_t j = 0; j < order; ++j) stride = stride * dim + 1;
    for (std::size_t i = 0; i < dim; ++i) t.values_[i * stride] = 1.0;
    return t;
}

SymTensor SymTensor::all_ones(std::size_t order, std::size_t dim) {
    SymTensor t(order, dim);
    std::fill(t.values_.begin(), t.values_.end(), 1.0);
    return t;
}

SymTensor SymTensor::build(const OrbitEntrySpec& spec) {
    check_shape(spec.order, spec.dim);
    const std::size_t total = checked_pow(spec.dim, spec.order);

    double scale = 0.0;
    for (const auto& [idx, val] : spec.entries) {
        if (!std::isfinite(val)) throw std::invalid_argument("entry value must be finite");
        scale = std::max(scale, std::abs(val));
    }
    scale = std::max(scale, 1e-300);

    // Gather listings per canonical orbit first; per_entry duplicates must
    // agree within tolerance and are orbit-averaged.
    struct OrbitAcc {
        double sum = 0.0;
        double first = 0.0;
        std::size_t listings = 0;
    };
    std::vector<OrbitAcc> acc(total);
    std::vector<std::size_t> zero_based(spec.order);
    std::vector<std::size_t> listed;

    for (const auto& [idx, val] : spec.entries) {
        if (idx.size() != spec.order) {
            throw std::invalid_argument("multi-index length must equal the tensor order");
        }
        for (std::size_t j = 0; j < spec.order; ++j) {
            if (idx[j] < 1 || idx[j] > spec.dim) {
                throw std::invalid_argument("multi-index component out of range [1, dim]");
            }
            zero_based[j] = idx[j] - 1;
        }
        std::sort(zero_based.begin(), zero_based.end());
        const std::size_t canon = multi_index::flatten(zero_based, spec.dim);
        OrbitAcc& a = acc[canon];
        if (a.listings == 0) {
            a.first = val;
            listed.push_back(canon);
        } else if (spec.mode == OrbitEntrySpec::Mode::OrbitSum) {
            throw std::invalid_argument("duplicate orbit in orbit_sum entries");
        } else if (std::abs(val - a.first) > kSymmetryTol * scale) {
            throw std::invalid_argument("conflicting per_entry values within one orbit");
        }
        a.sum += val;
        ++a.listings;
    }

    std::vector<double> values(total, 0.0);
    std::vector<std::size_t> perm(spec.order);
    for (std::size_t canon : listed) {
        multi_index::unflatten(canon, spec.dim, perm);
        const std::size_t nperm = multi_index::distinct_permutations(perm);
        const OrbitAcc& a = acc[canon];
        double per_entry;
        if (spec.mode == OrbitEntrySpec::Mode::OrbitSum) {
            per_entry = a.first / static_cast<double>(nperm);
        } else {
            per_entry = (a.listings == 1) ? a.first : a.sum / static_cast<double>(a.listings);
        }
        do {
            values[multi_index::flatten(perm, spec.dim)] = per_entry;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return SymTensor(spec.order, spec.dim, std::move(values));
}

double SymTensor::at(std::span<const std::size_t> idx) const {
    if (idx.size() != order_) throw std::invalid_argument("multi-index length mismatch");
    for (std::size_t c : idx) {
        if (c >= dim_) throw std::invalid_argument("multi-index component out of range");
    }
    return values_[multi_index::flatten(idx, dim_)];
}

double SymTensor::at(std::initializer_list<std::size_t> idx) const {
    return at(std::span<const std::size_t>(idx.begin(), idx.size()));
}

double SymTensor::eval_form(std::span<const double> x) const {
    if (x.size() != dim_) throw std::invalid_argument("vector length must equal tensor dim");
    std::vector<double> buf = values_;
    std::vector<double> next(buf.size() / dim_);
    std::size_t block = buf.size() / dim_;
    for (std::size_t round = 0; round < order_; ++round) {
        reduce_first_mode(buf.data(), dim_, block, x.data(), next.data());
        buf.swap(next);
        block /= dim_;
    }
    return buf[0];
}

std::pair<double, double> SymTensor::eval_form_certified(std::span<const double> x) const {
    if (x.size() != dim_) throw std::invalid_argument("vector length must equal tensor dim");
    const double value = eval_form(x);

    std::vector<double> xabs(x.begin(), x.end());
    for (double& v : xabs) v = std::abs(v);
    std::vector<double> buf(values_.size());
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = std::abs(values_[i]);
    std::vector<double> next(buf.size() / dim_);
    std::size_t block = buf.size() / dim_;
    for (std::size_t round = 0; round < order_; ++round) {
        reduce_first_mode(buf.data(), dim_, block, xabs.data(), next.data());
        buf.swap(next);
        block /= dim_;
    }
    // |A| |x|^m bounds the magnitude reaching any accumulator; the chain of
    // fused/ordered ops per output is < order * (dim + 1) long, padded here.
    const double ops = static_cast<double>(order_ * (dim_ + 2));
    const double bound = 2.0 * ops * std::numeric_limits<double>::epsilon() * buf[0];
    return {value, bound};
}

std::vector<double> SymTensor::eval_contraction(std::span<const double> x) const {
    if (x.size() != dim_) throw std::invalid_argument("vector length must equal tensor dim");
    std::vector<double> buf = values_;
    std::vector<double> next(buf.size() / dim_);
    std::size_t block = buf.size() / dim_;
    // contracting any m-1 modes of a symmetric tensor leaves A x^{m-1}
    for (std::size_t round = 0; round + 1 < order_; ++round) {
        reduce_first_mode(buf.data(), dim_, block, x.data(), next.data());
        buf.swap(next);
        block /= dim_;
    }
    buf.resize(dim_);
    return buf;
}

double SymTensor::rank_one_inner(std::span<const std::vector<double>> u) const {
    if (u.size() != order_) {
        throw std::invalid_argument("rank-one factor count must equal tensor order");
    }
    for (const auto& v : u) {
        if (v.size() != dim_) throw std::invalid_argument("rank-one factor length mismatch");
    }
    std::vector<double> buf = values_;
    std::vector<double> next(buf.size() / dim_);
    std::size_t block = buf.size() / dim_;
    for (std::size_t round = 0; round < order_; ++round) {
        reduce_first_mode(buf.data(), dim_, block, u[round].data(), next.data());
        buf.swap(next);
        block /= dim_;
    }
    return buf[0];
}

SymTensor SymTensor::congruence(const SquareMatrix& v) const {
    if (v.n() != dim_) throw std::invalid_argument("matrix size must equal tensor dim");
    const std::size_t n = dim_;
    const std::size_t total = values_.size();
    const std::size_t block = total / n;

    std::vector<double> cur = values_;
    std::vector<double> ttm(total);
    std::vector<double> rot(total);
    for (std::size_t round = 0; round < order_; ++round) {
        // transform the leading mode: ttm[c*block + k] = sum_i V(i,c) cur[i*block + k]
        for (std::size_t c = 0; c < n; ++c) {
            reduce_first_mode(cur.data(), n, block, v.col(c).data(), ttm.data() + c * block);
        }
        // rotate the transformed mode to the back: rot[k*n + c] = ttm[c*block + k]
        for (std::size_t c = 0; c < n; ++c) {
            const double* src = ttm.data() + c * block;
            for (std::size_t k = 0; k < block; ++k) rot[k * n + c] = src[k];
        }
        cur.swap(rot);
    }
    return symmetrized(order_, dim_, std::move(cur));
}

SymTensor& SymTensor::operator+=(const SymTensor& other) {
    if (!same_shape(other)) throw std::invalid_argument("tensor shape mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& other) {
    if (!same_shape(other)) throw std::invalid_argument("tensor shape mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

SymTensor& SymTensor::operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
}

double inner(const SymTensor& a, const SymTensor& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("tensor shape mismatch");
    return kernels::dot(a.values().data(), b.values().data(), a.size());
}

double norm(const SymTensor& a) { return std::sqrt(inner(a, a)); }

// ---------------------------------------------------------------------------
// Simplex
// ---------------------------------------------------------------------------

Simplex Simplex::standard(std::size_t n) { return Simplex(SquareMatrix::identity(n)); }

double Simplex::diameter() const {
    const std::size_t n = dim();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double d2 = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double d = m_.at(k, i) - m_.at(k, j);
                d2 += d * d;
            }
            best = std::max(best, d2);
        }
    }
    return std::sqrt(best);
}

Simplex Simplex::with_vertex(std::size_t i, std::span<const double> v) const {
    if (i >= dim() || v.size() != dim()) throw std::invalid_argument("bad vertex replacement");
    SquareMatrix m = m_;
    std::copy(v.begin(), v.end(), m.col_data(i));
    return Simplex(std::move(m));
}

}  // namespace copo
