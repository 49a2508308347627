// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace copo {

/// Square n-by-n matrix stored column-major. Used for the vertex matrix
/// of a simplex: column j is vertex u_j.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
    static SquareMatrix identity(std::size_t n);

    std::size_t n() const { return n_; }
    double& at(std::size_t row, std::size_t col) { return data_[col * n_ + row]; }
    double at(std::size_t row, std::size_t col) const { return data_[col * n_ + row]; }
    std::span<const double> col(std::size_t c) const { return {data_.data() + c * n_, n_}; }
    double* col_data(std::size_t c) { return data_.data() + c * n_; }
    const std::vector<double>& data() const { return data_; }

    /// this * other (both n-by-n).
    SquareMatrix mul(const SquareMatrix& other) const;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// Sparse entry list describing a symmetric tensor, 1-based indices as in
/// the on-disk format. In orbit-sum mode a value is the *sum* over all
/// distinct permutations of the multi-index; in per-entry mode it is the
/// value of every entry in the orbit.
struct OrbitEntrySpec {
    enum class Mode { OrbitSum, PerEntry };

    std::size_t order = 0;
    std::size_t dim = 0;
    Mode mode = Mode::OrbitSum;
    std::vector<std::pair<std::vector<std::size_t>, double>> entries;
};

/// Dense order-m dimension-n real symmetric tensor. Values are stored flat
/// in row-major multi-index order (all n^m of them) and are fully
/// symmetrized at construction; every operation is a pure function, so
/// instances are safe to share across threads.
class SymTensor {
public:
    /// Relative spread (against the tensor's max entry magnitude) tolerated
    /// between entries of one orbit before construction fails.
    static constexpr double kSymmetryTol = 1e-12;

    /// Zero tensor.
    SymTensor(std::size_t order, std::size_t dim);

    /// Construct from a full flat value array (row-major, length dim^order).
    /// Throws std::invalid_argument if the array is asymmetric beyond
    /// kSymmetryTol; otherwise entries are orbit-averaged.
    static SymTensor from_values(std::size_t order, std::size_t dim,
                                 std::vector<double> values);

    /// Identity tensor: 1 on the diagonal, 0 elsewhere.
    static SymTensor identity(std::size_t order, std::size_t dim);

    /// All-one tensor.
    static SymTensor all_ones(std::size_t order, std::size_t dim);

    /// Build from a sparse orbit spec (see OrbitEntrySpec). Unlisted
    /// entries are zero. Throws on out-of-range indices, duplicate orbits
    /// in orbit-sum mode, or conflicting per-entry values within an orbit.
    static SymTensor build(const OrbitEntrySpec& spec);

    std::size_t order() const { return order_; }
    std::size_t dim() const { return dim_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }

    /// Entry at a 0-based multi-index (order() components).
    double at(std::span<const std::size_t> idx) const;
    double at(std::initializer_list<std::size_t> idx) const;

    /// A x^m, the full m-linear form.
    double eval_form(std::span<const double> x) const;

    /// A x^m together with a rigorous bound on the absolute rounding error
    /// of the returned value. The sign of the form is certain whenever
    /// |value| exceeds the bound.
    std::pair<double, double> eval_form_certified(std::span<const double> x) const;

    /// A x^{m-1}, the n-vector of partial contractions.
    std::vector<double> eval_contraction(std::span<const double> x) const;

    /// <A, u_0 ∘ u_1 ∘ ... ∘ u_{m-1}>, the pairing with a rank-one tensor.
    double rank_one_inner(std::span<const std::vector<double>> u) const;

    /// V^T A V: the order-m tensor whose (i1..im) entry pairs A with the
    /// rank-one product of columns i1..im of V. Computed by applying V to
    /// one mode at a time; the result is symmetric and satisfies
    /// result(x) = A(Vx).
    SymTensor congruence(const SquareMatrix& v) const;

    bool same_shape(const SymTensor& other) const {
        return order_ == other.order_ && dim_ == other.dim_;
    }
    bool operator==(const SymTensor& other) const = default;

    SymTensor& operator+=(const SymTensor& other);
    SymTensor& operator-=(const SymTensor& other);
    SymTensor& operator*=(double s);
    friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
    friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
    friend SymTensor operator*(double s, SymTensor a) { return a *= s; }
    friend SymTensor operator*(SymTensor a, double s) { return a *= s; }

private:
    SymTensor(std::size_t order, std::size_t dim, std::vector<double> values);

    friend SymTensor symmetrized(std::size_t order, std::size_t dim,
                                 std::vector<double> values);

    std::size_t order_;
    std::size_t dim_;
    std::vector<double> values_;
};

/// Orbit-average a flat value array without the symmetry-spread check
/// (for internally produced, mathematically symmetric data).
SymTensor symmetrized(std::size_t order, std::size_t dim, std::vector<double> values);

/// <A, B> = sum of entrywise products.
double inner(const SymTensor& a, const SymTensor& b);

/// sqrt(<A, A>).
double norm(const SymTensor& a);

/// n affinely independent vertices in R^n; the matrix view has vertex j
/// as column j. Immutable.
class Simplex {
public:
    explicit Simplex(SquareMatrix vertices) : m_(std::move(vertices)) {}

    /// conv{e_1, ..., e_n}, the standard simplex.
    static Simplex standard(std::size_t n);

    std::size_t dim() const { return m_.n(); }
    std::span<const double> vertex(std::size_t i) const { return m_.col(i); }
    const SquareMatrix& matrix() const { return m_; }

    /// Largest pairwise vertex distance (Euclidean).
    double diameter() const;

    /// Simplex with vertex i replaced.
    Simplex with_vertex(std::size_t i, std::span<const double> v) const;

private:
    SquareMatrix m_;
};

namespace multi_index {

/// Row-major flat offset of a 0-based multi-index.
std::size_t flatten(std::span<const std::size_t> idx, std::size_t dim);

/// Inverse of flatten.
void unflatten(std::size_t flat, std::size_t dim, std::span<std::size_t> idx);

/// Number of distinct permutations of the multi-index (m! over the
/// product of component multiplicities).
std::size_t distinct_permutations(std::span<const std::size_t> idx);

/// Visit every non-decreasing multi-index of the given shape (one
/// canonical representative per orbit), in lexicographic order.
void for_each_orbit(std::size_t order, std::size_t dim,
                    const std::function<void(std::span<const std::size_t>)>& fn);

}  // namespace multi_index

}  // namespace copo
