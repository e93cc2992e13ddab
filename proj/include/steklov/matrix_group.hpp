#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <optional>
#include <span>
#include <vector>

#include "steklov/rational.hpp"

namespace steklov {

/// Dense row-major n x n matrix.
template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}
    SquareMatrix(std::size_t n, std::vector<T> row_major) : n_(n), data_(std::move(row_major)) {
        if (data_.size() != n_ * n_) throw std::invalid_argument("matrix entry count does not match dimension");
    }

    static SquareMatrix identity(std::size_t n) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t size() const noexcept { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    const std::vector<T>& entries() const noexcept { return data_; }

    SquareMatrix transpose() const {
        SquareMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    T trace() const {
        T sum(0);
        for (std::size_t i = 0; i < n_; ++i) sum += (*this)(i, i);
        return sum;
    }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        SquareMatrix c(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = SquareMatrix<Rational>;
using RealMatrix = SquareMatrix<double>;

RealMatrix to_real(const RationalMatrix& m);

/// Largest absolute entry of a - b.
double max_abs_difference(const RealMatrix& a, const RealMatrix& b);

enum class EntryMode { Exact, Float };

inline constexpr double kDefaultTolerance = 1e-9;

/// A finite subgroup of O(n), stored as its full element list (identity
/// first). Exact groups keep rational entries; float groups keep doubles and
/// compare within `tolerance`.
class OrthogonalGroup {
public:
    std::size_t dim() const noexcept { return dim_; }
    std::size_t order() const noexcept { return real_.size(); }
    EntryMode mode() const noexcept { return mode_; }
    double tolerance() const noexcept { return tolerance_; }

    const std::vector<RealMatrix>& elements() const noexcept { return real_; }
    /// Exact elements; throws DomainError for a float group.
    const std::vector<RationalMatrix>& exact_elements() const;
    const std::vector<RealMatrix>& generators() const noexcept { return generators_; }

    std::optional<std::size_t> find(const RealMatrix& m) const;
    std::optional<std::size_t> find(const RationalMatrix& m) const;

    /// The subgroup formed by the given element indices; throws InvalidGroup
    /// if they are not closed under products or lack the identity.
    OrthogonalGroup subgroup(std::span<const std::size_t> indices) const;

    /// Q * G * Q^T for an orthogonal Q. An exact Q keeps an exact group exact.
    OrthogonalGroup conjugated(const RationalMatrix& q) const;
    OrthogonalGroup conjugated(const RealMatrix& q) const;

    friend OrthogonalGroup close_group(const std::vector<RationalMatrix>& generators, std::size_t max_order);
    friend OrthogonalGroup close_group(const std::vector<RealMatrix>& generators, double tolerance,
                                       std::size_t max_order);

private:
    OrthogonalGroup() = default;
    static OrthogonalGroup from_exact(std::size_t dim, std::vector<RationalMatrix> elements,
                                      std::vector<RealMatrix> generators);
    static OrthogonalGroup from_real(std::size_t dim, std::vector<RealMatrix> elements,
                                     std::vector<RealMatrix> generators, double tolerance);
    void build_index();

    std::size_t dim_ = 0;
    EntryMode mode_ = EntryMode::Exact;
    double tolerance_ = 0;
    std::vector<RealMatrix> real_;
    std::vector<RationalMatrix> exact_;
    std::vector<RealMatrix> generators_;
    // Float mode: entries rounded to 1e-6 granularity -> element indices.
    std::map<std::vector<long long>, std::vector<std::size_t>> float_index_;
    std::map<std::vector<Rational>, std::size_t> exact_index_;
};

/// Breadth-first closure of exact generators. Throws NotOrthogonal unless
/// every generator satisfies M^T M = I exactly, OrderExceeded past max_order.
OrthogonalGroup close_group(const std::vector<RationalMatrix>& generators, std::size_t max_order = 100000);

/// Breadth-first closure of float generators, deduplicating within tolerance.
OrthogonalGroup close_group(const std::vector<RealMatrix>& generators, double tolerance = kDefaultTolerance,
                            std::size_t max_order = 100000);

// Common generators.
RationalMatrix diagonal_signs(std::span<const int> signs);
/// Rotation of R^2 by 2*pi/k. Exact entries for k in {1, 2, 4}.
RealMatrix rotation_2d(std::size_t k);
/// Z_k generated by rotation_2d(k); exact when the rotation is.
OrthogonalGroup cyclic_rotation_group(std::size_t k);
OrthogonalGroup trivial_group(std::size_t dim);

}  // namespace steklov
