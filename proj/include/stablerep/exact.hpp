#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace stablerep {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Sorted by index, no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;
using SparseIntVector = std::vector<std::pair<std::size_t, BigInt>>;

/// Adds `factor * src` into `dst`, keeping both sorted and zero-free.
void axpy(SparseVector& dst, const Rational& factor, const SparseVector& src);

/// Row-major sparse matrix over Q. All group and Lie-algebra actions in the
/// library are very sparse (permutations, derivations), so this is the only
/// matrix type.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix from_dense(const std::vector<std::vector<Rational>>& dense);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Rational& value);
    void add_to(std::size_t i, std::size_t j, const Rational& value);

    const SparseVector& row(std::size_t i) const { return data_[i]; }
    void set_row(std::size_t i, SparseVector entries);

    std::size_t nonzeros() const;
    bool is_zero() const;
    Rational trace() const;
    ExactMatrix transpose() const;

    /// Matrix times column vector given in sparse form.
    SparseVector apply(const SparseVector& v) const;

    std::vector<std::vector<Rational>> to_dense() const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const Rational& s, const ExactMatrix& a);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVector> data_;
};

/// Commutator ab - ba.
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

/// Scales a rational row by the lcm of its denominators and divides out the
/// content, giving the primitive integer row on the same line.
SparseIntVector primitive_integer_row(const SparseVector& row);

/// Rank of a family of sparse rows by fraction-free elimination: each
/// reduction step is r <- a*r - b*pivot on integer rows followed by removal of
/// the row content, so no rationals appear during elimination.
std::size_t sparse_rank(std::span<const SparseVector> rows);
std::size_t rank(const ExactMatrix& m);

/// Bareiss fraction-free elimination on a dense integer matrix. Kept as an
/// independent dense path; the sparse routine above is used for everything
/// large.
std::size_t bareiss_rank(std::vector<std::vector<BigInt>> dense);

/// Incrementally maintained reduced row-echelon basis of a subspace of Q^n.
/// Each stored vector has a 1 in its pivot slot and 0 in every other pivot
/// slot, so coordinates of a member of the span are read off at the pivots.
class EchelonBasis {
public:
    /// Returns true when `v` was independent of the current span.
    bool insert(SparseVector v);

    std::size_t size() const noexcept { return basis_.size(); }
    const SparseVector& vector(std::size_t k) const { return basis_[k]; }
    std::size_t pivot(std::size_t k) const { return pivots_[k]; }

    /// Coordinates in the stored basis, or nullopt when v is outside the span.
    std::optional<std::vector<Rational>> coordinates(const SparseVector& v) const;

private:
    SparseVector reduce(SparseVector v) const;

    std::vector<SparseVector> basis_;
    std::vector<std::size_t> pivots_;
};

/// Dimension of the common kernel of a stack of linear maps sharing a source.
std::size_t kernel_dimension(std::span<const ExactMatrix> maps, std::size_t source_dim);

}  // namespace stablerep
