#pragma once

#include "cyq/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace cyq {

// Sparse vector as (index, value) pairs sorted by index, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

// Sort, merge duplicate indices and drop zeros.
void normalize(SparseVector& v);

// Column-major sparse matrix over Q: column j is the image of basis vector j.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    static SparseMatrix identity(std::size_t n);
    static SparseMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    std::size_t nonzeros() const;

    const SparseVector& column(std::size_t j) const { return columns_.at(j); }
    // Entries are merged and zero entries dropped.
    void set_column(std::size_t j, SparseVector entries);
    Rational at(std::size_t i, std::size_t j) const;

    SparseVector apply(const SparseVector& x) const;

    SparseMatrix transpose() const;
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator*(const Rational& c, const SparseMatrix& a);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;

    bool is_zero() const { return nonzeros() == 0; }

    // Block placement helpers used to assemble total complexes.
    void add_block(std::size_t row_offset, std::size_t col_offset, const SparseMatrix& block,
                   const Rational& scale = 1);

private:
    std::size_t rows_ = 0;
    std::vector<SparseVector> columns_;
};

// Rank of the span of `vectors` (all of ambient dimension `dim`) over `field`.
// Over Q this is fraction-free integer elimination with content reduction.
std::size_t rank(const std::vector<SparseVector>& vectors, const Field& field);
std::size_t rank(const SparseMatrix& m, const Field& field);

// Basis of {x : m x = 0}. In prime mode entries are residues in [0, p).
std::vector<SparseVector> kernel_basis(const SparseMatrix& m, const Field& field);

} // namespace cyq
