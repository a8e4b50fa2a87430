#pragma once

// Exact linear algebra over F_p: incremental reduced row echelon bases,
// kernels, and a bit-packed GF(2) rank engine.

#include <cstdint>
#include <optional>
#include <vector>

#include "hodgecalc/field_poly.hpp"

namespace hodgecalc {

using DenseVector = std::vector<Scalar>;
using BitVector = std::vector<std::uint64_t>;

/// Reduced row echelon basis of a subspace of F_p^n, grown one vector at a
/// time. Pivots are the lowest nonzero index of each row, pivot entries are
/// 1, and every pivot column is zero in all other rows. Over F_2 rows are
/// stored bit-packed.
class EchelonBasis {
public:
    EchelonBasis(PrimeField field, std::size_t dimension);

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return pivot_col_.size(); }
    const PrimeField& field() const noexcept { return field_; }

    /// Adds v to the span. Returns true if the rank grew.
    bool insert(const DenseVector& v);
    /// Reduces v modulo the span (clears every pivot coordinate).
    DenseVector reduce(DenseVector v) const;
    bool contains(const DenseVector& v) const;

    /// Sorted pivot columns.
    std::vector<std::size_t> pivots() const;
    bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }
    /// Basis rows in insertion order.
    std::vector<DenseVector> rows() const;

private:
    bool binary() const noexcept { return field_.characteristic() == 2; }
    BitVector pack(const DenseVector& v) const;
    DenseVector unpack(const BitVector& b) const;

    PrimeField field_;
    std::size_t dim_;
    std::size_t words_;
    std::vector<DenseVector> rows_;     // odd characteristic
    std::vector<BitVector> bit_rows_;   // characteristic 2
    std::vector<std::size_t> pivot_col_;
    std::vector<long> pivot_row_;
};

/// Basis of {x : sum_j x_j * columns[j] = 0}, in reduced echelon form: each
/// vector has a distinct leading (first nonzero) index whose entry is 1,
/// sorted by that index.
std::vector<DenseVector> kernel_basis(PrimeField field, const std::vector<DenseVector>& columns,
                                      std::size_t column_length);

std::size_t rank_of(PrimeField field, const std::vector<DenseVector>& vectors, std::size_t length);

/// GF(2) span accumulator over bit-packed vectors of fixed length; rank only.
class BitEchelon {
public:
    explicit BitEchelon(std::size_t length);

    /// Returns true if the rank grew.
    bool insert(BitVector v);
    std::size_t rank() const noexcept { return rank_; }
    std::size_t words() const noexcept { return words_; }

private:
    std::size_t words_;
    std::size_t rank_ = 0;
    // rows_by_pivot_[b] holds the basis row whose lowest set bit is b
    std::vector<BitVector> rows_by_pivot_;
};

}  // namespace hodgecalc
