#include "hodgecalc/linalg.hpp"

#include <algorithm>
#include <bit>

namespace hodgecalc {

namespace {

std::optional<std::size_t> lowest_bit(const BitVector& b) {
    for (std::size_t w = 0; w < b.size(); ++w)
        if (b[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(b[w]));
    return std::nullopt;
}

bool test_bit(const BitVector& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }

void xor_into(BitVector& dst, const BitVector& src, std::size_t from_word) {
    for (std::size_t w = from_word; w < dst.size(); ++w) dst[w] ^= src[w];
}

}  // namespace

EchelonBasis::EchelonBasis(PrimeField field, std::size_t dimension)
    : field_(field), dim_(dimension), words_((dimension + 63) / 64), pivot_row_(dimension, -1) {}

BitVector EchelonBasis::pack(const DenseVector& v) const {
    BitVector b(words_, 0);
    for (std::size_t i = 0; i < dim_; ++i)
        if (v[i] & 1u) b[i / 64] |= std::uint64_t{1} << (i % 64);
    return b;
}

DenseVector EchelonBasis::unpack(const BitVector& b) const {
    DenseVector v(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) v[i] = test_bit(b, i) ? 1 : 0;
    return v;
}

DenseVector EchelonBasis::reduce(DenseVector v) const {
    if (v.size() != dim_) throw ContractError("vector length does not match echelon dimension");
    if (binary()) {
        for (auto& x : v) x %= 2;
        auto b = pack(v);
        for (std::size_t r = 0; r < bit_rows_.size(); ++r)
            if (test_bit(b, pivot_col_[r])) xor_into(b, bit_rows_[r], pivot_col_[r] / 64);
        return unpack(b);
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar c = v[pivot_col_[r]];
        if (c == 0) continue;
        const auto& row = rows_[r];
        const Scalar f = field_.neg(c);
        for (std::size_t j = pivot_col_[r]; j < dim_; ++j)
            if (row[j] != 0) v[j] = field_.add(v[j], field_.mul(f, row[j]));
    }
    return v;
}

bool EchelonBasis::insert(const DenseVector& input) {
    if (input.size() != dim_) throw ContractError("vector length does not match echelon dimension");
    if (binary()) {
        DenseVector v = input;
        for (auto& x : v) x %= 2;
        auto b = pack(v);
        for (std::size_t r = 0; r < bit_rows_.size(); ++r)
            if (test_bit(b, pivot_col_[r])) xor_into(b, bit_rows_[r], pivot_col_[r] / 64);
        const auto col = lowest_bit(b);
        if (!col) return false;
        for (auto& row : bit_rows_)
            if (test_bit(row, *col)) xor_into(row, b, *col / 64);
        pivot_row_[*col] = static_cast<long>(bit_rows_.size());
        pivot_col_.push_back(*col);
        bit_rows_.push_back(std::move(b));
        return true;
    }
    DenseVector v = reduce(input);
    auto it = std::find_if(v.begin(), v.end(), [](Scalar x) { return x != 0; });
    if (it == v.end()) return false;
    const auto col = static_cast<std::size_t>(it - v.begin());
    const Scalar inv = field_.inv(v[col]);
    for (auto& x : v) x = field_.mul(x, inv);
    for (auto& row : rows_) {
        const Scalar c = row[col];
        if (c == 0) continue;
        const Scalar f = field_.neg(c);
        for (std::size_t j = col; j < dim_; ++j)
            if (v[j] != 0) row[j] = field_.add(row[j], field_.mul(f, v[j]));
    }
    pivot_row_[col] = static_cast<long>(rows_.size());
    pivot_col_.push_back(col);
    rows_.push_back(std::move(v));
    return true;
}

bool EchelonBasis::contains(const DenseVector& v) const {
    const auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](Scalar x) { return x == 0; });
}

std::vector<std::size_t> EchelonBasis::pivots() const {
    auto p = pivot_col_;
    std::sort(p.begin(), p.end());
    return p;
}

std::vector<DenseVector> EchelonBasis::rows() const {
    if (!binary()) return rows_;
    std::vector<DenseVector> out;
    out.reserve(bit_rows_.size());
    for (const auto& b : bit_rows_) out.push_back(unpack(b));
    return out;
}

std::vector<DenseVector> kernel_basis(PrimeField field, const std::vector<DenseVector>& columns,
                                      std::size_t column_length) {
    const std::size_t k = columns.size();
    // Row-reduce the augmented rows [column_j | e_j]; rows whose column part
    // vanishes carry kernel vectors.
    EchelonBasis eb(field, column_length + k);
    for (std::size_t j = 0; j < k; ++j) {
        if (columns[j].size() != column_length) throw ContractError("column length mismatch");
        DenseVector row(column_length + k, 0);
        std::copy(columns[j].begin(), columns[j].end(), row.begin());
        row[column_length + j] = 1;
        eb.insert(row);
    }
    EchelonBasis kb(field, k);
    for (const auto& row : eb.rows()) {
        const bool image_zero =
            std::all_of(row.begin(), row.begin() + static_cast<long>(column_length), [](Scalar x) { return x == 0; });
        if (image_zero) kb.insert(DenseVector(row.begin() + static_cast<long>(column_length), row.end()));
    }
    std::vector<DenseVector> out = kb.rows();
    auto lead = [](const DenseVector& v) {
        return std::find_if(v.begin(), v.end(), [](Scalar x) { return x != 0; }) - v.begin();
    };
    std::sort(out.begin(), out.end(), [&](const DenseVector& a, const DenseVector& b) { return lead(a) < lead(b); });
    return out;
}

std::size_t rank_of(PrimeField field, const std::vector<DenseVector>& vectors, std::size_t length) {
    EchelonBasis eb(field, length);
    for (const auto& v : vectors) eb.insert(v);
    return eb.rank();
}

BitEchelon::BitEchelon(std::size_t length) : words_((length + 63) / 64), rows_by_pivot_(length) {}

bool BitEchelon::insert(BitVector v) {
    v.resize(words_, 0);
    for (std::size_t w = 0; w < words_; ++w) {
        while (v[w] != 0) {
            const auto bit = w * 64 + static_cast<std::size_t>(std::countr_zero(v[w]));
            auto& row = rows_by_pivot_[bit];
            if (row.empty()) {
                row = std::move(v);
                ++rank_;
                return true;
            }
            xor_into(v, row, w);
        }
    }
    return false;
}

}  // namespace hodgecalc
