// Exact dense matrices over GF(p). Rows over GF(2) are packed into 64-bit
// words with word-parallel row operations; odd-p storage is residue arrays.
// The API is identical for both, only throughput differs.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lcdkit/field.hpp"

namespace lcdkit {

// Raised on malformed matrix text (distinct from domain precondition errors).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Matrix {
public:
    Matrix(Field f, std::size_t rows, std::size_t cols);  // zero-filled
    static Matrix identity(Field f, std::size_t n);

    // Shared text format: rows separated by ';' or newline; entries are single
    // digits when p < 10, otherwise comma-separated integers. "110;011" is a
    // 2x3 matrix over GF(2).
    static Matrix from_text(Field f, std::string_view text);
    std::string to_text() const;

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Element at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Element v);

    Matrix mul(const Matrix& rhs) const;
    Matrix transpose() const;
    Matrix gram() const;  // this * this^T
    Matrix vstack(const Matrix& below) const;

    struct Rref;  // defined below, outside the class body
    Rref rref() const;

    Element det() const;      // square input only
    Matrix inverse() const;   // throws on singular input
    // Basis of {x : m x^T = 0} as rows, in canonical RREF; (cols - rank) rows.
    Matrix right_kernel() const;

    bool is_zero() const;
    bool is_symmetric() const;
    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    // In-place elementary operations (plumbing for elimination algorithms;
    // shared instances are treated as immutable).
    void swap_rows(std::size_t i, std::size_t j);
    void scale_row(std::size_t i, Element s);
    void add_row_multiple(std::size_t dst, std::size_t src, Element s);
    void swap_cols(std::size_t i, std::size_t j);
    void scale_col(std::size_t i, Element s);
    void add_col_multiple(std::size_t dst, std::size_t src, Element s);

    // Packed-row access, valid only when the field is GF(2).
    std::size_t words_per_row() const { return wpr_; }
    std::uint64_t row_word(std::size_t r, std::size_t w) const { return bits_[r * wpr_ + w]; }
    void xor_row_word(std::size_t r, std::size_t w, std::uint64_t m) { bits_[r * wpr_ + w] ^= m; }

private:
    Element dot_rows(const Matrix& other, std::size_t i, std::size_t j) const;

    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::size_t wpr_ = 0;              // words per row (binary storage)
    std::vector<std::uint64_t> bits_;  // p == 2
    std::vector<Element> vals_;        // p odd, row-major
};

struct Matrix::Rref {
    Matrix reduced;                    // canonical RREF, same shape as input
    std::size_t rank;
    std::vector<std::size_t> pivots;   // strictly increasing
    Matrix transform;                  // invertible, transform * input = reduced
};

}  // namespace lcdkit
