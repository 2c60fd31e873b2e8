#ifndef GMLC_BINARY_MATRIX_HPP
#define GMLC_BINARY_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gmlc {

// Bit-packed matrix over GF(2), row-major, 64 bits per word.  Values are
// immutable from the caller's point of view: every operation returns a new
// matrix.  Padding bits past `cols` are kept zero.
class BinaryMatrix {
  public:
    BinaryMatrix() : rows_(0), cols_(0), words_per_row_(0) {}
    BinaryMatrix(std::size_t rows, std::size_t cols);

    static BinaryMatrix identity(std::size_t n);
    static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);
    // Rows given as strings of '0'/'1', e.g. {"1101", "0110"}.
    static BinaryMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v);

    void xor_row(std::size_t dst, std::size_t src); // row[dst] ^= row[src]
    void swap_rows(std::size_t a, std::size_t b);

    std::size_t row_weight(std::size_t r) const;
    std::vector<std::size_t> row_support(std::size_t r) const;
    bool row_is_zero(std::size_t r) const;

    BinaryMatrix transposed() const;
    // Stacks `other` below this matrix (column counts must match).
    BinaryMatrix stacked(const BinaryMatrix& other) const;
    // Keeps the given columns, in the given order.
    BinaryMatrix select_columns(const std::vector<std::size_t>& cols) const;
    BinaryMatrix select_rows(const std::vector<std::size_t>& rows) const;
    BinaryMatrix appended_column(const std::vector<int>& col) const;
    BinaryMatrix appended_row(const std::vector<std::size_t>& support) const;

    // y = x * M where x has rows() bits; result has cols() bits.
    std::vector<uint64_t> mul_left(const std::vector<uint64_t>& x_words) const;

    bool operator==(const BinaryMatrix& o) const;
    bool operator!=(const BinaryMatrix& o) const { return !(*this == o); }

    std::string to_string() const;

    const std::vector<uint64_t>& words() const { return bits_; }
    std::size_t words_per_row() const { return words_per_row_; }
    uint64_t* row_ptr(std::size_t r) { return bits_.data() + r * words_per_row_; }
    const uint64_t* row_ptr(std::size_t r) const { return bits_.data() + r * words_per_row_; }

  private:
    std::size_t rows_, cols_, words_per_row_;
    std::vector<uint64_t> bits_;
};

struct RowReduceResult {
    BinaryMatrix matrix;               // row-reduced (RREF) matrix, zero rows last
    std::vector<std::size_t> pivots;   // pivot column per nonzero row
    std::size_t rank;
    // Preferred pivot columns that turned out dependent and were skipped.
    std::vector<std::size_t> skipped_pivots;
};

std::size_t gf2_rank(const BinaryMatrix& m);

// Reduced row echelon form with pivot columns chosen greedily from
// `preferred_pivots` first, then lowest index.  Preferred columns that are
// dependent on earlier pivots are reported in `skipped_pivots` and skipped.
RowReduceResult systematic_form(const BinaryMatrix& m,
                                const std::vector<std::size_t>& preferred_pivots = {});

// Basis of the null space {x : M x^T = 0}; one row per basis vector,
// cols() columns, or a 0 x cols() matrix when the null space is trivial.
BinaryMatrix null_space(const BinaryMatrix& m);

// Row space containment / equality via rank identities.
bool row_space_contains(const BinaryMatrix& outer, const BinaryMatrix& inner);
bool row_space_equal(const BinaryMatrix& a, const BinaryMatrix& b);

// Minimal span form: every row has a distinct leading and distinct trailing
// column.  Row space is unchanged.
BinaryMatrix minimal_span_form(const BinaryMatrix& m);

} // namespace gmlc

#endif
