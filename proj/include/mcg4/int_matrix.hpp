#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mcg4 {

using Int = boost::multiprecision::cpp_int;

// Dense matrix over Z with exact arbitrary-precision entries.
// Row-major storage; empty (0xN, Nx0, 0x0) matrices are ordinary values.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);
    static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const IntMatrix& other) const = default;

    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;
    IntMatrix operator-() const;
    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix operator*(const Int& scalar) const;

    IntMatrix transposed() const;
    IntMatrix column(std::size_t j) const;
    IntMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const IntMatrix& block);

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_symmetric() const;
    bool is_skew() const;
    bool is_identity() const;

    // Fraction-free Bareiss determinant; square matrices only, det of 0x0 is 1.
    Int det() const;

    // Strict total order on (rows, cols, entries); used for deterministic listings.
    static bool lex_less(const IntMatrix& a, const IntMatrix& b);

    // Compact text form, e.g. [[0,1],[1,0]]; [] for empty matrices.
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

IntMatrix operator*(const Int& scalar, const IntMatrix& m);

}  // namespace mcg4
