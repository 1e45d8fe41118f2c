#pragma once

#include "mcg4/int_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mcg4 {

// Dense matrix over F_2, bit-packed by row.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), bits_(rows * words_per_row_) {}

    static F2Matrix identity(std::size_t n);
    static F2Matrix reduction_mod2(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const
    {
        return (bits_[i * words_per_row_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v)
    {
        uint64_t& w = bits_[i * words_per_row_ + j / 64];
        const uint64_t mask = uint64_t{1} << (j % 64);
        w = v ? (w | mask) : (w & ~mask);
    }

    bool operator==(const F2Matrix& other) const = default;

    F2Matrix operator+(const F2Matrix& other) const;
    F2Matrix operator*(const F2Matrix& other) const;
    F2Matrix transposed() const;
    bool is_zero() const;

    std::string to_string() const;

private:
    friend std::size_t f2_rank(F2Matrix m);
    friend F2Matrix f2_kernel_basis(const F2Matrix& m);
    friend bool f2_in_column_space(const F2Matrix& m, const F2Matrix& v);

    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<uint64_t> bits_;
};

std::size_t f2_rank(F2Matrix m);

// Columns form a basis of ker(m); rank + kernel columns = cols.
F2Matrix f2_kernel_basis(const F2Matrix& m);

// Does m * x = v admit a solution?  v is a rows x 1 matrix.
bool f2_in_column_space(const F2Matrix& m, const F2Matrix& v);

}  // namespace mcg4
