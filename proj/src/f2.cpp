#include "mcg4/f2.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace mcg4 {

F2Matrix F2Matrix::identity(std::size_t n)
{
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::reduction_mod2(const IntMatrix& src)
{
    F2Matrix m(src.rows(), src.cols());
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j)
            m.set(i, j, src.at(i, j) % 2 != 0);
    return m;
}

F2Matrix F2Matrix::operator+(const F2Matrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("F2Matrix: dimension mismatch in +");
    F2Matrix m = *this;
    for (std::size_t k = 0; k < bits_.size(); ++k)
        m.bits_[k] ^= other.bits_[k];
    return m;
}

F2Matrix F2Matrix::operator*(const F2Matrix& other) const
{
    if (cols_ != other.rows_)
        throw std::invalid_argument("F2Matrix: dimension mismatch in *");
    F2Matrix m(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (get(i, k))
                for (std::size_t w = 0; w < other.words_per_row_; ++w)
                    m.bits_[i * m.words_per_row_ + w] ^= other.bits_[k * other.words_per_row_ + w];
    return m;
}

F2Matrix F2Matrix::transposed() const
{
    F2Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j))
                m.set(j, i, true);
    return m;
}

bool F2Matrix::is_zero() const
{
    for (uint64_t w : bits_)
        if (w)
            return false;
    return true;
}

void F2Matrix::xor_row(std::size_t dst, std::size_t src)
{
    for (std::size_t w = 0; w < words_per_row_; ++w)
        bits_[dst * words_per_row_ + w] ^= bits_[src * words_per_row_ + w];
}

void F2Matrix::swap_rows(std::size_t a, std::size_t b)
{
    for (std::size_t w = 0; w < words_per_row_; ++w)
        std::swap(bits_[a * words_per_row_ + w], bits_[b * words_per_row_ + w]);
}

std::string F2Matrix::to_string() const
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i)
            out << ',';
        out << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j)
                out << ',';
            out << (get(i, j) ? 1 : 0);
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

std::size_t f2_rank(F2Matrix m)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols_ && r < m.rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows_ && !m.get(pivot, c))
            ++pivot;
        if (pivot == m.rows_)
            continue;
        if (pivot != r)
            m.swap_rows(r, pivot);
        for (std::size_t i = 0; i < m.rows_; ++i)
            if (i != r && m.get(i, c))
                m.xor_row(i, r);
        ++r;
    }
    return r;
}

F2Matrix f2_kernel_basis(const F2Matrix& m)
{
    F2Matrix a = m;
    const std::size_t nr = a.rows();
    const std::size_t nc = a.cols();

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t pivot = r;
        while (pivot < nr && !a.get(pivot, c))
            ++pivot;
        if (pivot == nr)
            continue;
        if (pivot != r)
            a.swap_rows(r, pivot);
        for (std::size_t i = 0; i < nr; ++i)
            if (i != r && a.get(i, c))
                a.xor_row(i, r);
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : pivot_col)
        is_pivot[c] = true;

    F2Matrix kernel(nc, nc - pivot_col.size());
    std::size_t k = 0;
    for (std::size_t c = 0; c < nc; ++c) {
        if (is_pivot[c])
            continue;
        kernel.set(c, k, true);
        for (std::size_t p = 0; p < pivot_col.size(); ++p)
            if (a.get(p, c))
                kernel.set(pivot_col[p], k, true);
        ++k;
    }
    return kernel;
}

bool f2_in_column_space(const F2Matrix& m, const F2Matrix& v)
{
    if (v.rows() != m.rows() || v.cols() != 1)
        throw std::invalid_argument("f2_in_column_space: v must be rows x 1");
    // Rank comparison of [m] and [m | v].
    F2Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug.set(i, j, m.get(i, j));
        aug.set(i, m.cols(), v.get(i, 0));
    }
    return f2_rank(m) == f2_rank(aug);
}

}  // namespace mcg4
