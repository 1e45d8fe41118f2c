#include "mcg4/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace mcg4 {

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows)
{
    std::vector<std::vector<long long>> v;
    v.reserve(rows.size());
    for (const auto& r : rows)
        v.emplace_back(r);
    return from_rows(v);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows)
{
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows.front().size();
    IntMatrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc)
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < nc; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::block_diag(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in +");
    IntMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        m.entries_[k] = entries_[k] + other.entries_[k];
    return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in -");
    IntMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        m.entries_[k] = entries_[k] - other.entries_[k];
    return m;
}

IntMatrix IntMatrix::operator-() const
{
    IntMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        m.entries_[k] = -entries_[k];
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const
{
    if (cols_ != other.rows_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in *");
    IntMatrix m(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                m.at(i, j) += a * other.at(k, j);
        }
    return m;
}

IntMatrix IntMatrix::operator*(const Int& scalar) const
{
    IntMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        m.entries_[k] = entries_[k] * scalar;
    return m;
}

IntMatrix operator*(const Int& scalar, const IntMatrix& m)
{
    return m * scalar;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::column(std::size_t j) const
{
    IntMatrix m(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i)
        m.at(i, 0) = at(i, j);
    return m;
}

IntMatrix IntMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw std::invalid_argument("IntMatrix::submatrix: out of range");
    IntMatrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            m.at(i, j) = at(r0 + i, c0 + j);
    return m;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& block)
{
    if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_)
        throw std::invalid_argument("IntMatrix::set_block: out of range");
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
            at(r0 + i, c0 + j) = block.at(i, j);
}

bool IntMatrix::is_zero() const
{
    for (const Int& e : entries_)
        if (e != 0)
            return false;
    return true;
}

bool IntMatrix::is_symmetric() const
{
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

bool IntMatrix::is_skew() const
{
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (at(i, i) != 0)
            return false;
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != -at(j, i))
                return false;
    }
    return true;
}

bool IntMatrix::is_identity() const
{
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

Int IntMatrix::det() const
{
    if (!is_square())
        throw std::invalid_argument("IntMatrix::det: not square");
    const std::size_t n = rows_;
    if (n == 0)
        return 1;
    IntMatrix a = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = t / prev;  // Bareiss: division is exact
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

bool IntMatrix::lex_less(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_)
        return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_)
        return a.cols_ < b.cols_;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        if (a.entries_[k] != b.entries_[k])
            return a.entries_[k] < b.entries_[k];
    return false;
}

std::string IntMatrix::to_string() const
{
    if (rows_ == 0 || cols_ == 0)
        return "[]";
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i)
            out << ',';
        out << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j)
                out << ',';
            out << at(i, j);
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

}  // namespace mcg4
