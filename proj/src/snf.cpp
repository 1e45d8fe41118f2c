#include "mcg4/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcg4 {

std::size_t SmithDecomposition::rank() const
{
    std::size_t r = 0;
    for (const Int& d : diagonal)
        if (d != 0)
            ++r;
    return r;
}

IntMatrix SmithDecomposition::diagonal_matrix() const
{
    IntMatrix d(source_rows, source_cols);
    for (std::size_t i = 0; i < diagonal.size(); ++i)
        d.at(i, i) = diagonal[i];
    return d;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        std::swap(m.at(i, a), m.at(i, b));
}

void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& c)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(dst, j) += c * m.at(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& c)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        m.at(i, dst) += c * m.at(i, src);
}

void negate_row(IntMatrix& m, std::size_t r)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(r, j) = -m.at(r, j);
}

// Smallest nonzero |entry| in the trailing block, lowest row then column on ties.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc)
{
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d.at(i, j) == 0)
                continue;
            Int a = abs(d.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

bool cross_cleared(const IntMatrix& d, std::size_t t)
{
    for (std::size_t i = t + 1; i < d.rows(); ++i)
        if (d.at(i, t) != 0)
            return false;
    for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (d.at(t, j) != 0)
            return false;
    return true;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m)
{
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    const std::size_t nmin = std::min(nr, nc);

    IntMatrix d = m;
    IntMatrix left = IntMatrix::identity(nr);
    IntMatrix right = IntMatrix::identity(nc);

    for (std::size_t t = 0; t < nmin; ++t) {
        std::size_t pr = t, pc = t;
        if (!find_pivot(d, t, pr, pc))
            break;  // trailing block is zero
        if (pr != t) {
            swap_rows(d, t, pr);
            swap_rows(left, t, pr);
        }
        if (pc != t) {
            swap_cols(d, t, pc);
            swap_cols(right, t, pc);
        }

        while (true) {
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (d.at(i, t) == 0)
                    continue;
                Int q = d.at(i, t) / d.at(t, t);
                add_row(d, i, t, -q);
                add_row(left, i, t, -q);
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (d.at(t, j) == 0)
                    continue;
                Int q = d.at(t, j) / d.at(t, t);
                add_col(d, j, t, -q);
                add_col(right, j, t, -q);
            }
            if (!cross_cleared(d, t)) {
                // Remainders survived truncated division; re-pick the pivot.
                std::size_t qr = t, qc = t;
                find_pivot(d, t, qr, qc);
                if (qr != t) {
                    swap_rows(d, t, qr);
                    swap_rows(left, t, qr);
                }
                if (qc != t) {
                    swap_cols(d, t, qc);
                    swap_cols(right, t, qc);
                }
                continue;
            }
            // Pivot must divide the whole trailing block for the divisor chain.
            bool divides = true;
            for (std::size_t i = t + 1; i < nr && divides; ++i)
                for (std::size_t j = t + 1; j < nc && divides; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        add_row(d, t, i, 1);
                        add_row(left, t, i, 1);
                        divides = false;
                    }
            if (divides)
                break;
        }

        if (d.at(t, t) < 0) {
            negate_row(d, t);
            negate_row(left, t);
        }
    }

    SmithDecomposition out;
    out.left = std::move(left);
    out.right = std::move(right);
    out.source_rows = nr;
    out.source_cols = nc;
    out.diagonal.resize(nmin);
    for (std::size_t i = 0; i < nmin; ++i)
        out.diagonal[i] = d.at(i, i);
    return out;
}

IntMatrix kernel_basis(const IntMatrix& m)
{
    return kernel_with_completion(m).kernel;
}

KernelWithCompletion kernel_with_completion(const IntMatrix& m)
{
    const SmithDecomposition snf = smith_normal_form(m);
    const std::size_t nc = m.cols();

    std::vector<std::size_t> kernel_idx;
    std::vector<std::size_t> other_idx;
    for (std::size_t j = 0; j < nc; ++j) {
        const bool in_kernel = j >= snf.diagonal.size() || snf.diagonal[j] == 0;
        (in_kernel ? kernel_idx : other_idx).push_back(j);
    }

    KernelWithCompletion out;
    out.completion = IntMatrix(nc, nc);
    std::size_t col = 0;
    for (std::size_t j : kernel_idx) {
        for (std::size_t i = 0; i < nc; ++i)
            out.completion.at(i, col) = snf.right.at(i, j);
        ++col;
    }
    for (std::size_t j : other_idx) {
        for (std::size_t i = 0; i < nc; ++i)
            out.completion.at(i, col) = snf.right.at(i, j);
        ++col;
    }
    out.kernel = out.completion.submatrix(0, 0, nc, kernel_idx.size());
    return out;
}

CokernelPresentation cokernel_presentation(const IntMatrix& m)
{
    const SmithDecomposition snf = smith_normal_form(m);
    CokernelPresentation out;
    out.free_rank = m.rows() - snf.rank();
    for (const Int& d : snf.diagonal)
        if (d > 1)
            out.torsion.push_back(d);
    return out;
}

std::optional<IntMatrix> solve_linear(const IntMatrix& m, const IntMatrix& b)
{
    if (m.rows() != b.rows())
        throw std::invalid_argument("solve_linear: row count of b must match m");
    const SmithDecomposition snf = smith_normal_form(m);
    const IntMatrix lb = snf.left * b;
    const std::size_t nmin = snf.diagonal.size();

    IntMatrix y(m.cols(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const Int& rhs = lb.at(i, c);
            if (i < nmin && snf.diagonal[i] != 0) {
                if (rhs % snf.diagonal[i] != 0)
                    return std::nullopt;
                y.at(i, c) = rhs / snf.diagonal[i];
            } else if (rhs != 0) {
                return std::nullopt;
            }
        }
    }
    return snf.right * y;
}

std::size_t integer_rank(const IntMatrix& m)
{
    return smith_normal_form(m).rank();
}

bool is_unimodular(const IntMatrix& m)
{
    if (!m.is_square())
        return false;
    const Int d = m.det();
    return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("unimodular_inverse: not square");
    const SmithDecomposition snf = smith_normal_form(m);
    for (const Int& d : snf.diagonal)
        if (d != 1)
            throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
    // left * m * right = I, so m^{-1} = right * left.
    return snf.right * snf.left;
}

}  // namespace mcg4
