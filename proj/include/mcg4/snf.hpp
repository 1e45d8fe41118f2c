#pragma once

#include "mcg4/int_matrix.hpp"

#include <optional>
#include <vector>

namespace mcg4 {

// left * source * right = diag(diagonal), padded with zeros off the main diagonal.
// diagonal has length min(rows, cols), entries nonnegative, each dividing the next
// (zeros sit at the end; everything divides 0).
struct SmithDecomposition {
    IntMatrix left;               // unimodular, rows x rows
    IntMatrix right;              // unimodular, cols x cols
    std::vector<Int> diagonal;
    std::size_t source_rows = 0;
    std::size_t source_cols = 0;

    std::size_t rank() const;
    IntMatrix diagonal_matrix() const;  // source_rows x source_cols
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Columns form a saturated Z-basis of ker(m); the kernel is a direct summand of Z^cols.
IntMatrix kernel_basis(const IntMatrix& m);

// Kernel basis together with a unimodular completion: the returned matrix is
// cols x cols unimodular whose first corank columns are the kernel basis.
struct KernelWithCompletion {
    IntMatrix kernel;      // cols x k
    IntMatrix completion;  // cols x cols unimodular, kernel in the leading columns
};
KernelWithCompletion kernel_with_completion(const IntMatrix& m);

// coker(m : Z^cols -> Z^rows) = Z^free_rank + sum of Z/torsion_i, torsion_i | torsion_{i+1}.
struct CokernelPresentation {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // each > 1

    bool operator==(const CokernelPresentation&) const = default;
};
CokernelPresentation cokernel_presentation(const IntMatrix& m);

// An integer solution X of m * X = b, if one exists.
std::optional<IntMatrix> solve_linear(const IntMatrix& m, const IntMatrix& b);

std::size_t integer_rank(const IntMatrix& m);

// Inverse of a unimodular matrix; throws std::invalid_argument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

}  // namespace mcg4
