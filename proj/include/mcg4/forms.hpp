#pragma once

#include "mcg4/int_matrix.hpp"

#include <stdexcept>
#include <vector>

namespace mcg4 {

// Symmetric bilinear form on Z^n, lambda(x, y) = x^T * gram * y.
// Vectors are columns; maps compose left of the argument.
class SymmetricForm {
public:
    SymmetricForm() = default;  // the empty form on Z^0
    explicit SymmetricForm(IntMatrix gram);

    static SymmetricForm empty() { return SymmetricForm(); }
    static SymmetricForm zero(std::size_t n) { return SymmetricForm(IntMatrix(n, n)); }
    static SymmetricForm hyperbolic();
    static SymmetricForm e8();

    const IntMatrix& gram() const { return gram_; }
    std::size_t rank() const { return gram_.rows(); }

    Int pair(const IntMatrix& x, const IntMatrix& y) const;  // columns

    bool operator==(const SymmetricForm&) const = default;

private:
    IntMatrix gram_;
};

SymmetricForm direct_sum(const SymmetricForm& a, const SymmetricForm& b);

// Saturated basis of the radical ker(gram); columns extend to a basis of Z^n.
IntMatrix radical_basis(const SymmetricForm& f);
std::size_t corank(const SymmetricForm& f);

// A^T * Q * A = Q and A unimodular.
bool is_isometry(const SymmetricForm& f, const IntMatrix& a);

bool is_even(const SymmetricForm& f);

enum class Definiteness { Empty, PositiveDefinite, NegativeDefinite, Indefinite, Degenerate };
Definiteness classify_definiteness(const SymmetricForm& f);

struct EnumerationUnsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Result of isometry-group enumeration.  The order is always exact.  Elements are
// materialized (sorted lexicographically) only when the order fits under the cap;
// otherwise the generators from the stabilizer chain are still available, and
// orbit_sizes records the chain data (their product is the order).
struct IsometryGroup {
    Int order;
    bool materialized = false;
    std::vector<IntMatrix> elements;
    std::vector<IntMatrix> generators;
    std::vector<Int> orbit_sizes;
};

inline constexpr std::size_t kDefaultMaterializeCap = 200000;

// Complete for definite forms of any rank (stabilizer-chain counting), for rank <= 1,
// and for the standard hyperbolic plane (whose only integer isometries are +-I and
// +-swap).  Throws EnumerationUnsupported for other indefinite or degenerate forms,
// whose isometry groups are infinite or out of scope.
IsometryGroup enumerate_isometries(const SymmetricForm& f,
                                   std::size_t materialize_cap = kDefaultMaterializeCap);

Int isometry_group_order(const SymmetricForm& f);

// All v in Z^n with v^T * Q * v = norm, for positive-definite Q; sorted lexicographically.
std::vector<std::vector<long long>> short_vectors(const SymmetricForm& f, const Int& norm);

}  // namespace mcg4
