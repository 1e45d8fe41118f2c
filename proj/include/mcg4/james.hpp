#pragma once

#include "mcg4/f2.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace mcg4 {

// Exponent vector of a monomial in x_1..x_n; each x_i has cohomological degree 2.
using Monomial = std::vector<unsigned>;

std::string monomial_to_string(const Monomial& m);

// Element of (Z/2)[x_1, ..., x_n] with deg x_i = 2, stored as its support.
class F2Poly {
public:
    explicit F2Poly(std::size_t n) : n_(n) {}

    static F2Poly zero(std::size_t n) { return F2Poly(n); }
    static F2Poly one(std::size_t n);
    static F2Poly generator(std::size_t n, std::size_t i);
    static F2Poly monomial(std::size_t n, Monomial m);

    std::size_t generators() const { return n_; }
    const std::set<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    F2Poly operator+(const F2Poly& other) const;  // mod-2 addition
    F2Poly operator*(const F2Poly& other) const;

    bool is_homogeneous() const;
    std::size_t degree() const;  // of a homogeneous polynomial; 0 for the zero polynomial

    bool operator==(const F2Poly&) const = default;

    std::string to_string() const;

private:
    void toggle(const Monomial& m);

    std::size_t n_ = 0;
    std::set<Monomial> terms_;
};

// Total degree-2 Steenrod square: on a monomial of exponents a it is the sum of
// m * x_i over the i with a_i odd (Cartan formula; Sq^1 vanishes on this algebra).
F2Poly sq2(const F2Poly& p);

// Twisted square x |-> Sq^2(x) + w cup x for homogeneous w of degree 2 (or zero).
F2Poly sq2_w(const F2Poly& p, const F2Poly& w);

// Monomials of the given (even) cohomological degree, lexicographically
// descending so that e.g. degree 4 in two variables lists x1^2, x1 x2, x2^2.
// Odd degrees give the empty list.
std::vector<Monomial> monomial_basis(std::size_t n, std::size_t degree);

// F2 matrix of sq2_w from degree (deg) to degree (deg + 2) in the monomial bases.
F2Matrix sq2_w_matrix(std::size_t n, const F2Poly& w, std::size_t deg);

// The d2 differentials of the first-quadrant spectral sequence for degrees r <= 6:
// d2 on the s=1 row is the dual (transpose) of sq2_w, and on the s=0 row the same
// map precomposed with reduction mod 2 of the integral lattice.
struct D2Matrices {
    std::map<std::size_t, F2Matrix> s1;  // r -> matrix of d2^{r,1} : H_r -> H_{r-2}
    std::map<std::size_t, F2Matrix> s0;  // r -> matrix of d2^{r,0} after reduction mod 2
};
D2Matrices d2_matrices(std::size_t n, const F2Poly& w);

// Structure of the integral kernel of d2^{4,0} inside H_4(K; Z): a full-rank
// sublattice; index_two_generators counts the elementary divisors equal to 2.
struct E34ZeroStructure {
    std::size_t free_rank = 0;
    std::size_t unit_generators = 0;      // standard duals already in the kernel
    std::size_t index_two_generators = 0;
    std::vector<Monomial> index_two_duals;  // standard duals that enter at index 2

    bool operator==(const E34ZeroStructure&) const = default;
};

struct SSReport {
    std::size_t n = 0;
    bool spin = false;
    F2Poly w = F2Poly(0);

    std::size_t e3_22_dim = 0;
    bool e3_22_generated_by_w_dual = false;
    E34ZeroStructure e3_40;
    std::size_t e3_41_dim = 0;

    std::vector<std::string> omega4_summands;  // symbolic coefficient-group labels
    bool omega5_zero = false;

    bool operator==(const SSReport&) const = default;
};

// E3-page ranks relevant to total degrees 4 and 5, computed by exact linear
// algebra over F_2 and Z from the d2 matrices.
SSReport e3_report(std::size_t n, bool spin);

}  // namespace mcg4
