#pragma once

#include "mcg4/f2.hpp"
#include "mcg4/forms.hpp"
#include "mcg4/int_matrix.hpp"

#include <optional>
#include <vector>

namespace mcg4 {

// Member of the group of form variations of (Z^n, Q): an n x n integer matrix V
// with V + V^T = V * Q * V^T.  Constructing one validates membership.
class FormVariation {
public:
    FormVariation(SymmetricForm form, IntMatrix v);

    static FormVariation zero(const SymmetricForm& form);

    const SymmetricForm& form() const { return form_; }
    const IntMatrix& matrix() const { return v_; }

    bool operator==(const FormVariation&) const = default;

private:
    SymmetricForm form_;
    IntMatrix v_;
};

bool is_variation(const SymmetricForm& q, const IntMatrix& v);

// Group law V1 * V2 = V1 + (I - V1 Q) V2; identity 0; inverse -(I - V^T Q) V.
FormVariation compose(const FormVariation& a, const FormVariation& b);
FormVariation inverse(const FormVariation& v);

// The isometry I - V Q induced on Z^n.  A group homomorphism to Aut(Q).
IntMatrix induced_isometry(const FormVariation& v);

// Z-basis of the variations inducing the identity isometry: the skew matrices V
// with V Q = 0.  These form the Torelli part; the basis has C(corank, 2) members
// R (E_ij - E_ji) R^T over i < j for R the radical basis.
std::vector<FormVariation> variation_kernel_basis(const SymmetricForm& q);

// Skew-symmetric integer pairing on the free part of the boundary H_1, expressed
// in the basis dual to the radical basis of the attached form.
class SkewForm {
public:
    explicit SkewForm(IntMatrix b);
    static SkewForm zero(std::size_t k) { return SkewForm(IntMatrix(k, k)); }

    const IntMatrix& matrix() const { return b_; }
    std::size_t rank() const { return b_.rows(); }

    bool operator==(const SkewForm&) const = default;

private:
    IntMatrix b_;
};

// Embeds a skew pairing as the variation R * B * R^T, which induces the identity
// isometry.  An injective homomorphism onto the span of variation_kernel_basis;
// on that kernel the group law is plain matrix addition.
FormVariation variation_from_skew(const SymmetricForm& q, const SkewForm& kappa);

// A is rel boundary when it fixes the radical pointwise and induces the identity
// on coker(Q), i.e. A^T - I = Q * M has an integer solution.
bool is_rel_boundary(const SymmetricForm& q, const IntMatrix& a);

enum class TriState { Yes, No, Unknown };

// Affine model of the relative w2 map from boundary spin structures to H_2(X; Z/2):
// spin structures form a torsor over F_2^t and the map is s |-> base + linear * s.
struct SpinTorsorData {
    std::size_t torsor_dim = 0;  // t
    F2Matrix linear;             // n x t
    F2Matrix base;               // n x 1
};

// Whether the isometry permutes boundary spin structures trivially.  Spin models
// answer Yes outright; with torsor data the permutation diagram is solved; with
// neither the answer is Unknown.
TriState fixes_boundary_spin_structures(const SymmetricForm& q, bool spin, const IntMatrix& a,
                                        const std::optional<SpinTorsorData>& data = std::nullopt);

// A variation V with induced_isometry(V) = A, when one exists.  The defect of any
// solution of V Q = I - A is linear in the admissible correction (corrections W
// satisfy W Q = 0, killing the quadratic term), so absence is exact: nullopt
// means no variation induces A.
std::optional<FormVariation> lift_isometry(const SymmetricForm& q, const IntMatrix& a);

// Transport along an isometry psi : (Z^n, alpha) -> (Z^n, beta) with
// psi^T * beta * psi = alpha; sends V to psi * V * psi^T.  A group isomorphism.
FormVariation conjugate(const SymmetricForm& target, const IntMatrix& psi, const FormVariation& v);

// Extend by zero over form (+) hyperbolic: an injective group homomorphism.
FormVariation stabilize_variation(const FormVariation& v);

}  // namespace mcg4
