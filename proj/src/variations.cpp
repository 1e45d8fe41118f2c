#include "mcg4/variations.hpp"

#include "mcg4/snf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mcg4 {

FormVariation::FormVariation(SymmetricForm form, IntMatrix v)
    : form_(std::move(form)), v_(std::move(v))
{
    if (!is_variation(form_, v_))
        throw std::invalid_argument("FormVariation: matrix fails V + V^T = V Q V^T");
}

FormVariation FormVariation::zero(const SymmetricForm& form)
{
    return FormVariation(form, IntMatrix(form.rank(), form.rank()));
}

bool is_variation(const SymmetricForm& q, const IntMatrix& v)
{
    if (v.rows() != q.rank() || v.cols() != q.rank())
        throw std::invalid_argument("is_variation: dimension mismatch");
    return v + v.transposed() == v * q.gram() * v.transposed();
}

FormVariation compose(const FormVariation& a, const FormVariation& b)
{
    if (a.form() != b.form())
        throw std::invalid_argument("compose: variations attached to different forms");
    const IntMatrix& v1 = a.matrix();
    const IntMatrix& v2 = b.matrix();
    const IntMatrix i = IntMatrix::identity(a.form().rank());
    return FormVariation(a.form(), v1 + (i - v1 * a.form().gram()) * v2);
}

FormVariation inverse(const FormVariation& v)
{
    const IntMatrix i = IntMatrix::identity(v.form().rank());
    return FormVariation(v.form(), -((i - v.matrix().transposed() * v.form().gram()) * v.matrix()));
}

IntMatrix induced_isometry(const FormVariation& v)
{
    return IntMatrix::identity(v.form().rank()) - v.matrix() * v.form().gram();
}

std::vector<FormVariation> variation_kernel_basis(const SymmetricForm& q)
{
    const IntMatrix r = radical_basis(q);
    const std::size_t k = r.cols();
    std::vector<FormVariation> out;
    out.reserve(k * (k - 1) / 2);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const IntMatrix ri = r.column(i);
            const IntMatrix rj = r.column(j);
            out.emplace_back(q, ri * rj.transposed() - rj * ri.transposed());
        }
    return out;
}

SkewForm::SkewForm(IntMatrix b) : b_(std::move(b))
{
    if (!b_.is_skew())
        throw std::invalid_argument("SkewForm: matrix must be skew-symmetric with zero diagonal");
}

FormVariation variation_from_skew(const SymmetricForm& q, const SkewForm& kappa)
{
    const IntMatrix r = radical_basis(q);
    if (kappa.rank() != r.cols())
        throw std::invalid_argument("variation_from_skew: skew form rank must equal the corank");
    return FormVariation(q, r * kappa.matrix() * r.transposed());
}

bool is_rel_boundary(const SymmetricForm& q, const IntMatrix& a)
{
    if (!is_isometry(q, a))
        return false;
    const IntMatrix r = radical_basis(q);
    if (a * r != r)
        return false;
    const IntMatrix lhs = a.transposed() - IntMatrix::identity(q.rank());
    return solve_linear(q.gram(), lhs).has_value();
}

TriState fixes_boundary_spin_structures(const SymmetricForm& q, bool spin, const IntMatrix& a,
                                        const std::optional<SpinTorsorData>& data)
{
    if (!is_rel_boundary(q, a))
        throw std::invalid_argument("fixes_boundary_spin_structures: isometry is not rel boundary");
    if (spin)
        return TriState::Yes;  // every rel-boundary isometry fixes the spin permutation
    if (a.is_identity())
        return TriState::Yes;
    if (!data)
        return TriState::Unknown;

    const std::size_t n = q.rank();
    if (data->linear.rows() != n || data->linear.cols() != data->torsor_dim ||
        data->base.rows() != n || data->base.cols() != 1)
        throw std::invalid_argument("fixes_boundary_spin_structures: malformed torsor data");
    if (data->torsor_dim > 24)
        throw std::invalid_argument("fixes_boundary_spin_structures: torsor dimension too large");

    const F2Matrix a2 = F2Matrix::reduction_mod2(a);
    // The identity permutation commutes iff A fixes every value of the w2 map.
    const F2Matrix base_moved = a2 * data->base + data->base;
    const F2Matrix lin_moved = a2 * data->linear + data->linear;
    if (base_moved.is_zero() && lin_moved.is_zero())
        return TriState::Yes;

    // Otherwise some permutation must still match the moved values; if the value
    // multisets differ the data cannot come from an isometry of a manifold.
    auto values = [&](bool moved) {
        std::vector<std::string> out;
        const std::size_t count = std::size_t{1} << data->torsor_dim;
        for (std::size_t s = 0; s < count; ++s) {
            F2Matrix x(data->torsor_dim, 1);
            for (std::size_t b = 0; b < data->torsor_dim; ++b)
                x.set(b, 0, (s >> b) & 1);
            F2Matrix v = data->linear * x + data->base;
            if (moved)
                v = a2 * v;
            out.push_back(v.to_string());
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    if (values(false) != values(true))
        throw std::invalid_argument(
            "fixes_boundary_spin_structures: torsor data inconsistent with the isometry");
    return TriState::No;
}

std::optional<FormVariation> lift_isometry(const SymmetricForm& q, const IntMatrix& a)
{
    if (a.rows() != q.rank() || a.cols() != q.rank())
        throw std::invalid_argument("lift_isometry: dimension mismatch");
    if (!is_rel_boundary(q, a))
        return std::nullopt;  // the induced isometry of any variation is rel boundary

    const std::size_t n = q.rank();
    const IntMatrix identity = IntMatrix::identity(n);

    // Particular solution of V Q = I - A, i.e. Q V^T = (I - A)^T.
    const auto vt = solve_linear(q.gram(), (identity - a).transposed());
    if (!vt)
        return std::nullopt;
    const IntMatrix v0 = vt->transposed();

    if (is_variation(q, v0))
        return FormVariation(q, v0);

    // Every solution is V0 + E R^T with R the radical basis, and Q R = 0 makes the
    // membership defect linear in E:  E R^T + R E^T = S.
    const auto kc = kernel_with_completion(q.gram());
    const IntMatrix& r = kc.kernel;
    const std::size_t k = r.cols();
    if (k == 0)
        return std::nullopt;

    const IntMatrix s = v0 * q.gram() * v0.transposed() - v0 - v0.transposed();
    const IntMatrix u_inv = unimodular_inverse(kc.completion);
    const IntMatrix s_adapted = u_inv * s * u_inv.transposed();

    // In the adapted basis (radical first) the equation splits into blocks:
    // F1 + F1^T = S11 (so S11 needs an even diagonal), F2 = S21, and S22 = 0.
    for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
            if (s_adapted.at(i, j) != 0)
                return std::nullopt;
    for (std::size_t i = 0; i < k; ++i)
        if (s_adapted.at(i, i) % 2 != 0)
            return std::nullopt;

    IntMatrix f(n, k);
    for (std::size_t i = 0; i < k; ++i) {
        f.at(i, i) = s_adapted.at(i, i) / 2;
        for (std::size_t j = 0; j < i; ++j)
            f.at(i, j) = s_adapted.at(i, j);
    }
    for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j)
            f.at(i, j) = s_adapted.at(i, j);

    const IntMatrix e = kc.completion * f;
    return FormVariation(q, v0 + e * r.transposed());
}

FormVariation conjugate(const SymmetricForm& target, const IntMatrix& psi, const FormVariation& v)
{
    if (psi.rows() != target.rank() || psi.cols() != v.form().rank())
        throw std::invalid_argument("conjugate: dimension mismatch");
    if (!is_unimodular(psi) || psi.transposed() * target.gram() * psi != v.form().gram())
        throw std::invalid_argument("conjugate: psi is not an isometry onto the target form");
    return FormVariation(target, psi * v.matrix() * psi.transposed());
}

FormVariation stabilize_variation(const FormVariation& v)
{
    const SymmetricForm extended = direct_sum(v.form(), SymmetricForm::hyperbolic());
    return FormVariation(extended, IntMatrix::block_diag(v.matrix(), IntMatrix(2, 2)));
}

}  // namespace mcg4
