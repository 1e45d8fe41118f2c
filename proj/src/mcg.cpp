#include "mcg4/mcg.hpp"

#include "mcg4/snf.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mcg4 {

std::size_t binomial2(std::size_t n)
{
    return n < 2 ? 0 : n * (n - 1) / 2;
}

void ManifoldModel::validate_and_normalize()
{
    const std::size_t b = corank(form);
    if (boundary_components == 0) {
        if (b != 0)
            throw std::invalid_argument(
                "model '" + name + "': a closed manifold needs a nondegenerate intersection form");
        if (spin && !is_even(form))
            throw std::invalid_argument(
                "model '" + name + "': a closed spin manifold has an even intersection form");
    }
    if (!components)
        return;
    if (components->size() != boundary_components)
        throw std::invalid_argument("model '" + name +
                                    "': component list length must equal boundary_components");
    for (auto& c : *components) {
        if (c.seifert_euler) {
            auto& [a, bq] = *c.seifert_euler;
            if (bq == 0)
                throw std::invalid_argument("model '" + name + "': Seifert Euler denominator is zero");
            if (bq < 0) {
                a = -a;
                bq = -bq;
            }
            const long long g = std::gcd(a < 0 ? -a : a, bq);
            if (g > 1) {
                a /= g;
                bq /= g;
            }
        }
        if (c.heegaard_genus && *c.heegaard_genus <= 1) {
            // Heegaard genus <= 1 guarantees a generalized Dehn twist.
            if (c.admits_gdt == TriState::No)
                throw std::invalid_argument(
                    "model '" + name + "': component '" + c.label +
                    "' has Heegaard genus <= 1 and therefore admits a generalized Dehn twist");
            c.admits_gdt = TriState::Yes;
        }
    }
}

namespace {

AutBoundaryDescription describe_aut_boundary(const SymmetricForm& form,
                                             std::vector<std::string>& caveats)
{
    AutBoundaryDescription out;
    const std::size_t n = form.rank();
    const std::size_t b = corank(form);

    if (n == 0) {
        out.kind = AutKind::Trivial;
        out.finite = true;
        out.order = 1;
        out.lifted_order = 1;
        out.lift_certified = true;
        out.all_lift = true;
        out.text = "trivial group (order 1)";
        return out;
    }

    if (b == n) {
        // Zero form: rel-boundary isometries fix the radical pointwise, which is everything.
        out.kind = AutKind::Trivial;
        out.finite = true;
        out.order = 1;
        out.lifted_order = 1;
        out.lift_certified = true;
        out.all_lift = true;
        out.text = "trivial group (the form vanishes, so rel-boundary isometries are the identity)";
        return out;
    }

    if (b > 0) {
        // Mixed degenerate form: transvections by radical vectors give a free abelian
        // unipotent subgroup of rel-boundary isometries.
        out.kind = AutKind::InfiniteUnipotent;
        out.finite = false;
        out.text = "infinite (contains a free abelian unipotent subgroup of positive rank)";
        return out;
    }

    // Nondegenerate form.
    try {
        IsometryGroup group = enumerate_isometries(form);
        if (group.materialized) {
            Int aut_d = 0;
            Int lifted = 0;
            for (const IntMatrix& a : group.elements) {
                if (!is_rel_boundary(form, a))
                    continue;
                aut_d += 1;
                if (lift_isometry(form, a))
                    lifted += 1;
            }
            out.kind = AutKind::Enumerated;
            out.finite = true;
            out.order = aut_d;
            out.lifted_order = lifted;
            out.lift_certified = true;
            out.all_lift = lifted == aut_d;
            out.text = "finite, order " + out.order.str() + " (enumerated)";
        } else if (is_unimodular(form.gram())) {
            // Unimodular: coker(Q) = 0 makes every isometry rel boundary, and
            // (I - A) Q^{-1} is integral, so every isometry lifts.
            out.kind = AutKind::OrderOnly;
            out.finite = true;
            out.order = group.order;
            out.lifted_order = group.order;
            out.lift_certified = true;
            out.all_lift = true;
            out.text = "finite, order " + out.order.str() + " (stabilizer-chain count)";
        } else {
            out.kind = AutKind::OrderOnly;
            out.finite = true;
            out.order = group.order;
            out.lift_certified = false;
            out.text = "finite, order " + out.order.str() +
                       " (full group; rel-boundary subgroup not enumerated at this size)";
            caveats.push_back("isometry group too large to filter for the rel-boundary condition; "
                              "reported order is for the full isometry group");
        }
    } catch (const EnumerationUnsupported&) {
        out.kind = AutKind::NotEnumerated;
        out.finite = false;
        out.text = "not enumerated (indefinite form: the isometry group is infinite in general)";
    }
    return out;
}

}  // namespace

MCGReport analyze(const ManifoldModel& input)
{
    ManifoldModel m = input;
    m.validate_and_normalize();

    MCGReport report;
    report.model_name = m.name;
    report.rank = m.form.rank();
    report.corank = corank(m.form);
    report.even = is_even(m.form);
    report.spin = m.spin;
    report.boundary_components = m.boundary_components;

    const auto [tor_free, tor_two] = torelli(m);
    report.torelli_free_rank = tor_free;
    report.torelli_two_torsion = tor_two;
    report.theta_rank = tor_two;
    report.kernel_rank = binomial2(report.corank);
    report.corank_le_one_simplification = report.corank <= 1;

    report.aut = describe_aut_boundary(m.form, report.caveats);
    if (!m.spin)
        report.caveats.push_back(
            "non-spin model: the spin-permutation fix condition is certified only through "
            "variation lifting; the permutation itself was not computed");
    if (m.spin && report.aut.lift_certified && !report.aut.all_lift)
        report.caveats.push_back(
            "spin model, yet some rel-boundary isometry admits no variation lift; "
            "no spin manifold realizes this model");

    // The mapping class group is an extension of the (lifting) rel-boundary
    // isometries by the skew-pairing kernel, times the spin displacement group.
    if (report.kernel_rank == 0 && report.aut.finite && report.aut.lift_certified) {
        report.order_known = true;
        report.order = report.aut.lifted_order;
        for (std::size_t i = 0; i < report.theta_rank; ++i)
            report.order *= 2;
    }

    std::ostringstream ext;
    ext << "0 -> Z^" << report.kernel_rank << " -> MCG -> ";
    if (m.spin) {
        ext << "(Z/2)^" << report.theta_rank << " x Aut_d";
    } else {
        ext << "Aut_d^fix";
    }
    ext << " -> 0";
    report.extension_text = ext.str();
    return report;
}

std::pair<std::size_t, std::size_t> torelli(const ManifoldModel& m)
{
    const std::size_t free_rank = binomial2(corank(m.form));
    const std::size_t two_torsion =
        m.spin && m.boundary_components >= 1 ? m.boundary_components - 1 : 0;
    return {free_rank, two_torsion};
}

ThetaRealizability theta_realizable_smoothly(const ManifoldModel& m)
{
    if (!m.spin)
        throw std::invalid_argument("theta_realizable_smoothly: model must be spin");

    ThetaRealizability out;
    const std::size_t r = m.boundary_components;
    if (r <= 1) {
        out.kind = ThetaRealizability::Kind::All;  // the displacement group is trivial
        return out;
    }
    if (!m.components) {
        out.kind = ThetaRealizability::Kind::Unknown;
        return out;
    }

    std::size_t twistable = 0;
    for (const auto& c : *m.components)
        if (c.admits_gdt == TriState::Yes)
            ++twistable;

    if (twistable >= r - 1) {
        // Relabel so the possibly non-twistable component is last; collar twists
        // on the others then realize every displacement class.
        out.kind = ThetaRealizability::Kind::All;
        return out;
    }

    out.kind = ThetaRealizability::Kind::SubgroupAtLeast;
    out.conservative = true;
    for (const auto& c : *m.components)
        if (c.admits_gdt == TriState::Yes)
            out.generator_labels.push_back(c.label);
    return out;
}

SkewForm seifert_rotation_skew_form(std::size_t g)
{
    if (g == 0)
        throw std::invalid_argument(
            "seifert_rotation_skew_form: genus must be >= 1 (use the zero skew form instead)");
    IntMatrix b(2 * g, 2 * g);
    for (std::size_t i = 0; i < g; ++i) {
        b.at(2 * i, 2 * i + 1) = 1;
        b.at(2 * i + 1, 2 * i) = -1;
    }
    return SkewForm(std::move(b));
}

std::optional<std::string> seifert_parity_note(const BoundaryComponentInfo& info)
{
    if (!info.seifert_euler)
        return std::nullopt;
    const auto [a, b] = *info.seifert_euler;
    const long long abs_a = a < 0 ? -a : a;
    if (abs_a % 2 == 1 && b % 2 == 1)
        return "fiber-rotation twist has Theta = 0 for this component";
    return std::nullopt;
}

ManifoldModel stabilize_model(const ManifoldModel& m, std::size_t g)
{
    ManifoldModel out = m;
    for (std::size_t i = 0; i < g; ++i)
        out.form = direct_sum(out.form, SymmetricForm::hyperbolic());
    return out;
}

}  // namespace mcg4
