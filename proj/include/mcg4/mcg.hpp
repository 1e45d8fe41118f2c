#pragma once

#include "mcg4/forms.hpp"
#include "mcg4/variations.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mcg4 {

struct BoundaryComponentInfo {
    std::string label;
    std::optional<long long> heegaard_genus;
    TriState admits_gdt = TriState::Unknown;
    std::optional<long long> seifert_base_genus;
    std::optional<std::pair<long long, long long>> seifert_euler;  // a/b, b > 0, reduced

    bool operator==(const BoundaryComponentInfo&) const = default;
};

// Homological model of a compact, simply connected, oriented 4-manifold with
// (possibly empty) boundary: the intersection form, the spin flag, and the
// boundary component count with optional per-component data.
struct ManifoldModel {
    std::string name;
    SymmetricForm form;
    bool spin = false;
    std::size_t boundary_components = 0;
    std::optional<std::vector<BoundaryComponentInfo>> components;

    // Normalizes Seifert data, applies the genus-one twistability rule, and
    // rejects inconsistent closed models.  Throws std::invalid_argument.
    void validate_and_normalize();

    bool operator==(const ManifoldModel&) const = default;
};

enum class AutKind { Trivial, Enumerated, OrderOnly, InfiniteUnipotent, NotEnumerated };

struct AutBoundaryDescription {
    AutKind kind = AutKind::Trivial;
    bool finite = false;
    Int order;          // |Aut_d|, meaningful when finite
    Int lifted_order;   // # of rel-boundary isometries that lift to variations
    bool lift_certified = false;
    bool all_lift = false;
    std::string text;

    bool operator==(const AutBoundaryDescription&) const = default;
};

struct MCGReport {
    std::string model_name;
    std::size_t rank = 0;
    std::size_t corank = 0;
    bool even = false;
    bool spin = false;
    std::size_t boundary_components = 0;

    std::size_t theta_rank = 0;          // r - 1 when spin with boundary, else 0
    std::size_t torelli_free_rank = 0;   // C(corank, 2)
    std::size_t torelli_two_torsion = 0; // theta_rank

    AutBoundaryDescription aut;
    std::size_t kernel_rank = 0;  // rank of the skew-pairing kernel of the extension

    bool order_known = false;
    Int order;
    bool corank_le_one_simplification = false;

    std::string extension_text;  // the three-term sequence of the classification
    std::vector<std::string> caveats;

    bool operator==(const MCGReport&) const = default;
};

MCGReport analyze(const ManifoldModel& m);

// (free rank, 2-torsion rank) of the Torelli group: (C(corank, 2), r - 1 if spin).
std::pair<std::size_t, std::size_t> torelli(const ManifoldModel& m);

struct ThetaRealizability {
    enum class Kind { All, SubgroupAtLeast, Unknown } kind = Kind::Unknown;
    std::vector<std::string> generator_labels;  // components whose dual arcs are realized
    bool conservative = false;

    bool operator==(const ThetaRealizability&) const = default;
};

// Smooth realizability of the spin displacement group via collar twists on
// generalized-Dehn-twistable boundary components.  Requires a spin model.
ThetaRealizability theta_realizable_smoothly(const ManifoldModel& m);

// Standard symplectic 2g x 2g pairing realized by fiber rotation over a Seifert
// base of genus g >= 1.
SkewForm seifert_rotation_skew_form(std::size_t g);

// Informational note when the Seifert Euler number a/b has a, b both odd: the
// fiber-rotation twist then has trivial spin displacement.  Never changes the
// twistability verdict.
std::optional<std::string> seifert_parity_note(const BoundaryComponentInfo& info);

// Replace the form by form (+) hyperbolic^g; spin flag and boundary unchanged.
ManifoldModel stabilize_model(const ManifoldModel& m, std::size_t g);

std::size_t binomial2(std::size_t n);  // C(n, 2)

}  // namespace mcg4
