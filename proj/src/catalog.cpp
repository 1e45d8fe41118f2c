#include "mcg4/catalog.hpp"

namespace mcg4 {

namespace {

BoundaryComponentInfo sphere_component(std::string label)
{
    BoundaryComponentInfo c;
    c.label = std::move(label);
    c.heegaard_genus = 0;
    c.admits_gdt = TriState::Yes;
    return c;
}

std::vector<CatalogEntry> build()
{
    std::vector<CatalogEntry> out;

    {
        // S^3 x [0,1]: empty form, spin, two spherical boundary components.
        ManifoldModel m;
        m.name = "S3xI";
        m.form = SymmetricForm::empty();
        m.spin = true;
        m.boundary_components = 2;
        m.components = {{sphere_component("S3-bottom"), sphere_component("S3-top")}};
        out.push_back({m.name, m, {"order: 2", "theta rank: 1"}});
    }
    {
        ManifoldModel m;
        m.name = "D4";
        m.form = SymmetricForm::empty();
        m.spin = true;
        m.boundary_components = 1;
        m.components = {{sphere_component("S3")}};
        out.push_back({m.name, m, {"trivial group", "order: 1"}});
    }
    {
        // CP^2 minus an open disk: form <1>, not spin, boundary S^3.
        ManifoldModel m;
        m.name = "CP2-minus-disk";
        m.form = SymmetricForm(IntMatrix::from_rows({{1}}));
        m.spin = false;
        m.boundary_components = 1;
        m.components = {{sphere_component("S3")}};
        out.push_back({m.name, m, {"order: 2"}});
    }
    {
        // The E8 plumbing: boundary the Poincare sphere (Heegaard genus 2).
        ManifoldModel m;
        m.name = "E8-minus-disk";
        m.form = SymmetricForm::e8();
        m.spin = true;
        m.boundary_components = 1;
        BoundaryComponentInfo c;
        c.label = "Poincare-sphere";
        c.heegaard_genus = 2;
        c.admits_gdt = TriState::Unknown;
        m.components = {{c}};
        out.push_back({m.name, m, {"order: 696729600"}});
    }
    {
        // S^2 x D^2: rank-1 zero form, spin, boundary S^2 x S^1 (Heegaard genus 1).
        ManifoldModel m;
        m.name = "S2xD2";
        m.form = SymmetricForm::zero(1);
        m.spin = true;
        m.boundary_components = 1;
        BoundaryComponentInfo c;
        c.label = "S2xS1";
        c.heegaard_genus = 1;
        c.admits_gdt = TriState::Yes;
        m.components = {{c}};
        out.push_back({m.name, m, {"order: 1"}});
    }
    {
        // S^2 x S^2 minus an open disk: hyperbolic form, spin, boundary S^3.
        ManifoldModel m;
        m.name = "H";
        m.form = SymmetricForm::hyperbolic();
        m.spin = true;
        m.boundary_components = 1;
        m.components = {{sphere_component("S3")}};
        out.push_back({m.name, m, {"order: 4"}});
    }
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog()
{
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name)
{
    for (const CatalogEntry& e : builtin_catalog())
        if (e.name == name)
            return &e;
    return nullptr;
}

}  // namespace mcg4
