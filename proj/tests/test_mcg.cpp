#include "mcg4/mcg.hpp"

#include "mcg4/catalog.hpp"

#include <doctest.h>

#include <random>

using namespace mcg4;

namespace {

ManifoldModel model(const char* name, SymmetricForm form, bool spin, std::size_t r)
{
    ManifoldModel m;
    m.name = name;
    m.form = std::move(form);
    m.spin = spin;
    m.boundary_components = r;
    return m;
}

}  // namespace

TEST_CASE("model validation")
{
    SUBCASE("closed manifolds need nondegenerate forms")
    {
        auto m = model("bad", SymmetricForm::zero(1), false, 0);
        CHECK_THROWS_AS(m.validate_and_normalize(), std::invalid_argument);
    }
    SUBCASE("closed spin manifolds need even forms")
    {
        auto m = model("bad", SymmetricForm(IntMatrix::from_rows({{1}})), true, 0);
        CHECK_THROWS_AS(m.validate_and_normalize(), std::invalid_argument);
    }
    SUBCASE("component count must match")
    {
        auto m = model("bad", SymmetricForm::empty(), true, 2);
        m.components = {{BoundaryComponentInfo{}}};
        CHECK_THROWS_AS(m.validate_and_normalize(), std::invalid_argument);
    }
    SUBCASE("genus-one components are upgraded to twistable")
    {
        auto m = model("ok", SymmetricForm::empty(), true, 1);
        BoundaryComponentInfo c;
        c.label = "lens";
        c.heegaard_genus = 1;
        m.components = {{c}};
        m.validate_and_normalize();
        CHECK((*m.components)[0].admits_gdt == TriState::Yes);

        (*m.components)[0].admits_gdt = TriState::No;
        CHECK_THROWS_AS(m.validate_and_normalize(), std::invalid_argument);
    }
    SUBCASE("Seifert Euler data is sign-normalized and reduced")
    {
        auto m = model("ok", SymmetricForm::empty(), true, 1);
        BoundaryComponentInfo c;
        c.seifert_euler = {{2, -4}};
        m.components = {{c}};
        m.validate_and_normalize();
        CHECK((*m.components)[0].seifert_euler == std::pair<long long, long long>{-1, 2});
    }
}

TEST_CASE("analyze on standard model manifolds")
{
    SUBCASE("the product of the 3-sphere with an interval has mapping class group of order 2")
    {
        const auto r = analyze(model("S3xI", SymmetricForm::empty(), true, 2));
        CHECK(r.order_known);
        CHECK(r.order == 2);
        CHECK(r.theta_rank == 1);
        CHECK(r.torelli_free_rank == 0);
        CHECK(r.torelli_two_torsion == 1);
    }
    SUBCASE("the 4-disk is rigid")
    {
        const auto r = analyze(model("D4", SymmetricForm::empty(), true, 1));
        CHECK(r.order_known);
        CHECK(r.order == 1);
    }
    SUBCASE("the complex projective plane minus a disk has order 2 via the sign isometry")
    {
        const auto r =
            analyze(model("CP2", SymmetricForm(IntMatrix::from_rows({{1}})), false, 1));
        CHECK(r.order_known);
        CHECK(r.order == 2);
        CHECK(r.aut.all_lift);
        CHECK(r.theta_rank == 0);
        // the fix-condition caveat is always surfaced on non-spin reports
        bool has_caveat = false;
        for (const auto& c : r.caveats)
            has_caveat = has_caveat || c.find("fix condition") != std::string::npos;
        CHECK(has_caveat);
    }
    SUBCASE("a rank-2 zero form has Torelli group Z")
    {
        const auto r = analyze(model("two-handles", SymmetricForm::zero(2), true, 1));
        CHECK(r.torelli_free_rank == 1);
        CHECK(r.theta_rank == 0);
        CHECK(r.kernel_rank == 1);
        CHECK_FALSE(r.order_known);  // the group is Z
        CHECK(r.aut.order == 1);
    }
    SUBCASE("mixed degenerate forms report an infinite unipotent part")
    {
        const auto r = analyze(
            model("mixed", SymmetricForm(IntMatrix::from_rows({{0, 0}, {0, 1}})), false, 1));
        CHECK(r.aut.kind == AutKind::InfiniteUnipotent);
        CHECK_FALSE(r.order_known);
    }
}

TEST_CASE("torelli invariants")
{
    CHECK(torelli(model("S3xI", SymmetricForm::empty(), true, 2)) ==
          std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(torelli(model("z3", SymmetricForm::zero(3), false, 1)) ==
          std::pair<std::size_t, std::size_t>{3, 0});
    CHECK(torelli(model("u", SymmetricForm(IntMatrix::from_rows({{1}})), true, 1)) ==
          std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(torelli(model("closed", SymmetricForm::hyperbolic(), true, 0)) ==
          std::pair<std::size_t, std::size_t>{0, 0});
}

TEST_CASE("smooth realizability of the spin displacement group")
{
    auto lens = [](const char* label) {
        BoundaryComponentInfo c;
        c.label = label;
        c.heegaard_genus = 1;
        c.admits_gdt = TriState::Yes;
        return c;
    };
    auto hyperbolic3 = [](const char* label) {
        BoundaryComponentInfo c;
        c.label = label;
        c.heegaard_genus = 5;
        c.admits_gdt = TriState::No;
        return c;
    };

    SUBCASE("two twistable components realize everything")
    {
        auto m = model("m", SymmetricForm::empty(), true, 2);
        m.components = {{lens("L1"), lens("L2")}};
        CHECK(theta_realizable_smoothly(m).kind == ThetaRealizability::Kind::All);
    }
    SUBCASE("one twistable of two still realizes everything after relabeling")
    {
        auto m = model("m", SymmetricForm::empty(), true, 2);
        m.components = {{hyperbolic3("Y1"), lens("L")}};
        CHECK(theta_realizable_smoothly(m).kind == ThetaRealizability::Kind::All);
    }
    SUBCASE("no twistable components yields the empty lower bound")
    {
        auto m = model("m", SymmetricForm::empty(), true, 2);
        m.components = {{hyperbolic3("Y1"), hyperbolic3("Y2")}};
        const auto r = theta_realizable_smoothly(m);
        CHECK(r.kind == ThetaRealizability::Kind::SubgroupAtLeast);
        CHECK(r.generator_labels.empty());
        CHECK(r.conservative);
    }
    SUBCASE("partial data gives a flagged subgroup")
    {
        auto m = model("m", SymmetricForm::empty(), true, 3);
        m.components = {{lens("L"), hyperbolic3("Y1"), hyperbolic3("Y2")}};
        const auto r = theta_realizable_smoothly(m);
        CHECK(r.kind == ThetaRealizability::Kind::SubgroupAtLeast);
        CHECK(r.generator_labels == std::vector<std::string>{"L"});
    }
    SUBCASE("one boundary component is vacuous")
    {
        auto m = model("m", SymmetricForm::empty(), true, 1);
        CHECK(theta_realizable_smoothly(m).kind == ThetaRealizability::Kind::All);
    }
    SUBCASE("missing data is unknown; non-spin is an error")
    {
        auto m = model("m", SymmetricForm::empty(), true, 2);
        CHECK(theta_realizable_smoothly(m).kind == ThetaRealizability::Kind::Unknown);
        m.spin = false;
        CHECK_THROWS_AS(theta_realizable_smoothly(m), std::invalid_argument);
    }
}

TEST_CASE("Seifert fiber-rotation pairing")
{
    CHECK(seifert_rotation_skew_form(1).matrix() == IntMatrix::from_rows({{0, 1}, {-1, 0}}));
    const auto g2 = seifert_rotation_skew_form(2);
    CHECK(g2.matrix() == IntMatrix::from_rows({{0, 1, 0, 0},
                                               {-1, 0, 0, 0},
                                               {0, 0, 0, 1},
                                               {0, 0, -1, 0}}));
    CHECK_THROWS_AS(seifert_rotation_skew_form(0), std::invalid_argument);
}

TEST_CASE("Seifert parity note")
{
    BoundaryComponentInfo c;
    CHECK_FALSE(seifert_parity_note(c).has_value());
    c.seifert_euler = {{1, 3}};
    CHECK(seifert_parity_note(c).has_value());
    c.seifert_euler = {{1, 2}};
    CHECK_FALSE(seifert_parity_note(c).has_value());
    c.seifert_euler = {{-3, 5}};
    CHECK(seifert_parity_note(c).has_value());
}

TEST_CASE("stabilization")
{
    const auto m = model("CP2", SymmetricForm(IntMatrix::from_rows({{1}})), false, 1);
    const auto s1 = stabilize_model(m, 1);
    CHECK(s1.form.rank() == 3);
    CHECK(s1.form.gram().at(1, 2) == 1);
    const auto s2 = stabilize_model(model("empty", SymmetricForm::empty(), true, 1), 2);
    CHECK(s2.form == direct_sum(SymmetricForm::hyperbolic(), SymmetricForm::hyperbolic()));

    SUBCASE("torelli and theta ranks are preserved for catalog models")
    {
        for (const auto& entry : builtin_catalog())
            for (std::size_t g = 0; g <= 5; ++g) {
                const auto st = stabilize_model(entry.model, g);
                CHECK(torelli(st) == torelli(entry.model));
            }
    }
}

TEST_CASE("torelli ranks follow the closed-form laws on random forms")
{
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<std::size_t> dim(0, 6);
    std::uniform_int_distribution<std::size_t> rr(0, 4);
    std::uniform_int_distribution<int> flag(0, 1);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = dim(rng);
        std::uniform_int_distribution<std::size_t> cr(0, n);
        const std::size_t target_corank = cr(rng);
        IntMatrix d(n, n);
        for (std::size_t i = 0; i < n - target_corank; ++i) {
            int v = coeff(rng);
            d.at(i, i) = v == 0 ? 1 : v;
        }
        IntMatrix u = IntMatrix::identity(n);
        for (int k = 0; k < 10 && n >= 2; ++k) {
            std::uniform_int_distribution<std::size_t> pick(0, n - 1);
            std::size_t i = pick(rng), j = pick(rng);
            if (i == j)
                continue;
            const Int c = coeff(rng);
            for (std::size_t col = 0; col < n; ++col)
                u.at(i, col) += c * u.at(j, col);
        }
        const SymmetricForm f(u.transposed() * d * u);
        REQUIRE(corank(f) == target_corank);

        const bool spin = flag(rng) == 1;
        const std::size_t r = rr(rng);
        auto m = model("rand", f, spin, r);
        const auto [free_rank, torsion] = torelli(m);
        CHECK(free_rank == binomial2(target_corank));
        CHECK(torsion == (spin && r >= 1 ? r - 1 : 0));
    }
}

TEST_CASE("catalog entries analyze cleanly")
{
    for (const auto& entry : builtin_catalog()) {
        const auto r = analyze(entry.model);
        CHECK(r.model_name == entry.name);
    }
    CHECK(find_catalog_entry("S3xI") != nullptr);
    CHECK(find_catalog_entry("nosuch") == nullptr);
}
