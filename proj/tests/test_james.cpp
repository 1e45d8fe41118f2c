#include "mcg4/james.hpp"

#include "mcg4/snf.hpp"

#include <doctest.h>

#include <random>

using namespace mcg4;

namespace {

F2Poly x(std::size_t n, std::size_t i)
{
    return F2Poly::generator(n, i);
}

}  // namespace

TEST_CASE("squaring operation on generators and products")
{
    const std::size_t n = 2;
    const F2Poly x1 = x(n, 0), x2 = x(n, 1);

    CHECK(sq2(x1) == x1 * x1);
    CHECK(sq2(x1 * x2) == x1 * x2 * x2 + x1 * x1 * x2);
    CHECK(sq2(F2Poly::one(n)).is_zero());
    CHECK(sq2(x1 * x1).is_zero());
    CHECK(sq2(F2Poly::zero(n)).is_zero());
    CHECK_THROWS_AS(sq2(x1 + x1 * x1), std::invalid_argument);
}

TEST_CASE("twisted squaring operation")
{
    const std::size_t n = 2;
    const F2Poly x1 = x(n, 0), x2 = x(n, 1);

    CHECK(sq2_w(x1 * x2, F2Poly::zero(n)) == sq2(x1 * x2));
    CHECK(sq2_w(x1, x1).is_zero());
    CHECK(sq2_w(x1 * x1, x1) == x1 * x1 * x1);
    CHECK(sq2_w(x2, x1) == x2 * x2 + x1 * x2);
    CHECK_THROWS_AS(sq2_w(x1, x1 * x1), std::invalid_argument);
}

TEST_CASE("additivity and Cartan bilinearity")
{
    std::mt19937_64 rng(9);
    const std::size_t n = 3;
    std::uniform_int_distribution<int> pickdeg(1, 4);

    auto random_homogeneous = [&](std::size_t weight) {
        const auto basis = monomial_basis(n, 2 * weight);
        std::uniform_int_distribution<int> bit(0, 1);
        F2Poly p(n);
        for (const auto& m : basis)
            if (bit(rng))
                p = p + F2Poly::monomial(n, m);
        return p;
    };

    for (int iter = 0; iter < 60; ++iter) {
        const std::size_t dp = pickdeg(rng), dq = pickdeg(rng);
        const F2Poly p = random_homogeneous(dp);
        const F2Poly q = random_homogeneous(dq);
        CHECK(sq2(p * q) == sq2(p) * q + p * sq2(q));
        const F2Poly r = random_homogeneous(dp);
        CHECK(sq2(p + r) == sq2(p) + sq2(r));
        const F2Poly w = x(n, 0);
        CHECK(sq2_w(p + r, w) == sq2_w(p, w) + sq2_w(r, w));
    }
}

TEST_CASE("monomial bases")
{
    const auto deg4 = monomial_basis(2, 4);
    REQUIRE(deg4.size() == 3);
    CHECK(deg4[0] == Monomial{2, 0});
    CHECK(deg4[1] == Monomial{1, 1});
    CHECK(deg4[2] == Monomial{0, 2});
    CHECK(monomial_basis(3, 5).empty());
    CHECK(monomial_basis(1, 6) == std::vector<Monomial>{Monomial{3}});
    CHECK(monomial_basis(4, 0).size() == 1);
}

TEST_CASE("d2 matrices")
{
    SUBCASE("n=1 spin: degree-4 differential has rank 1, degree-6 rank 0")
    {
        const auto d = d2_matrices(1, F2Poly::zero(1));
        CHECK(d.s1.at(4).rows() == 1);
        CHECK(d.s1.at(4).cols() == 1);
        CHECK(f2_rank(d.s1.at(4)) == 1);
        CHECK(f2_rank(d.s0.at(6)) == 0);  // Sq^2(x^2) = 0
    }
    SUBCASE("odd degrees carry zero maps on zero spaces")
    {
        const auto d = d2_matrices(3, F2Poly::zero(3));
        CHECK(d.s1.at(3).rows() == 0);
        CHECK(d.s1.at(3).cols() == 0);
        CHECK(d.s1.at(5).cols() == 0);
    }
    SUBCASE("n=1 non-spin: degree-6 differential is onto the x^2 dual")
    {
        const auto d = d2_matrices(1, F2Poly::generator(1, 0));
        CHECK(f2_rank(d.s1.at(4)) == 0);  // sq2_w(x) = 0
        CHECK(f2_rank(d.s0.at(6)) == 1);  // sq2_w(x^2) = x^3
    }
    SUBCASE("d2 o d2 = 0 for n up to 6, both twists")
    {
        for (std::size_t n = 1; n <= 6; ++n)
            for (bool spin : {true, false}) {
                const F2Poly w = spin ? F2Poly::zero(n) : F2Poly::generator(n, 0);
                const auto d = d2_matrices(n, w);
                CHECK((d.s1.at(4) * d.s0.at(6)).is_zero());
            }
    }
}

TEST_CASE("E3 page computation")
{
    SUBCASE("spin kills the 2,2 corner; non-spin leaves the w-dual line")
    {
        for (std::size_t n = 1; n <= 5; ++n) {
            const auto spin = e3_report(n, true);
            CHECK(spin.e3_22_dim == 0);
            CHECK(spin.e3_41_dim == 0);
            CHECK(spin.omega5_zero);

            const auto nonspin = e3_report(n, false);
            CHECK(nonspin.e3_22_dim == 1);
            CHECK(nonspin.e3_22_generated_by_w_dual);
            CHECK(nonspin.e3_41_dim == 0);
            CHECK(nonspin.omega5_zero);
        }
    }
    SUBCASE("spin degree-4 lattice: diagonal duals enter at index two")
    {
        for (std::size_t n = 1; n <= 5; ++n) {
            const auto r = e3_report(n, true);
            CHECK(r.e3_40.free_rank == n + n * (n - 1) / 2);
            CHECK(r.e3_40.index_two_generators == n);
            CHECK(r.e3_40.unit_generators == n * (n - 1) / 2);
            REQUIRE(r.e3_40.index_two_duals.size() == n);
            for (std::size_t i = 0; i < n; ++i) {
                Monomial diag(n, 0);
                diag[i] = 2;
                CHECK(r.e3_40.index_two_duals[i] == diag);
            }
        }
    }
    SUBCASE("non-spin degree-4 lattice: one fewer index-two divisor")
    {
        for (std::size_t n = 1; n <= 5; ++n) {
            const auto r = e3_report(n, false);
            CHECK(r.e3_40.free_rank == n + n * (n - 1) / 2);
            CHECK(r.e3_40.index_two_generators == n - 1);
        }
    }
    SUBCASE("the quotient by the kernel lattice matches the mod-2 rank via SNF")
    {
        // Oracle: build the kernel lattice of d2^{4,0} from 2Z^m plus lifted
        // F2-kernel vectors, and read its elementary divisors off the SNF.
        for (std::size_t n = 1; n <= 4; ++n)
            for (bool spin : {true, false}) {
                const F2Poly w = spin ? F2Poly::zero(n) : F2Poly::generator(n, 0);
                const F2Matrix d = sq2_w_matrix(n, w, 2).transposed();
                const std::size_t m = d.cols();
                const F2Matrix ker = f2_kernel_basis(d);
                IntMatrix gens(m, m + ker.cols());
                for (std::size_t i = 0; i < m; ++i)
                    gens.at(i, i) = 2;
                for (std::size_t j = 0; j < ker.cols(); ++j)
                    for (std::size_t i = 0; i < m; ++i)
                        if (ker.get(i, j))
                            gens.at(i, m + j) = 1;
                const auto snf = smith_normal_form(gens);
                std::size_t twos = 0, ones = 0;
                for (const auto& dd : snf.diagonal) {
                    if (dd == 2)
                        ++twos;
                    if (dd == 1)
                        ++ones;
                }
                const auto rep = e3_report(n, spin);
                CHECK(ones + twos == m);  // full-rank sublattice
                CHECK(twos == rep.e3_40.index_two_generators);
            }
    }
    SUBCASE("n must be positive")
    {
        CHECK_THROWS_AS(e3_report(0, true), std::invalid_argument);
    }
}

TEST_CASE("polynomial printing")
{
    const F2Poly p = x(2, 0) * x(2, 0) * x(2, 1);
    CHECK(p.to_string() == "x1^2*x2");
    CHECK(F2Poly::zero(2).to_string() == "0");
    CHECK(F2Poly::one(2).to_string() == "1");
}
