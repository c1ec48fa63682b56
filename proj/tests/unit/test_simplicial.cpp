#include <doctest.h>

#include "folcup/fixtures.hpp"
#include "folcup/total_complex.hpp"

using namespace folcup;

TEST_CASE("circle complex enumeration and coboundary")
{
    SimplicialComplex c = SimplicialComplex::circle(3);
    CHECK(c.count(0) == 3);
    CHECK(c.count(1) == 3);
    CHECK(c.dim() == 1);
    SparseMatrix d = c.coboundary(0);
    // rank 2, kernel = constants
    auto rki = rank_kernel_image(d);
    CHECK(rki.rank == 2);
    CHECK(rki.kernel.dim() == 1);
    CHECK(rki.kernel.contains(QVector{rational(1), rational(1), rational(1)}));
    CHECK(SimplicialComplex::circle(5).count(1) == 5);
}

TEST_CASE("circle needs at least 3 vertices")
{
    CHECK_THROWS_AS(SimplicialComplex::circle(2), Error);
}

TEST_CASE("alexander-whitney algebra validates on circle and torus models")
{
    auto circle = cochain_algebra(SimplicialComplex::circle(3), Placement::Transverse);
    CHECK(validate(circle.mc, &circle.ps).ok());

    auto fiber_circle = cochain_algebra(SimplicialComplex::circle(4), Placement::Tangential);
    CHECK(validate(fiber_circle.mc, &fiber_circle.ps).ok());
    CHECK(fiber_circle.mc.dim({0, 1}) == 4);
}

TEST_CASE("cup product of the two torus 1-classes is a generator of H^2")
{
    auto t2 = fixtures::point_foliation_torus(2);
    TotalComplex tc(t2.mc);
    auto cells = total_cohomology_cells(t2.mc);
    REQUIRE(cells.at(1).dim() == 2);
    REQUIRE(cells.at(2).dim() == 1);
    const QVector a = cells.at(1).reps()[0];
    const QVector b = cells.at(1).reps()[1];
    QVector ab = tc.mul(t2.ps, 1, a, 1, b);
    QVector ba = tc.mul(t2.ps, 1, b, 1, a);
    // a∪b and b∪a generate H² and are cohomologous up to sign
    QVector cls = cells.at(2).project(ab);
    CHECK_FALSE(is_zero(cls));
    QVector cls_ba = cells.at(2).project(ba);
    CHECK(cls_ba == scaled(cls, rational(-1)));
}

TEST_CASE("cochain restriction is an algebra map")
{
    SimplicialComplex circle = SimplicialComplex::circle(5);
    SimplicialComplex arc = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {2, 3}});
    auto big = cochain_algebra(circle, Placement::Tangential);
    auto small = cochain_algebra(arc, Placement::Tangential);
    BlockMap rho = cochain_restriction(circle, arc, Placement::Tangential);
    CHECK(validate_restriction(big.mc, small.mc, rho, &big.ps, &small.ps).ok());
}
