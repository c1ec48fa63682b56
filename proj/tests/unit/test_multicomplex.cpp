#include <doctest.h>

#include "folcup/fixtures.hpp"
#include "folcup/total_complex.hpp"

using namespace folcup;

namespace {

MultiComplex zero_diff_complex()
{
    MultiComplex mc(1, 1);
    mc.set_dim({0, 0}, 2);
    mc.set_dim({1, 1}, 3);
    return mc;
}

int euler_from_dims(const MultiComplex& mc)
{
    int chi = 0;
    for (const auto& [a, d] : mc.dims())
        chi += (a.total() % 2 == 0) ? d : -d;
    return chi;
}

int euler_from_cohomology(const MultiComplex& mc)
{
    int chi = 0;
    for (const auto& [n, d] : total_cohomology(mc))
        chi += (n % 2 == 0) ? d : -d;
    return chi;
}

}  // namespace

TEST_CASE("validate: zero differential, trivial product")
{
    MultiComplex mc = zero_diff_complex();
    CHECK(validate(mc).ok());
}

TEST_CASE("validate: hopf fixture is valid")
{
    auto m = fixtures::hopf_model();
    auto report = validate(m.mc, &m.ps);
    CHECK(report.ok());
}

TEST_CASE("validate: d_1 squared violation names the bidegree")
{
    MultiComplex mc(2, 0);
    mc.set_dim({0, 0}, 1);
    mc.set_dim({1, 0}, 1);
    mc.set_dim({2, 0}, 1);
    SparseMatrix one(1, 1);
    one.set(0, 0, rational(1));
    mc.set_block(1, {0, 0}, one);
    mc.set_block(1, {1, 0}, one);
    auto report = validate(mc);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations[0].check == "d_squared");
    CHECK(report.violations[0].at == Bidegree{0, 0});
    CHECK(report.violations[0].index == 0);
}

TEST_CASE("blocks mapping outside the box are rejected at construction")
{
    MultiComplex mc(1, 1);
    mc.set_dim({1, 1}, 1);
    SparseMatrix one(1, 1);
    one.set(0, 0, rational(1));
    CHECK_THROWS_AS(mc.set_block(1, {1, 1}, one), Error);
}

TEST_CASE("total cohomology of the point-foliation circle")
{
    auto m = fixtures::point_foliation(SimplicialComplex::circle(3));
    REQUIRE(validate(m.mc, &m.ps).ok());
    auto h = total_cohomology(m.mc);
    CHECK(h.at(0) == 1);
    CHECK(h.at(1) == 1);
}

TEST_CASE("total cohomology of the hopf fixture")
{
    auto m = fixtures::hopf_model();
    auto h = total_cohomology(m.mc);
    CHECK(h.at(0) == 1);
    CHECK(h.at(1) == 0);
    CHECK(h.at(2) == 0);
    CHECK(h.at(3) == 1);
}

TEST_CASE("total cohomology is additive on direct sums")
{
    auto a = fixtures::point_foliation(SimplicialComplex::circle(3)).mc;
    auto b = fixtures::hopf_model().mc;
    MultiComplex sum = direct_sum(a, b);
    CHECK(validate(sum).ok());
    auto ha = total_cohomology(a);
    auto hb = total_cohomology(b);
    auto hs = total_cohomology(sum);
    for (const auto& [n, d] : hs) {
        int expect = (ha.count(n) ? ha.at(n) : 0) + (hb.count(n) ? hb.at(n) : 0);
        CHECK(d == expect);
    }
}

TEST_CASE("euler characteristic matches alternating cohomology sum")
{
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
        MultiComplex mc = fixtures::random_multicomplex(seed);
        REQUIRE(validate(mc).ok());
        CHECK(euler_from_dims(mc) == euler_from_cohomology(mc));
    }
}

TEST_CASE("tensor with the point model is the identity")
{
    auto circle = fixtures::point_foliation(SimplicialComplex::circle(3));
    AlgebraModel point;
    point.mc = MultiComplex(0, 0);
    point.mc.set_dim({0, 0}, 1);
    point.ps.set_unit({rational(1)});
    point.ps.set_pair(point.mc, {0, 0}, 0, {0, 0}, 0, {rational(1)});
    auto prod = tensor_product(circle, point);
    CHECK(prod.mc.dims() == circle.mc.dims());
    CHECK(validate(prod.mc, &prod.ps).ok());
    auto h = total_cohomology(prod.mc);
    CHECK(h.at(0) == 1);
    CHECK(h.at(1) == 1);
}

TEST_CASE("torus bundle dims are products of cochain counts")
{
    auto tb = fixtures::torus_bundle(3, 3);
    CHECK(tb.mc.dim({0, 0}) == 9);
    CHECK(tb.mc.dim({1, 0}) == 9);
    CHECK(tb.mc.dim({0, 1}) == 9);
    CHECK(tb.mc.dim({1, 1}) == 9);
    CHECK(validate(tb.mc, &tb.ps).ok());
}

TEST_CASE("kuenneth on fixtures: torus bundle and 2-torus point foliation")
{
    auto tb = fixtures::torus_bundle(3, 3);
    auto h = total_cohomology(tb.mc);
    CHECK(h.at(0) == 1);
    CHECK(h.at(1) == 2);
    CHECK(h.at(2) == 1);

    auto t2 = fixtures::point_foliation_torus(2);
    CHECK(validate(t2.mc, &t2.ps).ok());
    auto h2 = total_cohomology(t2.mc);
    CHECK(h2.at(0) == 1);
    CHECK(h2.at(1) == 2);
    CHECK(h2.at(2) == 1);
}

TEST_CASE("restriction morphisms compose and identity qualifies")
{
    SimplicialComplex circle = SimplicialComplex::circle(4);
    SimplicialComplex arc = SimplicialComplex::from_facets({{0, 1}, {1, 2}});
    SimplicialComplex vertex = SimplicialComplex::from_facets({{1}});
    auto big = cochain_algebra(circle, Placement::Transverse);
    auto mid = cochain_algebra(arc, Placement::Transverse);
    auto small = cochain_algebra(vertex, Placement::Transverse);

    BlockMap id = BlockMap::identity(big.mc);
    CHECK(validate_restriction(big.mc, big.mc, id, &big.ps, &big.ps).ok());

    BlockMap r1 = cochain_restriction(circle, arc, Placement::Transverse);
    BlockMap r2 = cochain_restriction(arc, vertex, Placement::Transverse);
    CHECK(validate_restriction(big.mc, mid.mc, r1, &big.ps, &mid.ps).ok());
    CHECK(validate_restriction(mid.mc, small.mc, r2, &mid.ps, &small.ps).ok());
    BlockMap composed = BlockMap::compose(big.mc, mid.mc, small.mc, r2, r1);
    CHECK(validate_restriction(big.mc, small.mc, composed, &big.ps, &small.ps).ok());
}
