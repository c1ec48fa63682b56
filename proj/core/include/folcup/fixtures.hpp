#ifndef FOLCUP_FIXTURES_HPP
#define FOLCUP_FIXTURES_HPP

#include <cstdint>

#include "folcup/cover.hpp"
#include "folcup/simplicial.hpp"

namespace folcup::fixtures {

/// Simplicial cochain algebra of K placed at tangential degree zero.
AlgebraModel point_foliation(const SimplicialComplex& k);

/// n-torus as a point foliation: n-fold tensor power of the circle algebra.
AlgebraModel point_foliation_torus(int rank, int subdivisions = 3);

/// Base contributes the transverse degree, fiber the tangential one.
AlgebraModel product_bundle(const SimplicialComplex& base, const SimplicialComplex& fiber);

AlgebraModel torus_bundle(int base_subdiv = 3, int fiber_subdiv = 3);

/* Minimal transgression example: generators 1,(0,0); y,(0,1); x,(2,0);
 * xy,(2,1) with d(y) = x in the k = 2 component, x·y = y·x = xy, and every
 * other product falling outside the box. */
AlgebraModel hopf_model();

/* The torus bundle covered by two saturated annuli over two closed arcs of
 * the base circle; the arcs meet in two vertices, and the partition is
 * vertex-supported (values of φ_U at the two cut vertices; φ_V = 1-φ_U). */
CoverData torus_cover(int base_subdiv = 3, int fiber_subdiv = 3,
                      const Rational& phi_u_first = Rational(1, 2),
                      const Rational& phi_u_second = Rational(1, 2));

/// U = V = UV = M with identity restrictions and e_U = e_V = ½·id.
CoverData trivial_cover(const AlgebraModel& m);

/* U = V = UV = M over a torus bundle, with e_U/e_V literal Alexander-Whitney
 * multiplication by the leafwise-constant partition functions φ_V/φ_U
 * (values per base vertex). cup_dphi_v is the operator ω ↦ δφ_V ∪ ω, the
 * explicit piecewise form of the connecting morphism on this cover. */
struct MultiplicationCover {
    CoverData cover;
    std::map<Bidegree, SparseMatrix> cup_dphi_v;
};
MultiplicationCover multiplication_cover(int base_subdiv, int fiber_subdiv, const QVector& phi_u);

/* Seeded random valid multicomplex: disjoint differential pairs placed in
 * the box, then a change of basis by random unimodular block matrices. No
 * product structure. */
MultiComplex random_multicomplex(std::uint64_t seed, int max_p = 3, int max_q = 3,
                                 int max_dim_per_bidegree = 6);

}  // namespace folcup::fixtures

#endif
