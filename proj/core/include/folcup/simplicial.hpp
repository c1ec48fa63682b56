#ifndef FOLCUP_SIMPLICIAL_HPP
#define FOLCUP_SIMPLICIAL_HPP

#include <string>
#include <vector>

#include "folcup/multicomplex.hpp"

namespace folcup {

/* Finite abstract simplicial complex on integer vertices, closed under
 * faces, each simplex stored with ascending vertices. The vertex order is
 * global, which is what the Alexander-Whitney product needs. */
class SimplicialComplex {
public:
    using Simplex = std::vector<int>;

    static SimplicialComplex from_facets(const std::vector<Simplex>& facets);
    /// Simplicial circle on n ≥ 3 vertices 0..n-1.
    static SimplicialComplex circle(int n);

    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    int count(int d) const;
    const std::vector<Simplex>& simplices(int d) const;
    int index_of(int d, const Simplex& s) const;  // -1 when absent
    bool contains(const Simplex& s) const;
    std::string label(int d, int i) const;

    /// Coboundary C^d → C^{d+1}, (δf)(σ) = Σ_i (-1)^i f(∂_i σ).
    SparseMatrix coboundary(int d) const;

private:
    std::vector<std::vector<Simplex>> by_dim_;
};

/// Which axis of the bidegree a simplicial factor occupies.
enum class Placement { Transverse, Tangential };

/* Simplicial cochains with the Alexander-Whitney cup product
 * (f∪g)(σ) = f(front) g(back): associative, unital, Leibniz, not
 * graded-commutative. Degree n sits at (n,0) or (0,n) per the placement. */
AlgebraModel cochain_algebra(const SimplicialComplex& k, Placement axis);

/// Restriction C(K) → C(L) for a subcomplex L ⊆ K, in placed coordinates.
BlockMap cochain_restriction(const SimplicialComplex& k, const SimplicialComplex& l,
                             Placement axis);

}  // namespace folcup

#endif
