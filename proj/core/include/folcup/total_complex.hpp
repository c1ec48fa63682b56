#ifndef FOLCUP_TOTAL_COMPLEX_HPP
#define FOLCUP_TOTAL_COMPLEX_HPP

#include <map>
#include <vector>

#include "folcup/multicomplex.hpp"

namespace folcup {

/* Coordinates for the total complex Ω^n = ⊕_{p+q=n} Ω^{p,q} with the total
 * differential d = Σ_k d_k. Within a slice the bidegree blocks are laid out
 * with p ascending, so the filtration F^p is a contiguous coordinate tail. */
class TotalComplex {
public:
    explicit TotalComplex(const MultiComplex& mc);

    const MultiComplex& mc() const { return *mc_; }
    int max_degree() const { return mc_->P() + mc_->Q(); }
    int slice_dim(int n) const;
    const std::vector<Bidegree>& slice_bidegrees(int n) const;

    int offset(int n, Bidegree a) const;
    /// First coordinate of the F^p tail in slice n (slice_dim(n) when empty).
    int filtration_offset(int n, int p) const;

    /// d : slice n → slice n+1 (a zero matrix outside 0..max_degree).
    const SparseMatrix& differential(int n) const;

    QVector embed(Bidegree a, const QVector& block) const;
    QVector component(const QVector& slice_vec, Bidegree a) const;
    bool in_filtration(int n, const QVector& v, int p) const;

    /// Slice-level product: x of total degree m times y of total degree n.
    /// Returns the slice-(m+n) vector (empty when m+n exceeds the box).
    QVector mul(const ProductStructure& ps, int m, const QVector& x, int n, const QVector& y) const;
    QVector unit_vector(const ProductStructure& ps) const;

private:
    const MultiComplex* mc_;
    std::vector<std::vector<Bidegree>> slices_;
    std::vector<std::map<Bidegree, int>> offsets_;
    std::vector<int> slice_dims_;
    std::vector<SparseMatrix> differentials_;
    SparseMatrix empty_;
};

/// dim H^n of the total complex for every n (the convergence target).
std::map<int, int> total_cohomology(const MultiComplex& mc);

/// H^n presented as ker d / im d with chosen representatives.
std::map<int, Subquotient> total_cohomology_cells(const MultiComplex& mc);

}  // namespace folcup

#endif
