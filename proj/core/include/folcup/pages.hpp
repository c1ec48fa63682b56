#ifndef FOLCUP_PAGES_HPP
#define FOLCUP_PAGES_HPP

#include <map>

#include "folcup/total_complex.hpp"

namespace folcup {

/* One term E_r of the spectral sequence. Each cell is a subquotient of the
 * total-degree slice: Z_r^{p,q} = {x ∈ F^p Ω^{p+q} : dx ∈ F^{p+r}} over
 * Z_{r-1}^{p+1,q-1} + d Z_{r-1}^{p-r+1,q+r-2}, so class representatives are
 * honest elements of the total complex in F^p. d is induced by the total
 * differential and lands in bidegree (p+r, q-r+1). */
struct Page {
    int r = 0;
    std::map<Bidegree, Subquotient> cells;
    std::map<Bidegree, SparseMatrix> d;

    int dim(Bidegree a) const;
    std::map<Bidegree, int> dims() const;  // nonzero cells only
    const SparseMatrix& d_at(Bidegree a) const;
};

class SpectralSequence {
public:
    explicit SpectralSequence(const MultiComplex& mc);

    const MultiComplex& complex() const { return *mc_; }
    const TotalComplex& total() const { return tc_; }

    const Page& page(int r);

    /// Stabilized page (= page P+2); throws if the pages have not collapsed
    /// by then, which would be an engine bug on a bounded box.
    const Page& infinity();

    /// Smallest r with constant dims and vanishing d from r on.
    int stabilization_r();

private:
    const Subspace& z_space(Bidegree a, int r);
    Page build_page(int r);

    const MultiComplex* mc_;
    TotalComplex tc_;
    std::map<int, Page> pages_;
    std::map<std::pair<Bidegree, int>, Subspace> z_cache_;
};

Page compute_page(const MultiComplex& mc, int r);
Page infinity_page(const MultiComplex& mc, int* stabilized_at = nullptr);

/* A class on a page, carried by an explicit total-complex representative in
 * F^p; coords are taken in the cell's representative basis. */
struct PageClass {
    int r = 0;
    Bidegree pq;
    QVector coords;
    QVector representative;

    bool is_zero() const { return folcup::is_zero(coords); }
};

PageClass make_page_class(const Page& page, Bidegree a, QVector coords);
PageClass project_to_page(const Page& page, Bidegree a, const QVector& total_vector);

/* Product of page classes through their total-complex representatives.
 * Classes must live on the same page; overflowing the box gives the zero
 * class at the (out-of-box) target bidegree. */
PageClass page_product(const TotalComplex& tc, const ProductStructure& ps, const Page& page,
                       const PageClass& a, const PageClass& b);

/// Slice-level matrix of a bidegree-preserving block map (e.g. a restriction).
SparseMatrix slice_matrix(const TotalComplex& src, const TotalComplex& dst, const BlockMap& f,
                          int n);

/* Image of the basic classes E_2^{p,0}, p > 0, inside H^p(total). Every
 * class gets a d-closed representative when one exists in its coset;
 * classes without one are flagged and contribute zero. */
struct BasicImage {
    std::map<int, Subspace> image;              // subspace of H^p coordinates
    std::map<int, std::vector<QVector>> reps;   // cocycle representatives, parallel to basis
    std::vector<std::pair<Bidegree, int>> flagged;
};

BasicImage basic_image(const MultiComplex& mc, const ProductStructure& ps);

}  // namespace folcup

#endif
