#ifndef FOLCUP_BOUNDS_HPP
#define FOLCUP_BOUNDS_HPP

#include <functional>

#include "folcup/pages.hpp"

namespace folcup {

/* One homogeneous element of a graded algebra slice. Elements produced by
 * the engine are always supported in a single cell (a bidegree for page
 * slices, the whole degree for cohomology slices), so products stay
 * projectable; coords live in the per-grade coordinate space. */
struct SliceElement {
    int grade = 0;
    Bidegree cell{0, 0};
    QVector coords;
    QVector representative;
    std::string label;

    bool is_zero() const { return folcup::is_zero(coords); }
};

/* A positive-degree part of a graded algebra with an evaluator for products
 * of homogeneous elements. The positive part is closed under mult: products
 * either stay in the slice or vanish (box overflow / degree overflow). */
struct GradedAlgebraSlice {
    std::string name;
    std::map<int, int> grade_dims;                                            // zero dims omitted
    std::vector<SliceElement> basis;                                          // unit coords
    std::function<SliceElement(const SliceElement&, const SliceElement&)> mult;

    int dim(int grade) const;
    int total_dim() const;
};

/* Exact cup length with an audit trail: a witness product for positive
 * values, and always the span dimensions A^(k) down to the first zero. */
struct CupLengthCertificate {
    int value = 0;
    std::string slice_name;
    std::vector<SliceElement> witness_factors;
    SliceElement witness_product;
    std::vector<std::pair<int, int>> span_dims;  // (k, dim A^(k)), last entry zero
    std::string convention =
        "l.c.p. counts factors: max k with a_1...a_k != 0; k = 0 means the slice vanishes "
        "(contractible spaces have category 0)";
};

/* Span growth: A^(1) = the slice, A^(k+1) = span of (basis of A^(k)) * slice
 * basis. By multilinearity a nonzero k-fold product of arbitrary elements
 * exists iff one of basis elements does. */
CupLengthCertificate cup_length(const GradedAlgebraSlice& slice);

/// Recomputes the witness product from the stored representatives.
bool verify_certificate(const GradedAlgebraSlice& slice, const CupLengthCertificate& cert);

// Slice builders.
GradedAlgebraSlice basic_image_slice(const MultiComplex& mc, const ProductStructure& ps);
GradedAlgebraSlice derham_slice(const MultiComplex& mc, const ProductStructure& ps, int d);
GradedAlgebraSlice transverse_e2_slice(const MultiComplex& mc, const ProductStructure& ps);
GradedAlgebraSlice tangential_e1_slice(const MultiComplex& mc, const ProductStructure& ps);

// The four lower bounds.
CupLengthCertificate bound_basic(const MultiComplex& mc, const ProductStructure& ps);
CupLengthCertificate bound_derham(const MultiComplex& mc, const ProductStructure& ps, int d = -1);
CupLengthCertificate bound_transverse_e2(const MultiComplex& mc, const ProductStructure& ps);
CupLengthCertificate bound_tangential_e1(const MultiComplex& mc, const ProductStructure& ps);

struct BoundEntry {
    CupLengthCertificate certificate;
    std::string applies_to;
};

struct BoundReport {
    BoundEntry basic, derham, e2, tangential;
    std::string convention;
};

BoundReport bound_report(const MultiComplex& mc, const ProductStructure& ps);

}  // namespace folcup

#endif
