#ifndef FOLCUP_MULTICOMPLEX_HPP
#define FOLCUP_MULTICOMPLEX_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folcup/bidegree.hpp"
#include "folcup/linalg.hpp"
#include "folcup/sparse_matrix.hpp"

namespace folcup {

/* Finite bigraded model of a foliated manifold: spaces Ω^{p,q} inside the box
 * 0 ≤ p ≤ P, 0 ≤ q ≤ Q, with differential components d_k : Ω^{p,q} →
 * Ω^{p+k,q+1-k} subject to the graded identity Σ_{i+j=n} d_i d_j = 0
 * (checked by validate(), not by construction). Blocks whose target falls
 * outside the box cannot be stored; they are identically zero. */
class MultiComplex {
public:
    MultiComplex() : P_(0), Q_(0) {}
    MultiComplex(int P, int Q);

    int P() const { return P_; }
    int Q() const { return Q_; }
    bool in_box(Bidegree a) const { return a.p >= 0 && a.p <= P_ && a.q >= 0 && a.q <= Q_; }

    void set_dim(Bidegree a, int n);
    int dim(Bidegree a) const;
    const std::map<Bidegree, int>& dims() const { return dims_; }
    int total_dim() const;

    void set_block(int k, Bidegree a, SparseMatrix m);
    const SparseMatrix* block(int k, Bidegree a) const;
    SparseMatrix block_or_zero(int k, Bidegree a) const;
    int max_k() const;
    const std::map<int, std::map<Bidegree, SparseMatrix>>& diff() const { return diff_; }

    void set_labels(Bidegree a, std::vector<std::string> names);
    const std::vector<std::string>* labels(Bidegree a) const;
    std::string label(Bidegree a, int i) const;  // falls back to "(p,q)#i"

private:
    int P_, Q_;
    std::map<Bidegree, int> dims_;
    std::map<int, std::map<Bidegree, SparseMatrix>> diff_;
    std::map<Bidegree, std::vector<std::string>> labels_;
};

/* Bilinear product on a multicomplex, stored as basis-pair → value vector.
 * Associativity, the two-sided unit and the total-degree Leibniz rule are
 * validate() obligations; products landing outside the box vanish. */
class ProductStructure {
public:
    using PairKey = std::pair<Bidegree, Bidegree>;
    using Table = std::map<std::pair<int, int>, QVector>;

    ProductStructure() = default;
    explicit ProductStructure(QVector unit) : unit_(std::move(unit)) {}

    const QVector& unit() const { return unit_; }
    void set_unit(QVector u) { unit_ = std::move(u); }

    void set_pair(const MultiComplex& mc, Bidegree a, int i, Bidegree b, int j, QVector value);
    const QVector* pair(Bidegree a, int i, Bidegree b, int j) const;
    const std::map<PairKey, Table>& blocks() const { return blocks_; }

    /// x at bidegree a times y at bidegree b; zero vector when a+b is in the
    /// box, empty vector when it is not.
    QVector mul(const MultiComplex& mc, Bidegree a, const QVector& x, Bidegree b, const QVector& y) const;

private:
    QVector unit_;
    std::map<PairKey, Table> blocks_;
};

/* Bidegree-preserving linear map between two multicomplexes, one sparse
 * block per bidegree (absent = zero). Used for restriction morphisms and
 * for the partition operators of a cover. */
struct BlockMap {
    std::map<Bidegree, SparseMatrix> blocks;

    SparseMatrix block_or_zero(const MultiComplex& src, const MultiComplex& dst, Bidegree a) const;
    QVector apply(const MultiComplex& src, const MultiComplex& dst, Bidegree a, const QVector& x) const;

    static BlockMap identity(const MultiComplex& mc);
    static BlockMap compose(const MultiComplex& a, const MultiComplex& b, const MultiComplex& c,
                            const BlockMap& second, const BlockMap& first);  // second ∘ first : a → c
    static BlockMap scaled_identity(const MultiComplex& mc, const Rational& s);
};

struct Violation {
    std::string check;
    Bidegree at{-1, -1};
    int index = -1;
    std::string detail;

    std::string to_string() const;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string check, Bidegree at, int index, std::string detail);
    void merge(const ValidationReport& other);
    std::string to_string() const;
};

/// Checks the graded d² identity and, when a product is given, associativity,
/// the unit and the Leibniz rule on all basis tuples.
ValidationReport validate(const MultiComplex& mc, const ProductStructure* ps = nullptr);

/// Restriction morphisms must commute with every d_k, preserve products and
/// send unit to unit.
ValidationReport validate_restriction(const MultiComplex& src, const MultiComplex& dst,
                                      const BlockMap& rho, const ProductStructure* ps_src = nullptr,
                                      const ProductStructure* ps_dst = nullptr);

struct AlgebraModel {
    MultiComplex mc;
    ProductStructure ps;
};

/* Tensor product of bigraded algebras: bidegrees add, d(x⊗y) = dx⊗y +
 * (-1)^{|x|} x⊗dy and (x⊗y)(x'⊗y') = (-1)^{|y||x'|} xx'⊗yy' with Koszul
 * signs by total degree. The box of the result is the sum of the boxes, so
 * nothing is truncated. */
AlgebraModel tensor_product(const AlgebraModel& a, const AlgebraModel& b);
MultiComplex direct_sum(const MultiComplex& a, const MultiComplex& b);

}  // namespace folcup

#endif
