#ifndef FOLCUP_LINALG_HPP
#define FOLCUP_LINALG_HPP

#include <optional>
#include <vector>

#include "folcup/sparse_matrix.hpp"

namespace folcup {

/* Pivot selection for the exact Gaussian elimination. SmallestBits picks the
 * entry of least bit-size (tie-break: lowest row, then col) to limit
 * coefficient growth and keep runs deterministic; FirstNonzero exists so
 * tests can cross-check ranks under a different pivot order. */
enum class PivotRule { SmallestBits, FirstNonzero };

using SparseVec = std::map<int, Rational>;

struct EchelonForm {
    int rows = 0;
    std::vector<SparseVec> cols;     // reduced column echelon, pivots normalized to 1
    std::vector<int> pivot_rows;     // parallel to cols
    std::vector<SparseVec> combos;   // echelon col as combination of original columns
    std::vector<SparseVec> kernel;   // combinations that reduced to zero
    int rank() const { return static_cast<int>(cols.size()); }
};

EchelonForm echelon_form(const SparseMatrix& m, PivotRule rule = PivotRule::SmallestBits);

/// Reusable solver for A x = b (any solution); nullopt when inconsistent.
class LinearSolver {
public:
    explicit LinearSolver(const SparseMatrix& a, PivotRule rule = PivotRule::SmallestBits);
    std::optional<QVector> solve(const QVector& b) const;
    int rank() const { return ech_.rank(); }

private:
    int cols_;
    EchelonForm ech_;
};

/* A linear subspace of Q^n held by its canonical basis: reduced column
 * echelon form with greedily minimal pivot rows, unique per subspace. */
class Subspace {
public:
    Subspace() : ambient_(0) {}

    static Subspace zero(int ambient);
    static Subspace full(int ambient);
    static Subspace span(int ambient, const std::vector<QVector>& generators);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<QVector>& basis() const { return basis_; }
    const std::vector<int>& pivot_rows() const { return pivot_rows_; }

    bool contains(const QVector& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in the canonical basis, if v lies in the subspace.
    std::optional<QVector> coordinates(const QVector& v) const;

    Subspace sum(const Subspace& other) const;
    SparseMatrix basis_matrix() const;

    bool operator==(const Subspace& other) const
    {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }

private:
    int ambient_;
    std::vector<QVector> basis_;
    std::vector<int> pivot_rows_;
};

struct RankKernelImage {
    int rank;
    Subspace kernel;  // subspace of the column space Q^cols
    Subspace image;   // subspace of the row space Q^rows
};

RankKernelImage rank_kernel_image(const SparseMatrix& m, PivotRule rule = PivotRule::SmallestBits);

/* Presentation of Z/B for B ⊆ Z ⊆ Q^n: coset representatives extending a
 * basis of B to one of Z (first-extendable rule over the canonical Z basis)
 * together with the coordinate projection, defined exactly on Z. */
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(Subspace z, Subspace b);  // throws unless B ⊆ Z

    int ambient_dim() const { return z_.ambient_dim(); }
    int dim() const { return static_cast<int>(reps_.size()); }
    const Subspace& numerator() const { return z_; }
    const Subspace& denominator() const { return b_; }
    const std::vector<QVector>& reps() const { return reps_; }

    bool in_numerator(const QVector& v) const { return z_.contains(v); }

    /// Coordinates of [v] in the representative basis; throws when v ∉ Z.
    QVector project(const QVector& v) const;

    /// Σ coords_i · rep_i (an honest element of Z).
    QVector rep_combination(const QVector& coords) const;

private:
    Subspace z_, b_;
    std::vector<QVector> reps_;
    std::optional<LinearSolver> proj_;  // solver over [reps | B basis]
};

/* Matrix of the map induced by f on representative bases. Verifies
 * f(src.Z) ⊆ dst.Z and f(src.B) ⊆ dst.B and throws a named violation
 * otherwise (the mark of a non-filtered map). */
SparseMatrix induced_map(const SparseMatrix& f, const Subquotient& src, const Subquotient& dst);

}  // namespace folcup

#endif
