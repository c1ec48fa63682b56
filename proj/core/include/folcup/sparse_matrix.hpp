#ifndef FOLCUP_SPARSE_MATRIX_HPP
#define FOLCUP_SPARSE_MATRIX_HPP

#include <map>
#include <utility>

#include "folcup/rational.hpp"

namespace folcup {

/* Sparse rational matrix. Entries hold only nonzero values; set() erases on
 * zero, so the no-stored-zeros invariant is maintained by construction. */
class SparseMatrix {
public:
    using Key = std::pair<int, int>;  // (row, col)

    SparseMatrix() : rows_(0), cols_(0) {}
    SparseMatrix(int rows, int cols);

    static SparseMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool is_zero() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }

    Rational at(int r, int c) const;
    void set(int r, int c, Rational v);
    void add_to(int r, int c, const Rational& v);

    const std::map<Key, Rational>& entries() const { return entries_; }

    SparseMatrix operator*(const SparseMatrix& rhs) const;
    SparseMatrix operator+(const SparseMatrix& rhs) const;
    SparseMatrix operator-(const SparseMatrix& rhs) const;
    SparseMatrix scaled(const Rational& a) const;
    bool operator==(const SparseMatrix& rhs) const;

    QVector apply(const QVector& x) const;

    /// Columns as dense vectors (convenience for elimination / span building).
    std::vector<QVector> dense_columns() const;

    static SparseMatrix from_columns(int rows, const std::vector<QVector>& cols);

private:
    void check_index(int r, int c) const;

    int rows_, cols_;
    std::map<Key, Rational> entries_;
};

}  // namespace folcup

#endif
