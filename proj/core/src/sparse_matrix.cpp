#include "folcup/sparse_matrix.hpp"

namespace folcup {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols)
{
    if (rows < 0 || cols < 0)
        throw Error("SparseMatrix: negative dimension");
}

SparseMatrix SparseMatrix::identity(int n)
{
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, Rational(1));
    return m;
}

void SparseMatrix::check_index(int r, int c) const
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw Error("SparseMatrix: index out of range");
}

Rational SparseMatrix::at(int r, int c) const
{
    check_index(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
}

void SparseMatrix::set(int r, int c, Rational v)
{
    check_index(r, c);
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = std::move(v);
}

void SparseMatrix::add_to(int r, int c, const Rational& v)
{
    check_index(r, c);
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        if (v != 0)
            entries_.emplace(Key{r, c}, v);
        return;
    }
    it->second += v;
    if (it->second == 0)
        entries_.erase(it);
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw Error("SparseMatrix: incompatible product dimensions");
    SparseMatrix out(rows_, rhs.cols_);
    // (r,k) * (k,c): iterate lhs entries, join against rhs rows.
    for (const auto& [key, a] : entries_) {
        auto [r, k] = key;
        auto lo = rhs.entries_.lower_bound({k, 0});
        auto hi = rhs.entries_.lower_bound({k + 1, 0});
        for (auto it = lo; it != hi; ++it)
            out.add_to(r, it->first.second, a * it->second);
    }
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error("SparseMatrix: incompatible sum dimensions");
    SparseMatrix out = *this;
    for (const auto& [key, v] : rhs.entries_)
        out.add_to(key.first, key.second, v);
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& rhs) const
{
    return *this + rhs.scaled(Rational(-1));
}

SparseMatrix SparseMatrix::scaled(const Rational& a) const
{
    SparseMatrix out(rows_, cols_);
    if (a == 0)
        return out;
    for (const auto& [key, v] : entries_)
        out.entries_.emplace(key, a * v);
    return out;
}

bool SparseMatrix::operator==(const SparseMatrix& rhs) const
{
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

QVector SparseMatrix::apply(const QVector& x) const
{
    if (static_cast<int>(x.size()) != cols_)
        throw Error("SparseMatrix::apply: size mismatch");
    QVector y = zero_vector(rows_);
    for (const auto& [key, v] : entries_)
        y[key.first] += v * x[key.second];
    return y;
}

std::vector<QVector> SparseMatrix::dense_columns() const
{
    std::vector<QVector> cols(static_cast<std::size_t>(cols_), zero_vector(rows_));
    for (const auto& [key, v] : entries_)
        cols[key.second][key.first] = v;
    return cols;
}

SparseMatrix SparseMatrix::from_columns(int rows, const std::vector<QVector>& cols)
{
    SparseMatrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
        const QVector& c = cols[static_cast<std::size_t>(j)];
        if (static_cast<int>(c.size()) != rows)
            throw Error("SparseMatrix::from_columns: column length mismatch");
        for (int i = 0; i < rows; ++i)
            if (c[static_cast<std::size_t>(i)] != 0)
                m.entries_.emplace(Key{i, j}, c[static_cast<std::size_t>(i)]);
    }
    return m;
}

}  // namespace folcup
