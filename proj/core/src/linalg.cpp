#include "folcup/linalg.hpp"

#include <algorithm>
#include <limits>

namespace folcup {

namespace {

void sparse_axpy(SparseVec& y, const Rational& a, const SparseVec& x)
{
    if (a == 0)
        return;
    for (const auto& [i, v] : x) {
        auto it = y.find(i);
        if (it == y.end()) {
            Rational w = a * v;
            if (w != 0)
                y.emplace(i, std::move(w));
        } else {
            it->second += a * v;
            if (it->second == 0)
                y.erase(it);
        }
    }
}

void sparse_scale(SparseVec& y, const Rational& a)
{
    for (auto& [i, v] : y)
        v *= a;
}

QVector densify(const SparseVec& v, int n)
{
    QVector out = zero_vector(n);
    for (const auto& [i, x] : v)
        out[static_cast<std::size_t>(i)] = x;
    return out;
}

}  // namespace

EchelonForm echelon_form(const SparseMatrix& m, PivotRule rule)
{
    const int ncols = m.cols();
    std::vector<SparseVec> work(static_cast<std::size_t>(ncols));
    std::vector<SparseVec> combo(static_cast<std::size_t>(ncols));
    for (const auto& [key, v] : m.entries())
        work[static_cast<std::size_t>(key.second)].emplace(key.first, v);
    for (int j = 0; j < ncols; ++j)
        combo[static_cast<std::size_t>(j)].emplace(j, Rational(1));

    std::vector<bool> finished(static_cast<std::size_t>(ncols), false);
    EchelonForm out;
    out.rows = m.rows();

    for (;;) {
        int best_row = -1, best_col = -1;
        std::size_t best_bits = std::numeric_limits<std::size_t>::max();
        for (int j = 0; j < ncols; ++j) {
            if (finished[static_cast<std::size_t>(j)])
                continue;
            for (const auto& [i, v] : work[static_cast<std::size_t>(j)]) {
                if (rule == PivotRule::FirstNonzero) {
                    best_row = i;
                    best_col = j;
                    break;
                }
                std::size_t bits = coefficient_bits(v);
                if (bits < best_bits || (bits == best_bits && (i < best_row || (i == best_row && j < best_col)))) {
                    best_bits = bits;
                    best_row = i;
                    best_col = j;
                }
            }
            if (rule == PivotRule::FirstNonzero && best_col >= 0)
                break;
        }
        if (best_col < 0)
            break;

        SparseVec& piv = work[static_cast<std::size_t>(best_col)];
        SparseVec& piv_combo = combo[static_cast<std::size_t>(best_col)];
        Rational inv = 1 / piv.at(best_row);
        sparse_scale(piv, inv);
        sparse_scale(piv_combo, inv);

        for (int j = 0; j < ncols; ++j) {
            if (j == best_col)
                continue;
            SparseVec& col = work[static_cast<std::size_t>(j)];
            auto it = col.find(best_row);
            if (it == col.end())
                continue;
            Rational factor = -it->second;
            sparse_axpy(col, factor, piv);
            sparse_axpy(combo[static_cast<std::size_t>(j)], factor, piv_combo);
        }
        finished[static_cast<std::size_t>(best_col)] = true;
        out.cols.push_back(piv);
        out.pivot_rows.push_back(best_row);
        out.combos.push_back(piv_combo);
    }

    for (int j = 0; j < ncols; ++j)
        if (!finished[static_cast<std::size_t>(j)])
            out.kernel.push_back(combo[static_cast<std::size_t>(j)]);

    // Sort echelon columns by pivot row so downstream reductions are stable.
    std::vector<std::size_t> order(out.cols.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return out.pivot_rows[a] < out.pivot_rows[b]; });
    EchelonForm sorted;
    sorted.rows = out.rows;
    for (std::size_t i : order) {
        sorted.cols.push_back(std::move(out.cols[i]));
        sorted.pivot_rows.push_back(out.pivot_rows[i]);
        sorted.combos.push_back(std::move(out.combos[i]));
    }
    sorted.kernel = std::move(out.kernel);
    return sorted;
}

LinearSolver::LinearSolver(const SparseMatrix& a, PivotRule rule)
    : cols_(a.cols()), ech_(echelon_form(a, rule))
{
}

std::optional<QVector> LinearSolver::solve(const QVector& b) const
{
    if (static_cast<int>(b.size()) != ech_.rows)
        throw Error("LinearSolver::solve: size mismatch");
    SparseVec residual;
    for (int i = 0; i < ech_.rows; ++i)
        if (b[static_cast<std::size_t>(i)] != 0)
            residual.emplace(i, b[static_cast<std::size_t>(i)]);

    QVector x = zero_vector(cols_);
    for (std::size_t j = 0; j < ech_.cols.size(); ++j) {
        auto it = residual.find(ech_.pivot_rows[j]);
        if (it == residual.end())
            continue;
        Rational c = it->second;  // pivot entries are 1
        sparse_axpy(residual, -c, ech_.cols[j]);
        for (const auto& [k, v] : ech_.combos[j])
            x[static_cast<std::size_t>(k)] += c * v;
    }
    if (!residual.empty())
        return std::nullopt;
    return x;
}

namespace {

/* Canonical reduced column echelon basis with greedily minimal pivot rows;
 * input columns may be dependent. */
std::pair<std::vector<QVector>, std::vector<int>> canonical_basis(int ambient,
                                                                  const std::vector<QVector>& gens)
{
    std::vector<QVector> pool;
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != ambient)
            throw Error("Subspace: generator length mismatch");
        if (!is_zero(g))
            pool.push_back(g);
    }
    std::vector<QVector> basis;
    std::vector<int> pivots;
    for (;;) {
        int best_col = -1, best_row = ambient;
        for (std::size_t j = 0; j < pool.size(); ++j) {
            for (int i = 0; i < ambient; ++i) {
                if (pool[j][static_cast<std::size_t>(i)] != 0) {
                    if (i < best_row) {
                        best_row = i;
                        best_col = static_cast<int>(j);
                    }
                    break;
                }
            }
        }
        if (best_col < 0)
            break;
        QVector piv = pool[static_cast<std::size_t>(best_col)];
        Rational inv = 1 / piv[static_cast<std::size_t>(best_row)];
        for (auto& v : piv)
            v *= inv;
        for (auto& col : pool) {
            const Rational c = col[static_cast<std::size_t>(best_row)];
            if (c != 0)
                axpy(col, -c, piv);
        }
        for (auto& col : basis) {
            const Rational c = col[static_cast<std::size_t>(best_row)];
            if (c != 0)
                axpy(col, -c, piv);
        }
        std::erase_if(pool, [](const QVector& c) { return is_zero(c); });
        basis.push_back(std::move(piv));
        pivots.push_back(best_row);
    }
    return {std::move(basis), std::move(pivots)};
}

}  // namespace

Subspace Subspace::zero(int ambient)
{
    Subspace s;
    s.ambient_ = ambient;
    return s;
}

Subspace Subspace::full(int ambient)
{
    std::vector<QVector> gens;
    for (int i = 0; i < ambient; ++i) {
        QVector e = zero_vector(ambient);
        e[static_cast<std::size_t>(i)] = 1;
        gens.push_back(std::move(e));
    }
    return span(ambient, gens);
}

Subspace Subspace::span(int ambient, const std::vector<QVector>& generators)
{
    Subspace s;
    s.ambient_ = ambient;
    auto [basis, pivots] = canonical_basis(ambient, generators);
    s.basis_ = std::move(basis);
    s.pivot_rows_ = std::move(pivots);
    return s;
}

std::optional<QVector> Subspace::coordinates(const QVector& v) const
{
    if (static_cast<int>(v.size()) != ambient_)
        throw Error("Subspace::coordinates: length mismatch");
    QVector coords = zero_vector(dim());
    QVector residual = v;
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        const Rational c = residual[static_cast<std::size_t>(pivot_rows_[j])];
        if (c != 0) {
            coords[j] = c;
            axpy(residual, -c, basis_[j]);
        }
    }
    if (!is_zero(residual))
        return std::nullopt;
    return coords;
}

bool Subspace::contains(const QVector& v) const
{
    return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const
{
    if (ambient_ != other.ambient_)
        return false;
    for (const auto& b : other.basis_)
        if (!contains(b))
            return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const
{
    if (ambient_ != other.ambient_)
        throw Error("Subspace::sum: ambient mismatch");
    std::vector<QVector> gens = basis_;
    gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, gens);
}

SparseMatrix Subspace::basis_matrix() const
{
    return SparseMatrix::from_columns(ambient_, basis_);
}

RankKernelImage rank_kernel_image(const SparseMatrix& m, PivotRule rule)
{
    EchelonForm ech = echelon_form(m, rule);
    RankKernelImage out;
    out.rank = ech.rank();
    std::vector<QVector> ker;
    for (const auto& k : ech.kernel)
        ker.push_back(densify(k, m.cols()));
    out.kernel = Subspace::span(m.cols(), ker);
    std::vector<QVector> im;
    for (const auto& c : ech.cols)
        im.push_back(densify(c, m.rows()));
    out.image = Subspace::span(m.rows(), im);
    return out;
}

Subquotient::Subquotient(Subspace z, Subspace b) : z_(std::move(z)), b_(std::move(b))
{
    if (z_.ambient_dim() != b_.ambient_dim())
        throw Error("subquotient: ambient mismatch");
    if (!z_.contains(b_))
        throw Error("subquotient: denominator is not contained in numerator");

    // First-extendable rule: walk the canonical Z basis, keep the columns
    // that grow the span of B.
    Subspace grown = b_;
    for (const auto& zcol : z_.basis()) {
        if (!grown.contains(zcol)) {
            reps_.push_back(zcol);
            std::vector<QVector> gens = {zcol};
            grown = grown.sum(Subspace::span(z_.ambient_dim(), gens));
        }
    }

    std::vector<QVector> cols = reps_;
    cols.insert(cols.end(), b_.basis().begin(), b_.basis().end());
    proj_.emplace(SparseMatrix::from_columns(z_.ambient_dim(), cols));
}

QVector Subquotient::project(const QVector& v) const
{
    if (!proj_) {  // default-constructed: the zero quotient of the zero space
        if (!v.empty())
            throw Error("subquotient: vector outside the numerator subspace");
        return {};
    }
    auto sol = proj_->solve(v);
    if (!sol)
        throw Error("subquotient: vector outside the numerator subspace");
    QVector coords(sol->begin(), sol->begin() + dim());
    return coords;
}

QVector Subquotient::rep_combination(const QVector& coords) const
{
    if (static_cast<int>(coords.size()) != dim())
        throw Error("subquotient: coordinate length mismatch");
    QVector v = zero_vector(ambient_dim());
    for (std::size_t i = 0; i < reps_.size(); ++i)
        axpy(v, coords[i], reps_[i]);
    return v;
}

SparseMatrix induced_map(const SparseMatrix& f, const Subquotient& src, const Subquotient& dst)
{
    if (f.cols() != src.ambient_dim() || f.rows() != dst.ambient_dim())
        throw Error("induced_map: shape mismatch");
    for (const auto& z : src.numerator().basis())
        if (!dst.numerator().contains(f.apply(z)))
            throw Error("induced_map: f(Z) escapes the target numerator (non-filtered map)");
    for (const auto& b : src.denominator().basis())
        if (!dst.denominator().contains(f.apply(b)))
            throw Error("induced_map: f(B) escapes the target denominator (non-filtered map)");

    SparseMatrix m(dst.dim(), src.dim());
    for (int j = 0; j < src.dim(); ++j) {
        QVector w = dst.project(f.apply(src.reps()[static_cast<std::size_t>(j)]));
        for (int i = 0; i < dst.dim(); ++i)
            if (w[static_cast<std::size_t>(i)] != 0)
                m.set(i, j, w[static_cast<std::size_t>(i)]);
    }
    return m;
}

}  // namespace folcup
