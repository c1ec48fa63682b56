#include "folcup/total_complex.hpp"

namespace folcup {

TotalComplex::TotalComplex(const MultiComplex& mc) : mc_(&mc)
{
    const int top = mc.P() + mc.Q();
    slices_.resize(static_cast<std::size_t>(top) + 1);
    offsets_.resize(static_cast<std::size_t>(top) + 1);
    slice_dims_.assign(static_cast<std::size_t>(top) + 1, 0);

    for (int n = 0; n <= top; ++n) {
        int off = 0;
        for (int p = std::max(0, n - mc.Q()); p <= std::min(n, mc.P()); ++p) {
            Bidegree a{p, n - p};
            slices_[static_cast<std::size_t>(n)].push_back(a);
            offsets_[static_cast<std::size_t>(n)].emplace(a, off);
            off += mc.dim(a);
        }
        slice_dims_[static_cast<std::size_t>(n)] = off;
    }

    differentials_.reserve(static_cast<std::size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) {
        SparseMatrix d(n + 1 <= top ? slice_dims_[static_cast<std::size_t>(n + 1)] : 0,
                       slice_dims_[static_cast<std::size_t>(n)]);
        for (const auto& [k, blocks] : mc.diff()) {
            for (const auto& [a, m] : blocks) {
                if (a.total() != n)
                    continue;
                Bidegree b = diff_target(a, k);
                int row0 = offset(n + 1, b);
                int col0 = offset(n, a);
                for (const auto& [key, v] : m.entries())
                    d.set(row0 + key.first, col0 + key.second, v);
            }
        }
        differentials_.push_back(std::move(d));
    }
}

int TotalComplex::slice_dim(int n) const
{
    if (n < 0 || n > max_degree())
        return 0;
    return slice_dims_[static_cast<std::size_t>(n)];
}

const std::vector<Bidegree>& TotalComplex::slice_bidegrees(int n) const
{
    static const std::vector<Bidegree> empty;
    if (n < 0 || n > max_degree())
        return empty;
    return slices_[static_cast<std::size_t>(n)];
}

int TotalComplex::offset(int n, Bidegree a) const
{
    if (n < 0 || n > max_degree())
        throw Error("TotalComplex::offset: degree out of range");
    auto it = offsets_[static_cast<std::size_t>(n)].find(a);
    if (it == offsets_[static_cast<std::size_t>(n)].end())
        throw Error("TotalComplex::offset: bidegree not in slice");
    return it->second;
}

int TotalComplex::filtration_offset(int n, int p) const
{
    if (n < 0 || n > max_degree())
        return 0;
    int off = 0;
    for (const Bidegree& a : slices_[static_cast<std::size_t>(n)]) {
        if (a.p >= p)
            return off;
        off += mc_->dim(a);
    }
    return slice_dims_[static_cast<std::size_t>(n)];
}

const SparseMatrix& TotalComplex::differential(int n) const
{
    if (n < 0 || n > max_degree())
        return empty_;
    return differentials_[static_cast<std::size_t>(n)];
}

QVector TotalComplex::embed(Bidegree a, const QVector& block) const
{
    const int n = a.total();
    if (static_cast<int>(block.size()) != mc_->dim(a))
        throw Error("TotalComplex::embed: block length mismatch");
    QVector out = zero_vector(slice_dim(n));
    const int off = offset(n, a);
    for (std::size_t i = 0; i < block.size(); ++i)
        out[static_cast<std::size_t>(off) + i] = block[i];
    return out;
}

QVector TotalComplex::component(const QVector& slice_vec, Bidegree a) const
{
    const int n = a.total();
    if (static_cast<int>(slice_vec.size()) != slice_dim(n))
        throw Error("TotalComplex::component: slice length mismatch");
    const int off = offset(n, a);
    QVector out(slice_vec.begin() + off, slice_vec.begin() + off + mc_->dim(a));
    return out;
}

bool TotalComplex::in_filtration(int n, const QVector& v, int p) const
{
    const int cut = filtration_offset(n, p);
    for (int i = 0; i < cut; ++i)
        if (v[static_cast<std::size_t>(i)] != 0)
            return false;
    return true;
}

QVector TotalComplex::mul(const ProductStructure& ps, int m, const QVector& x, int n,
                          const QVector& y) const
{
    if (m + n > max_degree())
        return {};
    QVector out = zero_vector(slice_dim(m + n));
    for (const Bidegree& a : slice_bidegrees(m)) {
        if (mc_->dim(a) == 0)
            continue;
        QVector xa = component(x, a);
        if (is_zero(xa))
            continue;
        for (const Bidegree& b : slice_bidegrees(n)) {
            if (mc_->dim(b) == 0 || !mc_->in_box(a + b))
                continue;
            QVector yb = component(y, b);
            if (is_zero(yb))
                continue;
            QVector prod = ps.mul(*mc_, a, xa, b, yb);
            if (prod.empty() || is_zero(prod))
                continue;
            const int off = offset(m + n, a + b);
            for (std::size_t i = 0; i < prod.size(); ++i)
                out[static_cast<std::size_t>(off) + i] += prod[i];
        }
    }
    return out;
}

QVector TotalComplex::unit_vector(const ProductStructure& ps) const
{
    return embed(Bidegree{0, 0}, ps.unit());
}

std::map<int, int> total_cohomology(const MultiComplex& mc)
{
    TotalComplex tc(mc);
    std::map<int, int> h;
    std::map<int, int> ranks;
    for (int n = 0; n <= tc.max_degree(); ++n)
        ranks[n] = echelon_form(tc.differential(n)).rank();
    for (int n = 0; n <= tc.max_degree(); ++n) {
        int hn = tc.slice_dim(n) - ranks[n] - (n > 0 ? ranks[n - 1] : 0);
        h[n] = hn;
    }
    return h;
}

std::map<int, Subquotient> total_cohomology_cells(const MultiComplex& mc)
{
    TotalComplex tc(mc);
    std::map<int, Subquotient> cells;
    std::map<int, RankKernelImage> rki;
    for (int n = 0; n <= tc.max_degree(); ++n)
        rki.emplace(n, rank_kernel_image(tc.differential(n)));
    for (int n = 0; n <= tc.max_degree(); ++n) {
        Subspace z = rki.at(n).kernel;
        Subspace b = n > 0 ? rki.at(n - 1).image : Subspace::zero(tc.slice_dim(0));
        cells.emplace(n, Subquotient(std::move(z), std::move(b)));
    }
    return cells;
}

}  // namespace folcup
