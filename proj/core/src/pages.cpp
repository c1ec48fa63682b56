#include "folcup/pages.hpp"

namespace folcup {

int Page::dim(Bidegree a) const
{
    auto it = cells.find(a);
    return it == cells.end() ? 0 : it->second.dim();
}

std::map<Bidegree, int> Page::dims() const
{
    std::map<Bidegree, int> out;
    for (const auto& [a, cell] : cells)
        if (cell.dim() > 0)
            out.emplace(a, cell.dim());
    return out;
}

const SparseMatrix& Page::d_at(Bidegree a) const
{
    static const SparseMatrix empty;
    auto it = d.find(a);
    return it == d.end() ? empty : it->second;
}

SpectralSequence::SpectralSequence(const MultiComplex& mc) : mc_(&mc), tc_(mc) {}

const Subspace& SpectralSequence::z_space(Bidegree a, int r)
{
    auto key = std::make_pair(a, r);
    auto it = z_cache_.find(key);
    if (it != z_cache_.end())
        return it->second;

    const int n = a.total();
    Subspace z = Subspace::zero(tc_.slice_dim(n));
    if (n >= 0 && n <= tc_.max_degree()) {
        const int col0 = tc_.filtration_offset(n, a.p);
        const int ncols = tc_.slice_dim(n) - col0;
        const int cut = tc_.filtration_offset(n + 1, a.p + r);
        SparseMatrix sub(cut, ncols);
        const SparseMatrix& d = tc_.differential(n);
        for (const auto& [key2, v] : d.entries())
            if (key2.first < cut && key2.second >= col0)
                sub.set(key2.first, key2.second - col0, v);
        auto rki = rank_kernel_image(sub);
        std::vector<QVector> gens;
        for (const auto& k : rki.kernel.basis()) {
            QVector full = zero_vector(tc_.slice_dim(n));
            for (int i = 0; i < ncols; ++i)
                full[static_cast<std::size_t>(col0 + i)] = k[static_cast<std::size_t>(i)];
            gens.push_back(std::move(full));
        }
        z = Subspace::span(tc_.slice_dim(n), gens);
    }
    return z_cache_.emplace(key, std::move(z)).first->second;
}

Page SpectralSequence::build_page(int r)
{
    Page page;
    page.r = r;
    for (int p = 0; p <= mc_->P(); ++p) {
        for (int q = 0; q <= mc_->Q(); ++q) {
            Bidegree a{p, q};
            Subspace z = z_space(a, r);
            Subspace b = z_space({p + 1, q - 1}, r - 1);
            const Subspace& pre = z_space({p - r + 1, q + r - 2}, r - 1);
            const SparseMatrix& d = tc_.differential(a.total() - 1);
            std::vector<QVector> dgens;
            for (const auto& x : pre.basis())
                dgens.push_back(d.apply(x));
            b = b.sum(Subspace::span(tc_.slice_dim(a.total()), dgens));
            page.cells.emplace(a, Subquotient(std::move(z), std::move(b)));
        }
    }
    for (int p = 0; p <= mc_->P(); ++p) {
        for (int q = 0; q <= mc_->Q(); ++q) {
            Bidegree a{p, q};
            Bidegree t{p + r, q - r + 1};
            const Subquotient& src = page.cells.at(a);
            if (!mc_->in_box(t)) {
                page.d.emplace(a, SparseMatrix(0, src.dim()));
                continue;
            }
            page.d.emplace(a, induced_map(tc_.differential(a.total()), src, page.cells.at(t)));
        }
    }
    return page;
}

const Page& SpectralSequence::page(int r)
{
    if (r < 0)
        throw Error("SpectralSequence::page: negative page index");
    auto it = pages_.find(r);
    if (it == pages_.end())
        it = pages_.emplace(r, build_page(r)).first;
    return it->second;
}

int SpectralSequence::stabilization_r()
{
    const int top = mc_->P() + 2;
    int stable = top;
    for (int r = top; r >= 0; --r) {
        const Page& pg = page(r);
        bool d_zero = true;
        for (const auto& [a, m] : pg.d)
            if (!m.is_zero())
                d_zero = false;
        if (!d_zero || pg.dims() != page(top).dims())
            break;
        stable = r;
    }
    return stable;
}

const Page& SpectralSequence::infinity()
{
    const int top = mc_->P() + 2;
    // A bounded box forces collapse at P+1; anything else is an engine bug.
    for (int r = mc_->P() + 1; r <= top; ++r) {
        const Page& pg = page(r);
        for (const auto& [a, m] : pg.d)
            if (!m.is_zero())
                throw Error("SpectralSequence::infinity: d_" + std::to_string(r) +
                            " nonzero past the stabilization bound at " + folcup::to_string(a));
    }
    if (page(mc_->P() + 1).dims() != page(top).dims())
        throw Error("SpectralSequence::infinity: dims still moving past the stabilization bound");
    return page(top);
}

Page compute_page(const MultiComplex& mc, int r)
{
    SpectralSequence ss(mc);
    return ss.page(r);
}

Page infinity_page(const MultiComplex& mc, int* stabilized_at)
{
    SpectralSequence ss(mc);
    Page page = ss.infinity();
    if (stabilized_at)
        *stabilized_at = ss.stabilization_r();
    return page;
}

PageClass make_page_class(const Page& page, Bidegree a, QVector coords)
{
    auto it = page.cells.find(a);
    if (it == page.cells.end())
        throw Error("make_page_class: no cell at " + folcup::to_string(a));
    PageClass c;
    c.r = page.r;
    c.pq = a;
    c.representative = it->second.rep_combination(coords);
    c.coords = std::move(coords);
    return c;
}

PageClass project_to_page(const Page& page, Bidegree a, const QVector& total_vector)
{
    auto it = page.cells.find(a);
    if (it == page.cells.end())
        throw Error("project_to_page: no cell at " + folcup::to_string(a));
    PageClass c;
    c.r = page.r;
    c.pq = a;
    c.coords = it->second.project(total_vector);
    c.representative = total_vector;
    return c;
}

PageClass page_product(const TotalComplex& tc, const ProductStructure& ps, const Page& page,
                       const PageClass& a, const PageClass& b)
{
    if (a.r != b.r || a.r != page.r)
        throw Error("page_product: classes live on different pages");
    PageClass out;
    out.r = page.r;
    out.pq = a.pq + b.pq;
    if (!tc.mc().in_box(out.pq))
        return out;  // box overflow: the zero class
    QVector prod = tc.mul(ps, a.pq.total(), a.representative, b.pq.total(), b.representative);
    out.representative = prod;
    out.coords = page.cells.at(out.pq).project(prod);
    return out;
}

SparseMatrix slice_matrix(const TotalComplex& src, const TotalComplex& dst, const BlockMap& f,
                          int n)
{
    SparseMatrix m(dst.slice_dim(n), src.slice_dim(n));
    for (const Bidegree& a : src.slice_bidegrees(n)) {
        if (src.mc().dim(a) == 0 || !dst.mc().in_box(a) || dst.mc().dim(a) == 0)
            continue;
        SparseMatrix block = f.block_or_zero(src.mc(), dst.mc(), a);
        const int r0 = dst.offset(n, a);
        const int c0 = src.offset(n, a);
        for (const auto& [key, v] : block.entries())
            m.set(r0 + key.first, c0 + key.second, v);
    }
    return m;
}

BasicImage basic_image(const MultiComplex& mc, const ProductStructure& ps)
{
    (void)ps;  // products are evaluated on the stored reps by the callers
    SpectralSequence ss(mc);
    const Page& e2 = ss.page(2);
    auto h_cells = total_cohomology_cells(mc);
    const TotalComplex& tc = ss.total();

    BasicImage out;
    for (int p = 1; p <= mc.P(); ++p) {
        const Subquotient& cell = e2.cells.at({p, 0});
        if (cell.dim() == 0)
            continue;
        std::vector<QVector> h_coords;
        std::vector<QVector> cocycles;
        for (int i = 0; i < cell.dim(); ++i) {
            QVector w = cell.reps()[static_cast<std::size_t>(i)];
            QVector dw = tc.differential(p).apply(w);
            if (!folcup::is_zero(dw)) {
                // search the coset w + B for a d-closed representative
                const auto& bbasis = cell.denominator().basis();
                std::vector<QVector> db;
                for (const auto& bb : bbasis)
                    db.push_back(tc.differential(p).apply(bb));
                LinearSolver solver(SparseMatrix::from_columns(tc.slice_dim(p + 1), db));
                auto sol = solver.solve(scaled(dw, rational(-1)));
                if (!sol) {
                    out.flagged.emplace_back(Bidegree{p, 0}, i);
                    continue;
                }
                for (std::size_t j = 0; j < bbasis.size(); ++j)
                    axpy(w, (*sol)[j], bbasis[j]);
            }
            h_coords.push_back(h_cells.at(p).project(w));
            cocycles.push_back(std::move(w));
        }
        Subspace image = Subspace::span(h_cells.at(p).dim(), h_coords);
        if (image.dim() == 0)
            continue;
        // express the canonical image basis back in terms of the collected reps
        LinearSolver mix(SparseMatrix::from_columns(h_cells.at(p).dim(), h_coords));
        std::vector<QVector> basis_reps;
        for (const auto& b : image.basis()) {
            auto combo = mix.solve(b);
            if (!combo)
                throw Error("basic_image: inconsistent span");
            QVector rep = zero_vector(tc.slice_dim(p));
            for (std::size_t j = 0; j < cocycles.size(); ++j)
                axpy(rep, (*combo)[j], cocycles[j]);
            basis_reps.push_back(std::move(rep));
        }
        out.image.emplace(p, std::move(image));
        out.reps.emplace(p, std::move(basis_reps));
    }
    return out;
}

}  // namespace folcup
