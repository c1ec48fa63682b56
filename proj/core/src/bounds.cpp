#include "folcup/bounds.hpp"

#include <memory>

namespace folcup {

int GradedAlgebraSlice::dim(int grade) const
{
    auto it = grade_dims.find(grade);
    return it == grade_dims.end() ? 0 : it->second;
}

int GradedAlgebraSlice::total_dim() const
{
    int n = 0;
    for (const auto& [g, d] : grade_dims)
        n += d;
    return n;
}

namespace {

struct Tracked {
    SliceElement element;
    std::vector<std::size_t> factors;  // indices into slice.basis
};

}  // namespace

CupLengthCertificate cup_length(const GradedAlgebraSlice& slice)
{
    CupLengthCertificate cert;
    cert.slice_name = slice.name;

    // A^(1): the slice itself, tracked through its basis.
    std::vector<Tracked> current;
    for (std::size_t i = 0; i < slice.basis.size(); ++i)
        current.push_back({slice.basis[i], {i}});

    int max_grade = 0;
    for (const auto& [g, d] : slice.grade_dims)
        if (d > 0)
            max_grade = std::max(max_grade, g);

    int k = 1;
    std::vector<Tracked> last_nonzero;
    for (;;) {
        // tracked vectors are kept only when they grow the span, so they
        // are independent and their count is dim A^(k)
        const int dim_k = static_cast<int>(current.size());
        cert.span_dims.emplace_back(k, dim_k);
        if (dim_k == 0)
            break;
        last_nonzero = current;
        cert.value = k;

        // A^(k+1) = span of (kept vectors of A^(k)) * basis
        std::vector<Tracked> next;
        std::map<int, Subspace> spans;
        for (const auto& t : current) {
            for (std::size_t j = 0; j < slice.basis.size(); ++j) {
                const SliceElement& e = slice.basis[j];
                const int g = t.element.grade + e.grade;
                if (g > max_grade)
                    continue;
                SliceElement prod = slice.mult(t.element, e);
                if (prod.is_zero())
                    continue;
                Subspace& s =
                    spans.try_emplace(g, Subspace::zero(slice.dim(g))).first->second;
                Subspace grown = s.sum(Subspace::span(slice.dim(g), {prod.coords}));
                if (grown.dim() == s.dim())
                    continue;  // already spanned
                s = std::move(grown);
                Tracked nt;
                nt.element = std::move(prod);
                nt.factors = t.factors;
                nt.factors.push_back(j);
                next.push_back(std::move(nt));
            }
        }
        if (next.empty()) {
            cert.span_dims.emplace_back(k + 1, 0);
            break;
        }
        current = std::move(next);
        ++k;
    }

    if (cert.value > 0) {
        const Tracked& w = last_nonzero.front();
        for (std::size_t i : w.factors)
            cert.witness_factors.push_back(slice.basis[i]);
        cert.witness_product = w.element;
    }
    return cert;
}

bool verify_certificate(const GradedAlgebraSlice& slice, const CupLengthCertificate& cert)
{
    if (cert.value == 0) {
        // the span record must show the slice vanishing at length one
        return !cert.span_dims.empty() && cert.span_dims.front() == std::make_pair(1, 0) &&
               slice.total_dim() == 0;
    }
    if (static_cast<int>(cert.witness_factors.size()) != cert.value)
        return false;
    SliceElement acc = cert.witness_factors.front();
    for (std::size_t i = 1; i < cert.witness_factors.size(); ++i)
        acc = slice.mult(acc, cert.witness_factors[i]);
    if (acc.is_zero() || acc.grade != cert.witness_product.grade)
        return false;
    if (acc.coords != cert.witness_product.coords)
        return false;
    // the span record must end at the first vanishing length, value + 1
    return !cert.span_dims.empty() &&
           cert.span_dims.back() == std::make_pair(cert.value + 1, 0);
}

namespace {

std::string grade_label(const std::string& stem, int grade, int i)
{
    return stem + "^" + std::to_string(grade) + "#" + std::to_string(i);
}

/* Shared engine state for the cohomology slices. Kept alive by the mult
 * closures via shared_ptr. */
struct HState {
    TotalComplex tc;
    std::map<int, Subquotient> h_cells;

    explicit HState(const MultiComplex& mc) : tc(mc), h_cells(total_cohomology_cells(mc)) {}
};

struct PageState {
    SpectralSequence ss;
    const Page* page;

    PageState(const MultiComplex& mc, int r) : ss(mc), page(nullptr) { page = &ss.page(r); }
};

}  // namespace

GradedAlgebraSlice basic_image_slice(const MultiComplex& mc, const ProductStructure& ps)
{
    auto state = std::make_shared<HState>(mc);
    BasicImage bi = basic_image(mc, ps);
    auto image = std::make_shared<std::map<int, Subspace>>(bi.image);

    GradedAlgebraSlice slice;
    slice.name = "pi^*H_b^{>0} inside H^{>0}(total)";
    for (const auto& [p, sub] : bi.image) {
        slice.grade_dims[p] = sub.dim();
        for (int i = 0; i < sub.dim(); ++i) {
            SliceElement e;
            e.grade = p;
            e.cell = {p, 0};
            e.coords = zero_vector(sub.dim());
            e.coords[static_cast<std::size_t>(i)] = 1;
            e.representative = bi.reps.at(p)[static_cast<std::size_t>(i)];
            e.label = grade_label("pi*Hb", p, i);
            slice.basis.push_back(std::move(e));
        }
    }
    const ProductStructure* psp = &ps;
    slice.mult = [state, image, psp](const SliceElement& a, const SliceElement& b) {
        SliceElement out;
        out.grade = a.grade + b.grade;
        out.cell = {out.grade, 0};
        auto it = image->find(out.grade);
        const int dim = it == image->end() ? 0 : it->second.dim();
        out.coords = zero_vector(dim);
        out.label = a.label + " u " + b.label;
        if (out.grade > state->tc.max_degree())
            return out;
        QVector prod = state->tc.mul(*psp, a.grade, a.representative, b.grade, b.representative);
        if (prod.empty())
            return out;
        out.representative = prod;
        QVector h = state->h_cells.at(out.grade).project(prod);
        if (dim == 0) {
            if (!folcup::is_zero(h))
                throw Error("basic image slice: product escapes the image subalgebra");
            return out;
        }
        auto coords = it->second.coordinates(h);
        if (!coords)
            throw Error("basic image slice: product escapes the image subalgebra");
        out.coords = *coords;
        return out;
    };
    return slice;
}

GradedAlgebraSlice derham_slice(const MultiComplex& mc, const ProductStructure& ps, int d)
{
    auto state = std::make_shared<HState>(mc);

    GradedAlgebraSlice slice;
    slice.name = "H^{>" + std::to_string(d) + "}(total)";
    for (const auto& [n, cell] : state->h_cells) {
        if (n <= d || cell.dim() == 0)
            continue;
        slice.grade_dims[n] = cell.dim();
        for (int i = 0; i < cell.dim(); ++i) {
            SliceElement e;
            e.grade = n;
            e.cell = {n, 0};
            e.coords = zero_vector(cell.dim());
            e.coords[static_cast<std::size_t>(i)] = 1;
            e.representative = cell.reps()[static_cast<std::size_t>(i)];
            e.label = grade_label("H", n, i);
            slice.basis.push_back(std::move(e));
        }
    }
    const ProductStructure* psp = &ps;
    slice.mult = [state, psp](const SliceElement& a, const SliceElement& b) {
        SliceElement out;
        out.grade = a.grade + b.grade;
        out.cell = {out.grade, 0};
        out.label = a.label + " u " + b.label;
        if (out.grade > state->tc.max_degree()) {
            out.coords = {};
            return out;
        }
        const Subquotient& cell = state->h_cells.at(out.grade);
        out.coords = zero_vector(cell.dim());
        QVector prod = state->tc.mul(*psp, a.grade, a.representative, b.grade, b.representative);
        if (prod.empty())
            return out;
        out.representative = prod;
        out.coords = cell.project(prod);
        return out;
    };
    return slice;
}

namespace {

/* Page slice over the cells selected by `keep`: basis classes carry their
 * total-complex representatives, and products are projected cellwise (a
 * product of single-cell classes is again single-cell). */
GradedAlgebraSlice page_slice(const MultiComplex& mc, const ProductStructure& ps, int r,
                              const std::string& name, const std::string& stem,
                              std::function<bool(Bidegree)> keep)
{
    auto state = std::make_shared<PageState>(mc, r);
    GradedAlgebraSlice slice;
    slice.name = name;

    // per-grade layout: offsets of each kept cell inside the grade
    auto offsets = std::make_shared<std::map<Bidegree, int>>();
    for (int n = 0; n <= mc.P() + mc.Q(); ++n) {
        int off = 0;
        for (const auto& [a, cell] : state->page->cells) {
            if (a.total() != n || !keep(a) || cell.dim() == 0)
                continue;
            (*offsets)[a] = off;
            off += cell.dim();
        }
        if (off > 0)
            slice.grade_dims[n] = off;
    }
    for (const auto& [a, off] : *offsets) {
        const Subquotient& cell = state->page->cells.at(a);
        for (int i = 0; i < cell.dim(); ++i) {
            SliceElement e;
            e.grade = a.total();
            e.cell = a;
            e.coords = zero_vector(slice.grade_dims.at(a.total()));
            e.coords[static_cast<std::size_t>(off + i)] = 1;
            e.representative = cell.reps()[static_cast<std::size_t>(i)];
            e.label = stem + folcup::to_string(a) + "#" + std::to_string(i);
            slice.basis.push_back(std::move(e));
        }
    }
    const ProductStructure* psp = &ps;
    auto gdims = std::make_shared<std::map<int, int>>(slice.grade_dims);
    slice.mult = [state, offsets, gdims, psp](const SliceElement& a, const SliceElement& b) {
        SliceElement out;
        out.grade = a.grade + b.grade;
        out.cell = a.cell + b.cell;
        out.label = a.label + " u " + b.label;
        auto git = gdims->find(out.grade);
        out.coords = zero_vector(git == gdims->end() ? 0 : git->second);
        if (!state->ss.complex().in_box(out.cell) || !offsets->count(out.cell))
            return out;  // box overflow or a cell outside the slice filter
        QVector prod = state->ss.total().mul(*psp, a.grade, a.representative, b.grade,
                                             b.representative);
        if (prod.empty())
            return out;
        out.representative = prod;
        QVector cls = state->page->cells.at(out.cell).project(prod);
        const int off = offsets->at(out.cell);
        for (std::size_t i = 0; i < cls.size(); ++i)
            out.coords[static_cast<std::size_t>(off) + i] = cls[i];
        return out;
    };
    return slice;
}

}  // namespace

GradedAlgebraSlice transverse_e2_slice(const MultiComplex& mc, const ProductStructure& ps)
{
    return page_slice(mc, ps, 2, "E_2^{>0,*}", "E2", [](Bidegree a) { return a.p > 0; });
}

GradedAlgebraSlice tangential_e1_slice(const MultiComplex& mc, const ProductStructure& ps)
{
    return page_slice(mc, ps, 1, "E_1^{*,>0}", "E1", [](Bidegree a) { return a.q > 0; });
}

CupLengthCertificate bound_basic(const MultiComplex& mc, const ProductStructure& ps)
{
    return cup_length(basic_image_slice(mc, ps));
}

CupLengthCertificate bound_derham(const MultiComplex& mc, const ProductStructure& ps, int d)
{
    if (d < 0)
        d = mc.Q();  // the tangential dimension of the model
    return cup_length(derham_slice(mc, ps, d));
}

CupLengthCertificate bound_transverse_e2(const MultiComplex& mc, const ProductStructure& ps)
{
    return cup_length(transverse_e2_slice(mc, ps));
}

CupLengthCertificate bound_tangential_e1(const MultiComplex& mc, const ProductStructure& ps)
{
    return cup_length(tangential_e1_slice(mc, ps));
}

BoundReport bound_report(const MultiComplex& mc, const ProductStructure& ps)
{
    BoundReport r;
    r.basic.certificate = bound_basic(mc, ps);
    r.basic.applies_to = "transverse LS category";
    r.derham.certificate = bound_derham(mc, ps);
    r.derham.applies_to = "transverse LS category";
    r.e2.certificate = bound_transverse_e2(mc, ps);
    r.e2.applies_to =
        "saturated transverse LS category, valid under the user-asserted compact "
        "Hausdorff hypothesis";
    r.tangential.certificate = bound_tangential_e1(mc, ps);
    r.tangential.applies_to = "tangential LS category";
    r.convention = r.basic.certificate.convention;
    return r;
}

}  // namespace folcup
