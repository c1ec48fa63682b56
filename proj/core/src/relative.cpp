#include "folcup/relative.hpp"

namespace folcup {

namespace {

int dim_or_zero(const MultiComplex& mc, Bidegree a)
{
    return mc.in_box(a) ? mc.dim(a) : 0;
}

SparseMatrix stack_rows(const SparseMatrix& top, const SparseMatrix& bottom)
{
    SparseMatrix out(top.rows() + bottom.rows(), top.cols());
    for (const auto& [key, v] : top.entries())
        out.set(key.first, key.second, v);
    for (const auto& [key, v] : bottom.entries())
        out.set(top.rows() + key.first, key.second, v);
    return out;
}

QVector concat(const QVector& a, const QVector& b)
{
    QVector out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

E1Terms::E1Terms(const MultiComplex& mc) : mc_(&mc)
{
    std::map<Bidegree, RankKernelImage> rki;
    for (int p = 0; p <= mc.P(); ++p)
        for (int q = 0; q <= mc.Q(); ++q)
            rki.emplace(Bidegree{p, q}, rank_kernel_image(mc.block_or_zero(0, {p, q})));
    for (int p = 0; p <= mc.P(); ++p) {
        for (int q = 0; q <= mc.Q(); ++q) {
            Bidegree a{p, q};
            Subspace z = rki.at(a).kernel;
            Subspace b = q > 0 ? rki.at({p, q - 1}).image : Subspace::zero(mc.dim(a));
            cells_.emplace(a, Subquotient(std::move(z), std::move(b)));
        }
    }
    for (int p = 0; p <= mc.P(); ++p) {
        for (int q = 0; q <= mc.Q(); ++q) {
            Bidegree a{p, q};
            Bidegree t{p + 1, q};
            if (!mc.in_box(t)) {
                d1_.emplace(a, SparseMatrix(0, cells_.at(a).dim()));
                continue;
            }
            d1_.emplace(a, induced_map(mc.block_or_zero(1, a), cells_.at(a), cells_.at(t)));
        }
    }
}

const Subquotient& E1Terms::cell(Bidegree a) const
{
    static const Subquotient empty;
    auto it = cells_.find(a);
    return it == cells_.end() ? empty : it->second;
}

int E1Terms::dim(Bidegree a) const
{
    auto it = cells_.find(a);
    return it == cells_.end() ? 0 : it->second.dim();
}

const SparseMatrix& E1Terms::d1(Bidegree a) const
{
    auto it = d1_.find(a);
    return it == d1_.end() ? empty_ : it->second;
}

std::map<Bidegree, Subquotient> e2_cells(const E1Terms& t)
{
    std::map<Bidegree, Subquotient> out;
    const MultiComplex& mc = t.complex();
    std::map<Bidegree, RankKernelImage> rki;
    for (int p = 0; p <= mc.P(); ++p)
        for (int q = 0; q <= mc.Q(); ++q)
            rki.emplace(Bidegree{p, q}, rank_kernel_image(t.d1({p, q})));
    for (int p = 0; p <= mc.P(); ++p) {
        for (int q = 0; q <= mc.Q(); ++q) {
            Bidegree a{p, q};
            Subspace z = rki.at(a).kernel;
            Subspace b = p > 0 ? rki.at({p - 1, q}).image : Subspace::zero(t.dim(a));
            out.emplace(a, Subquotient(std::move(z), std::move(b)));
        }
    }
    return out;
}

const SparseMatrix& MayerVietoris::at(const std::map<Bidegree, SparseMatrix>& m, Bidegree a)
{
    static const SparseMatrix empty;
    auto it = m.find(a);
    return it == m.end() ? empty : it->second;
}

MayerVietoris::MayerVietoris(const CoverData& c)
    : cover_(&c),
      m_(c.M),
      u_(c.U),
      v_(c.V),
      uv_(c.UV),
      empty_complex_(c.M.P(), c.M.Q()),
      empty_terms_(empty_complex_)
{
    const int P = c.M.P(), Q = c.M.Q();

    for (int p = 0; p <= P; ++p) {
        for (int q = 0; q <= Q; ++q) {
            Bidegree a{p, q};
            i_u_.emplace(a, induced_map(c.rho_MU.block_or_zero(c.M, c.U, a), m_.cell(a), u_.cell(a)));
            i_v_.emplace(a, induced_map(c.rho_MV.block_or_zero(c.M, c.V, a), m_.cell(a), v_.cell(a)));
            j_u_.emplace(a,
                         induced_map(c.rho_UUV.block_or_zero(c.U, c.UV, a), u_.cell(a), uv_.cell(a)));
            j_v_.emplace(a,
                         induced_map(c.rho_VUV.block_or_zero(c.V, c.UV, a), v_.cell(a), uv_.cell(a)));
            s_u_.emplace(a, induced_map(c.e_U.block_or_zero(c.UV, c.U, a), uv_.cell(a), u_.cell(a)));
            s_v_.emplace(a, induced_map(c.e_V.block_or_zero(c.UV, c.V, a), uv_.cell(a), v_.cell(a)));
        }
    }

    // J = i^{-1}(id - Sπ), solved columnwise through the stacked i at E_1.
    for (int p = 0; p <= P; ++p) {
        for (int q = 0; q <= Q; ++q) {
            Bidegree a{p, q};
            LinearSolver i_solver(stack_rows(i_u_.at(a), i_v_.at(a)));
            const int du = u_.dim(a), dv = v_.dim(a), dm = m_.dim(a);

            auto solve_into = [&](const QVector& top, const QVector& bottom) {
                auto sol = i_solver.solve(concat(top, bottom));
                if (!sol)
                    throw Error("MayerVietoris: id - Sπ does not factor through i at " +
                                folcup::to_string(a) + " (cover is not exact)");
                return *sol;
            };

            SparseMatrix ju(dm, du), jv(dm, dv);
            for (int k = 0; k < du; ++k) {
                QVector e = zero_vector(du);
                e[static_cast<std::size_t>(k)] = 1;
                QVector pi = j_u_.at(a).apply(e);  // π(α,0) = j_U α
                QVector top = e - s_u_.at(a).apply(pi);
                QVector bottom = s_v_.at(a).apply(pi);
                QVector x = solve_into(top, bottom);
                for (int i = 0; i < dm; ++i)
                    if (x[static_cast<std::size_t>(i)] != 0)
                        ju.set(i, k, x[static_cast<std::size_t>(i)]);
            }
            for (int k = 0; k < dv; ++k) {
                QVector e = zero_vector(dv);
                e[static_cast<std::size_t>(k)] = 1;
                QVector pi = j_v_.at(a).apply(e);  // π(0,β) = -j_V β
                QVector top = s_u_.at(a).apply(pi);
                QVector bottom = e - s_v_.at(a).apply(pi);
                QVector x = solve_into(top, bottom);
                for (int i = 0; i < dm; ++i)
                    if (x[static_cast<std::size_t>(i)] != 0)
                        jv.set(i, k, x[static_cast<std::size_t>(i)]);
            }
            left_u_.emplace(a, std::move(ju));
            left_v_.emplace(a, std::move(jv));
        }
    }

    // Δ = i^{-1}(dS - Sd): E_0-level defect on representatives, projected to E_1.
    for (int p = 0; p <= P; ++p) {
        for (int q = 0; q <= Q; ++q) {
            Bidegree a{p, q};
            Bidegree t{p + 1, q};
            const Subquotient& src = uv_.cell(a);
            if (!c.M.in_box(t)) {
                delta_.emplace(a, SparseMatrix(0, src.dim()));
                continue;
            }
            LinearSolver i0_solver(stack_rows(c.rho_MU.block_or_zero(c.M, c.U, t),
                                              c.rho_MV.block_or_zero(c.M, c.V, t)));
            SparseMatrix dm(m_.dim(t), src.dim());
            for (int k = 0; k < src.dim(); ++k) {
                const QVector& omega = src.reps()[static_cast<std::size_t>(k)];
                QVector au = c.e_U.apply(c.UV, c.U, a, omega);
                QVector av = c.e_V.apply(c.UV, c.V, a, omega);
                QVector d1_omega = zero_vector(dim_or_zero(c.UV, t));
                if (c.UV.in_box(t))
                    d1_omega = c.UV.block_or_zero(1, a).apply(omega);
                QVector top = c.U.block_or_zero(1, a).apply(au) -
                              c.e_U.block_or_zero(c.UV, c.U, t).apply(d1_omega);
                QVector bottom = c.e_V.block_or_zero(c.UV, c.V, t).apply(d1_omega) -
                                 c.V.block_or_zero(1, a).apply(av);
                auto xi = i0_solver.solve(concat(top, bottom));
                if (!xi)
                    throw Error("connecting morphism: dS - Sd lies outside the image of i at " +
                                folcup::to_string(a) + " (invalid cover data)");
                QVector cls = m_.cell(t).project(*xi);
                for (int i = 0; i < m_.dim(t); ++i)
                    if (cls[static_cast<std::size_t>(i)] != 0)
                        dm.set(i, k, cls[static_cast<std::size_t>(i)]);
            }
            delta_.emplace(a, std::move(dm));
        }
    }
}

const E1Terms& MayerVietoris::terms(CoverSet which) const
{
    switch (which) {
        case CoverSet::U:
            return u_;
        case CoverSet::V:
            return v_;
        case CoverSet::M:
            return m_;
        case CoverSet::Empty:
            return empty_terms_;
    }
    throw Error("MayerVietoris::terms: bad selector");
}

E1Class MayerVietoris::delta(const E1Class& omega_on_uv) const
{
    E1Class out;
    out.pq = Bidegree{omega_on_uv.pq.p + 1, omega_on_uv.pq.q};
    out.coords = delta_matrix(omega_on_uv.pq).apply(omega_on_uv.coords);
    return out;
}

ValidationReport MayerVietoris::e1_exactness() const
{
    ValidationReport report;
    const CoverData& c = *cover_;
    for (int p = 0; p <= c.M.P(); ++p) {
        for (int q = 0; q <= c.M.Q(); ++q) {
            Bidegree a{p, q};
            SparseMatrix i_stack = stack_rows(i_u_.at(a), i_v_.at(a));
            SparseMatrix pi(uv_.dim(a), u_.dim(a) + v_.dim(a));
            for (const auto& [key, v] : j_u_.at(a).entries())
                pi.set(key.first, key.second, v);
            for (const auto& [key, v] : j_v_.at(a).entries())
                pi.set(key.first, u_.dim(a) + key.second, -v);

            const int rank_i = echelon_form(i_stack).rank();
            const int rank_pi = echelon_form(pi).rank();
            if (rank_i != m_.dim(a))
                report.add("mv_e1_injective", a, -1, "E_1(M) → E_1(U)⊕E_1(V) is not injective");
            if (rank_pi != uv_.dim(a))
                report.add("mv_e1_surjective", a, -1, "E_1(U)⊕E_1(V) → E_1(U∩V) is not onto");
            if (!(pi * i_stack).is_zero())
                report.add("mv_e1_composite", a, -1, "π ∘ i != 0 at E_1");
            else if (u_.dim(a) + v_.dim(a) - rank_pi != rank_i)
                report.add("mv_e1_middle", a, -1, "ker π != im i at E_1");

            // π ∘ S = id at E_1, with S = (S_U, -S_V).
            SparseMatrix pis = j_u_.at(a) * s_u_.at(a) + j_v_.at(a) * s_v_.at(a);
            if (!(pis == SparseMatrix::identity(uv_.dim(a))))
                report.add("mv_e1_section", a, -1, "π ∘ S != id at E_1");

            // S is a chain map for d_0 (checked on the E_0 blocks).
            Bidegree up{p, q + 1};
            if (c.M.in_box(up)) {
                SparseMatrix lhs = c.e_U.block_or_zero(c.UV, c.U, up) * c.UV.block_or_zero(0, a);
                SparseMatrix rhs = c.U.block_or_zero(0, a) * c.e_U.block_or_zero(c.UV, c.U, a);
                if (!(lhs == rhs))
                    report.add("mv_s_chain_map", a, -1, "e_U does not commute with d_0");
                lhs = c.e_V.block_or_zero(c.UV, c.V, up) * c.UV.block_or_zero(0, a);
                rhs = c.V.block_or_zero(0, a) * c.e_V.block_or_zero(c.UV, c.V, a);
                if (!(lhs == rhs))
                    report.add("mv_s_chain_map", a, -1, "e_V does not commute with d_0");
            }
        }
    }
    return report;
}

ValidationReport MayerVietoris::identity_checks() const
{
    ValidationReport report;
    const CoverData& c = *cover_;
    for (int p = 0; p <= c.M.P(); ++p) {
        for (int q = 0; q <= c.M.Q(); ++q) {
            Bidegree a{p, q};
            Bidegree t{p + 1, q};

            // i ∘ Δ = dS - Sd on E_1, componentwise on U and V.
            SparseMatrix top = u_.d1(a) * s_u_.at(a);
            SparseMatrix bottom = (v_.d1(a) * s_v_.at(a)).scaled(Rational(-1));
            if (c.M.in_box(t)) {
                top = top - s_u_.at(t) * uv_.d1(a);
                bottom = bottom + s_v_.at(t) * uv_.d1(a);
                if (!(i_u_.at(t) * delta_.at(a) == top))
                    report.add("delta_defect", a, -1, "i_U Δ != (dS - Sd)_U");
                if (!(i_v_.at(t) * delta_.at(a) == bottom))
                    report.add("delta_defect", a, -1, "i_V Δ != (dS - Sd)_V");
            } else if (!top.is_zero() || !bottom.is_zero()) {
                report.add("delta_defect", a, -1, "dS - Sd nonzero outside the box");
            }

            // dJ - Jd = -Δπ on E_1, on each slot of the left section.
            if (c.M.in_box(t)) {
                SparseMatrix lhs_u = m_.d1(a) * left_u_.at(a) - left_u_.at(t) * u_.d1(a);
                if (!(lhs_u == (delta_.at(a) * j_u_.at(a)).scaled(Rational(-1))))
                    report.add("left_section_defect", a, -1, "dJ - Jd != -Δπ on the U slot");
                SparseMatrix lhs_v = m_.d1(a) * left_v_.at(a) - left_v_.at(t) * v_.d1(a);
                if (!(lhs_v == delta_.at(a) * j_v_.at(a)))
                    report.add("left_section_defect", a, -1, "dJ - Jd != -Δπ on the V slot");
            }

            // Δ anticommutes with d_1.
            if (c.M.in_box(t) && c.M.in_box({p + 2, q})) {
                SparseMatrix lhs = delta_.at(t) * uv_.d1(a);
                SparseMatrix rhs = (m_.d1(t) * delta_.at(a)).scaled(Rational(-1));
                if (!(lhs == rhs))
                    report.add("delta_anticommute", a, -1, "Δ d_1 != -d_1 Δ");
            }

            // J ∘ i = id.
            SparseMatrix ji = left_u_.at(a) * i_u_.at(a) + left_v_.at(a) * i_v_.at(a);
            if (!(ji == SparseMatrix::identity(m_.dim(a))))
                report.add("left_section_retraction", a, -1, "J ∘ i != id");
        }
    }
    return report;
}

const RelativePage& MayerVietoris::relative(CoverSet w) const
{
    auto it = relative_.find(w);
    if (it == relative_.end())
        it = relative_.emplace(w, build_relative(w)).first;
    return it->second;
}

RelativePage MayerVietoris::build_relative(CoverSet w) const
{
    const E1Terms& tw = terms(w);
    const CoverData& c = *cover_;
    RelativePage page;
    page.w = w;
    page.max_p = c.M.P() + 1;

    auto iw = [&](Bidegree a) -> SparseMatrix {
        switch (w) {
            case CoverSet::U:
                return i_u_.at(a);
            case CoverSet::V:
                return i_v_.at(a);
            case CoverSet::M:
                return SparseMatrix::identity(m_.dim(a));
            case CoverSet::Empty:
                return SparseMatrix(0, m_.dim(a));
        }
        throw Error("relative: bad selector");
    };

    for (int p = 0; p <= page.max_p; ++p) {
        for (int q = 0; q <= c.M.Q(); ++q) {
            Bidegree a{p, q};
            page.m_dims[a] = m_.dim(a);
            page.w_dims[a] = tw.dim({p - 1, q});
        }
    }
    for (int p = 0; p <= page.max_p; ++p) {
        for (int q = 0; q <= c.M.Q(); ++q) {
            Bidegree a{p, q};
            Bidegree t{p + 1, q};
            const int rows = p + 1 <= page.max_p ? page.cone_dim(t) : 0;
            SparseMatrix d(rows, page.cone_dim(a));
            if (p + 1 <= page.max_p) {
                for (const auto& [key, v] : m_.d1(a).entries())
                    d.set(key.first, key.second, v);
                const SparseMatrix rest = iw(a);
                for (const auto& [key, v] : rest.entries())
                    d.set(page.m_dims.at(t) + key.first, key.second, v);
                for (const auto& [key, v] : tw.d1({p - 1, q}).entries())
                    d.set(page.m_dims.at(t) + key.first, page.m_dims.at(a) + key.second, -v);
            }
            page.delta.emplace(a, std::move(d));
        }
    }
    for (int p = 0; p + 1 <= page.max_p; ++p) {
        for (int q = 0; q <= c.M.Q(); ++q) {
            Bidegree a{p, q};
            if (!(page.delta.at({p + 1, q}) * page.delta.at(a)).is_zero())
                throw Error("relative_pages: δ² != 0 at " + folcup::to_string(a));
        }
    }
    for (int p = 0; p <= page.max_p; ++p) {
        for (int q = 0; q <= c.M.Q(); ++q) {
            Bidegree a{p, q};
            auto rki = rank_kernel_image(page.delta.at(a));
            Subspace b = p > 0 ? rank_kernel_image(page.delta.at({p - 1, q})).image
                               : Subspace::zero(page.cone_dim(a));
            page.e2.emplace(a, Subquotient(rki.kernel, std::move(b)));
        }
    }
    return page;
}

int RelativePage::m_dim(Bidegree a) const
{
    auto it = m_dims.find(a);
    return it == m_dims.end() ? 0 : it->second;
}

int RelativePage::w_dim(Bidegree a) const
{
    auto it = w_dims.find(a);
    return it == w_dims.end() ? 0 : it->second;
}

int RelativePage::cone_dim(Bidegree a) const
{
    return m_dim(a) + w_dim(a);
}

const SparseMatrix& RelativePage::delta_at(Bidegree a) const
{
    static const SparseMatrix empty;
    auto it = delta.find(a);
    return it == delta.end() ? empty : it->second;
}

ValidationReport mv_e1_exactness(const CoverData& c)
{
    try {
        return MayerVietoris(c).e1_exactness();
    } catch (const Error& e) {
        // e.g. a partition that is not leafwise constant never reaches E_1
        ValidationReport report;
        report.add("mv_construction", {-1, -1}, -1, e.what());
        return report;
    }
}

E1Class connecting_delta(const CoverData& c, const E1Class& omega_on_uv)
{
    return MayerVietoris(c).delta(omega_on_uv);
}

RelativePage relative_pages(const CoverData& c, CoverSet w)
{
    return MayerVietoris(c).relative(w);
}

ValidationReport les_pair_check(const CoverData& c, CoverSet w)
{
    MayerVietoris mv(c);
    const RelativePage& rel = mv.relative(w);
    auto e2m = e2_cells(mv.terms(CoverSet::M));
    auto e2w = e2_cells(mv.terms(w));
    const int Q = c.M.Q();

    static const Subquotient empty_cell;
    auto cell_of = [](const std::map<Bidegree, Subquotient>& cells,
                      Bidegree a) -> const Subquotient& {
        auto it = cells.find(a);
        return it == cells.end() ? empty_cell : it->second;
    };

    ValidationReport report;
    std::map<Bidegree, SparseMatrix> map_a, map_b, map_c;
    for (int p = 0; p <= rel.max_p; ++p) {
        for (int q = 0; q <= Q; ++q) {
            Bidegree a{p, q};
            const int dm = rel.m_dims.at(a);
            const int dw = rel.w_dims.at(a);

            SparseMatrix embed(dm + dw, dw);
            for (int i = 0; i < dw; ++i)
                embed.set(dm + i, i, rational(1));
            map_a.emplace(a, induced_map(embed, cell_of(e2w, {p - 1, q}), rel.e2.at(a)));

            SparseMatrix proj(dm, dm + dw);
            for (int i = 0; i < dm; ++i)
                proj.set(i, i, rational(1));
            map_b.emplace(a, induced_map(proj, rel.e2.at(a), cell_of(e2m, a)));

            SparseMatrix rest(0, 0);
            switch (w) {
                case CoverSet::U:
                    rest = mv.i_u(a);
                    break;
                case CoverSet::V:
                    rest = mv.i_v(a);
                    break;
                case CoverSet::M:
                    rest = SparseMatrix::identity(mv.terms(CoverSet::M).dim(a));
                    break;
                case CoverSet::Empty:
                    rest = SparseMatrix(0, mv.terms(CoverSet::M).dim(a));
                    break;
            }
            map_c.emplace(a, induced_map(rest, cell_of(e2m, a), cell_of(e2w, a)));
        }
    }

    auto rank = [](const SparseMatrix& m) { return echelon_form(m).rank(); };
    for (int p = 0; p <= rel.max_p; ++p) {
        for (int q = 0; q <= Q; ++q) {
            Bidegree a{p, q};
            if (!(map_b.at(a) * map_a.at(a)).is_zero())
                report.add("les_node_pair", a, -1, "b ∘ a != 0");
            else if (rank(map_a.at(a)) + rank(map_b.at(a)) != rel.e2.at(a).dim())
                report.add("les_node_pair", a, -1, "im a != ker b at E_2(M,W)");
            if (!(map_c.at(a) * map_b.at(a)).is_zero())
                report.add("les_node_m", a, -1, "c ∘ b != 0");
            else if (rank(map_b.at(a)) + rank(map_c.at(a)) != cell_of(e2m, a).dim())
                report.add("les_node_m", a, -1, "im b != ker c at E_2(M)");
            Bidegree up{p + 1, q};
            if (map_a.count(up)) {
                if (!(map_a.at(up) * map_c.at(a)).is_zero())
                    report.add("les_node_w", a, -1, "a' ∘ c != 0");
                else if (rank(map_c.at(a)) + rank(map_a.at(up)) != cell_of(e2w, a).dim())
                    report.add("les_node_w", a, -1, "im c != ker a' at E_2(W)");
            }
        }
    }
    return report;
}

E1Class MayerVietoris::product(CoverSet where, const E1Class& x, const E1Class& y) const
{
    const E1Terms* t = nullptr;
    const ProductStructure* ps = nullptr;
    switch (where) {
        case CoverSet::M:
            t = &m_;
            ps = &cover_->psM;
            break;
        case CoverSet::U:
            t = &u_;
            ps = &cover_->psU;
            break;
        case CoverSet::V:
            t = &v_;
            ps = &cover_->psV;
            break;
        default:
            throw Error("MayerVietoris::product: bad location");
    }
    E1Class out;
    out.pq = x.pq + y.pq;
    out.coords = zero_vector(t->dim(out.pq));
    if (out.coords.empty())
        return out;
    QVector rx = t->cell(x.pq).rep_combination(x.coords);
    QVector ry = t->cell(y.pq).rep_combination(y.coords);
    QVector prod = ps->mul(t->complex(), x.pq, rx, y.pq, ry);
    if (prod.empty())
        return out;
    out.coords = t->cell(out.pq).project(prod);
    return out;
}

E1Class MayerVietoris::restrict_class(CoverSet from, CoverSet to, const E1Class& x) const
{
    if (from == CoverSet::M && to == CoverSet::U)
        return E1Class{x.pq, i_u(x.pq).apply(x.coords)};
    if (from == CoverSet::M && to == CoverSet::V)
        return E1Class{x.pq, i_v(x.pq).apply(x.coords)};
    throw Error("restrict_class: unsupported pair");
}

RelClass relative_cup_e1(const MayerVietoris& mv, const RelClass& x, const RelClass& y,
                         KoszulConvention convention)
{
    const Bidegree xm = x.pq;               // μ on M
    const Bidegree xw{x.pq.p - 1, x.pq.q};  // α on U
    const Bidegree ym = y.pq;               // ν on M
    const Bidegree yw{y.pq.p - 1, y.pq.q};  // β on V

    E1Class mu{xm, x.mu}, alpha{xw, x.alpha};
    E1Class nu{ym, y.mu}, beta{yw, y.alpha};

    E1Class mu_nu = mv.product(CoverSet::M, mu, nu);

    const Rational eps1 = xm.total() % 2 == 0 ? 1 : -1;
    const Rational eps2 = convention == KoszulConvention::FirstFactorDegree
                              ? eps1
                              : (ym.total() % 2 == 0 ? Rational(1) : Rational(-1));

    E1Class c1 = mv.product(CoverSet::U, alpha, mv.restrict_class(CoverSet::M, CoverSet::U, nu));
    E1Class c2 = mv.product(CoverSet::V, mv.restrict_class(CoverSet::M, CoverSet::V, mu), beta);

    // α|UV ∪ β|UV through the UV algebra
    E1Class c3;
    c3.pq = xw + yw;
    {
        const E1Terms& uv = mv.terms_uv();
        c3.coords = zero_vector(uv.dim(c3.pq));
        if (!c3.coords.empty()) {
            QVector ra = uv.cell(xw).rep_combination(mv.j_u(xw).apply(alpha.coords));
            QVector rb = uv.cell(yw).rep_combination(mv.j_v(yw).apply(beta.coords));
            QVector prod = mv.cover().psUV.mul(mv.cover().UV, xw, ra, yw, rb);
            if (!prod.empty())
                c3.coords = uv.cell(c3.pq).project(prod);
        }
    }

    const Bidegree xi_pq{xm.p + ym.p - 1, xm.q + ym.q};
    QVector xi = mv.left_section_u(xi_pq).apply(c1.coords) +
                 scaled(mv.left_section_v(xi_pq).apply(c2.coords), eps1);
    if (!c3.coords.empty())
        xi = xi + scaled(mv.delta_matrix(c3.pq).apply(c3.coords), eps2);

    RelClass out;
    out.pq = xm + ym;
    out.mu = mu_nu.coords;
    out.alpha = xi;
    out.page = 1;
    return out;
}

RelativeCupResult relative_cup(const MayerVietoris& mv, const RelClass& x, const RelClass& y)
{
    const RelativePage& rel_u = mv.relative(CoverSet::U);
    const RelativePage& rel_v = mv.relative(CoverSet::V);
    const RelativePage& rel_m = mv.relative(CoverSet::M);

    auto cone_vec = [](const RelativePage& rel, const RelClass& z) {
        if (static_cast<int>(z.mu.size()) != rel.m_dim(z.pq) ||
            static_cast<int>(z.alpha.size()) != rel.w_dim(z.pq))
            throw Error("relative_cup: coordinate sizes do not match the cone");
        return concat(z.mu, z.alpha);
    };

    if (!is_zero(rel_u.delta_at(x.pq).apply(cone_vec(rel_u, x))))
        throw Error("relative_cup: first factor is not a δ-cocycle");
    if (!is_zero(rel_v.delta_at(y.pq).apply(cone_vec(rel_v, y))))
        throw Error("relative_cup: second factor is not a δ-cocycle");

    RelClass z = relative_cup_e1(mv, x, y);
    z.page = 2;
    QVector zc = cone_vec(rel_m, z);
    if (!is_zero(rel_m.delta_at(z.pq).apply(zc)))
        throw Error("relative_cup: result fails the δ-cocycle postcondition "
                    "(wrong sign convention)");

    RelativeCupResult out;
    out.pair = z;
    auto cell = rel_m.e2.find(z.pq);
    out.e2_class = cell == rel_m.e2.end() ? QVector{} : cell->second.project(zc);
    auto e2m = e2_cells(mv.terms(CoverSet::M));
    auto it = e2m.find(z.pq);
    out.image_in_e2_m = it == e2m.end() ? QVector{} : it->second.project(z.mu);
    return out;
}

}  // namespace folcup
