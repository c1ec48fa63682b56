#include "folcup/multicomplex.hpp"
#include "folcup/parallel.hpp"

namespace folcup {

namespace {

std::string idx_pair(Bidegree a, int i, Bidegree b, int j)
{
    return folcup::to_string(a) + "#" + std::to_string(i) + " * " + folcup::to_string(b) + "#" +
           std::to_string(j);
}

int first_nonzero_col(const SparseMatrix& m)
{
    int best = -1;
    for (const auto& [key, v] : m.entries()) {
        (void)v;
        if (best < 0 || key.second < best)
            best = key.second;
    }
    return best;
}

/// e_i at bidegree a times a vector y at bidegree b.
QVector mul_basis_left(const MultiComplex& mc, const ProductStructure& ps, Bidegree a, int i,
                       Bidegree b, const QVector& y)
{
    QVector x = zero_vector(mc.dim(a));
    x[static_cast<std::size_t>(i)] = 1;
    return ps.mul(mc, a, x, b, y);
}

QVector mul_basis_right(const MultiComplex& mc, const ProductStructure& ps, Bidegree a,
                        const QVector& x, Bidegree b, int j)
{
    QVector y = zero_vector(mc.dim(b));
    y[static_cast<std::size_t>(j)] = 1;
    return ps.mul(mc, a, x, b, y);
}

void check_d_squared(const MultiComplex& mc, ValidationReport& report)
{
    const int kmax = mc.max_k();
    for (const auto& [a, da] : mc.dims()) {
        (void)da;
        for (int n = 0; n <= 2 * kmax; ++n) {
            Bidegree target{a.p + n, a.q + 2 - n};
            if (!mc.in_box(target) || mc.dim(target) == 0)
                continue;
            SparseMatrix sum(mc.dim(target), mc.dim(a));
            for (int j = 0; j <= n; ++j) {
                const int i = n - j;
                Bidegree mid = diff_target(a, j);
                if (!mc.in_box(mid))
                    continue;
                sum = sum + mc.block_or_zero(i, mid) * mc.block_or_zero(j, a);
            }
            if (!sum.is_zero())
                report.add("d_squared", a, first_nonzero_col(sum),
                           "sum_{i+j=" + std::to_string(n) + "} d_i d_j != 0 into " +
                               folcup::to_string(target));
        }
    }
}

void check_unit(const MultiComplex& mc, const ProductStructure& ps, ValidationReport& report)
{
    if (static_cast<int>(ps.unit().size()) != mc.dim({0, 0})) {
        report.add("unit", {0, 0}, -1, "unit vector length does not match dim(0,0)");
        return;
    }
    for (const auto& [a, d] : mc.dims()) {
        for (int i = 0; i < d; ++i) {
            QVector e = zero_vector(d);
            e[static_cast<std::size_t>(i)] = 1;
            QVector left = ps.mul(mc, {0, 0}, ps.unit(), a, e);
            QVector right = ps.mul(mc, a, e, {0, 0}, ps.unit());
            if (left != e)
                report.add("unit", a, i, "unit * e != e");
            if (right != e)
                report.add("unit", a, i, "e * unit != e");
        }
    }
}

void check_associativity(const MultiComplex& mc, const ProductStructure& ps,
                         ValidationReport& report)
{
    std::vector<Bidegree> degs;
    for (const auto& [a, d] : mc.dims())
        if (d > 0)
            degs.push_back(a);

    auto check_triple = [&](Bidegree a, int i, Bidegree b, int j, Bidegree c, int k,
                            ValidationReport& out) {
        QVector ej = zero_vector(mc.dim(b));
        ej[static_cast<std::size_t>(j)] = 1;
        QVector ab = mul_basis_left(mc, ps, a, i, b, ej);
        QVector lhs = ab.empty() ? QVector{} : mul_basis_right(mc, ps, a + b, ab, c, k);
        QVector bc = mul_basis_right(mc, ps, b, ej, c, k);
        QVector rhs = bc.empty() ? QVector{} : mul_basis_left(mc, ps, a, i, b + c, bc);
        bool lz = lhs.empty() || is_zero(lhs);
        bool rz = rhs.empty() || is_zero(rhs);
        if (lz && rz)
            return;
        if (lhs != rhs)
            out.add("associativity", a, i,
                    "(" + idx_pair(a, i, b, j) + ") * " + folcup::to_string(c) + "#" +
                        std::to_string(k) + " differs from the right-bracketed product");
    };

    std::vector<std::tuple<Bidegree, Bidegree, Bidegree>> triples;
    for (Bidegree a : degs)
        for (Bidegree b : degs)
            for (Bidegree c : degs)
                if (mc.in_box(a + b + c))
                    triples.emplace_back(a, b, c);

    std::vector<ValidationReport> chunks(triples.size());
    parallel_for(triples.size(), [&](std::size_t idx) {
        auto [a, b, c] = triples[idx];
        auto it_ab = ps.blocks().find({a, b});
        auto it_bc = ps.blocks().find({b, c});
        if (it_ab != ps.blocks().end())
            for (const auto& [ij, v] : it_ab->second) {
                (void)v;
                for (int k = 0; k < mc.dim(c); ++k)
                    check_triple(a, ij.first, b, ij.second, c, k, chunks[idx]);
            }
        if (it_bc != ps.blocks().end())
            for (const auto& [jk, v] : it_bc->second) {
                (void)v;
                for (int i = 0; i < mc.dim(a); ++i) {
                    if (it_ab != ps.blocks().end() && it_ab->second.count({i, jk.first}))
                        continue;  // already covered above
                    check_triple(a, i, b, jk.first, c, jk.second, chunks[idx]);
                }
            }
    });
    for (const auto& chunk : chunks)
        report.merge(chunk);
}

void check_leibniz(const MultiComplex& mc, const ProductStructure& ps, ValidationReport& report)
{
    std::vector<int> ks;
    for (const auto& [k, blocks] : mc.diff()) {
        (void)blocks;
        ks.push_back(k);
    }
    std::vector<std::pair<Bidegree, Bidegree>> pairs;
    for (const auto& [a, da] : mc.dims()) {
        (void)da;
        for (const auto& [b, db] : mc.dims()) {
            (void)db;
            pairs.emplace_back(a, b);
        }
    }
    std::vector<ValidationReport> chunks(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t idx) {
        const auto& [a, b] = pairs[idx];
        ValidationReport& out = chunks[idx];
        const int da = mc.dim(a);
        const int db = mc.dim(b);
        const Rational sign = (a.total() % 2 == 0) ? 1 : -1;
        {
            for (int k : ks) {
                Bidegree target = diff_target(a + b, k);
                if (!mc.in_box(target) || mc.dim(target) == 0)
                    continue;
                auto dka = mc.block_or_zero(k, a).dense_columns();
                auto dkb = mc.block_or_zero(k, b).dense_columns();
                const Bidegree a_shift = diff_target(a, k);
                const Bidegree b_shift = diff_target(b, k);
                const SparseMatrix d_ab = mc.block_or_zero(k, a + b);
                for (int i = 0; i < da; ++i) {
                    for (int j = 0; j < db; ++j) {
                        QVector ej = zero_vector(db);
                        ej[static_cast<std::size_t>(j)] = 1;
                        QVector lhs = zero_vector(mc.dim(target));
                        if (mc.in_box(a + b)) {
                            if (const QVector* prod = ps.pair(a, i, b, j))
                                lhs = d_ab.apply(*prod);
                        }
                        QVector rhs = zero_vector(mc.dim(target));
                        if (mc.in_box(a_shift) && !is_zero(dka[static_cast<std::size_t>(i)])) {
                            QVector t = ps.mul(mc, a_shift, dka[static_cast<std::size_t>(i)], b, ej);
                            if (!t.empty())
                                rhs = rhs + t;
                        }
                        if (mc.in_box(b_shift) && !is_zero(dkb[static_cast<std::size_t>(j)])) {
                            QVector t =
                                mul_basis_left(mc, ps, a, i, b_shift, dkb[static_cast<std::size_t>(j)]);
                            if (!t.empty())
                                rhs = rhs + scaled(t, sign);
                        }
                        if (lhs != rhs)
                            out.add("leibniz", a, i,
                                    "d_" + std::to_string(k) + "(" + idx_pair(a, i, b, j) +
                                        ") breaks the total-degree Leibniz rule");
                    }
                }
            }
        }
    });
    for (const auto& chunk : chunks)
        report.merge(chunk);
}

}  // namespace

ValidationReport validate(const MultiComplex& mc, const ProductStructure* ps)
{
    ValidationReport report;
    check_d_squared(mc, report);
    if (ps) {
        check_unit(mc, *ps, report);
        check_associativity(mc, *ps, report);
        check_leibniz(mc, *ps, report);
    }
    return report;
}

ValidationReport validate_restriction(const MultiComplex& src, const MultiComplex& dst,
                                      const BlockMap& rho, const ProductStructure* ps_src,
                                      const ProductStructure* ps_dst)
{
    ValidationReport report;
    for (const auto& [a, m] : rho.blocks)
        if (m.cols() != src.dim(a) || m.rows() != dst.dim(a))
            report.add("restriction_shape", a, -1, "block shape mismatch");
    if (!report.ok())
        return report;

    std::vector<int> ks;
    for (const auto& [k, blocks] : src.diff()) {
        (void)blocks;
        ks.push_back(k);
    }
    for (const auto& [k, blocks] : dst.diff()) {
        (void)blocks;
        if (std::find(ks.begin(), ks.end(), k) == ks.end())
            ks.push_back(k);
    }
    for (const auto& [a, d] : src.dims()) {
        (void)d;
        for (int k : ks) {
            Bidegree t = diff_target(a, k);
            if (!src.in_box(t) && !dst.in_box(t))
                continue;
            SparseMatrix lhs = rho.block_or_zero(src, dst, t) * src.block_or_zero(k, a);
            SparseMatrix rhs = dst.block_or_zero(k, a) * rho.block_or_zero(src, dst, a);
            if (!(lhs == rhs))
                report.add("restriction_chain_map", a, first_nonzero_col(lhs - rhs),
                           "does not commute with d_" + std::to_string(k));
        }
    }

    if (ps_src && ps_dst) {
        if (!(rho.apply(src, dst, {0, 0}, ps_src->unit()) == ps_dst->unit()))
            report.add("restriction_unit", {0, 0}, -1, "unit is not preserved");
        for (const auto& [a, da] : src.dims()) {
            for (const auto& [b, db] : src.dims()) {
                if (!src.in_box(a + b))
                    continue;
                for (int i = 0; i < da; ++i) {
                    QVector ei = zero_vector(da);
                    ei[static_cast<std::size_t>(i)] = 1;
                    QVector ri = rho.apply(src, dst, a, ei);
                    for (int j = 0; j < db; ++j) {
                        QVector ej = zero_vector(db);
                        ej[static_cast<std::size_t>(j)] = 1;
                        QVector prod = ps_src->mul(src, a, ei, b, ej);
                        QVector lhs = rho.apply(src, dst, a + b, prod);
                        QVector rj = rho.apply(src, dst, b, ej);
                        QVector rhs = ps_dst->mul(dst, a, ri, b, rj);
                        if (lhs != rhs)
                            report.add("restriction_multiplicative", a, i,
                                       "rho(" + idx_pair(a, i, b, j) + ") != rho*rho");
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace folcup
