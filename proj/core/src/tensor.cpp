#include "folcup/multicomplex.hpp"

namespace folcup {

namespace {

/* Index layout of the tensor complex: basis of Ω^{c} is the union over
 * splittings c = da + db of the pairs (i, j), ordered by da then (i, j). */
struct TensorLayout {
    const MultiComplex* A;
    const MultiComplex* B;

    struct Part {
        Bidegree da, db;
        int offset;
    };
    std::map<Bidegree, std::vector<Part>> parts;
    std::map<Bidegree, int> dims;

    TensorLayout(const MultiComplex& a, const MultiComplex& b) : A(&a), B(&b)
    {
        for (const auto& [da, na] : a.dims()) {
            for (const auto& [db, nb] : b.dims()) {
                Bidegree c = da + db;
                auto& list = parts[c];
                int off = dims.count(c) ? dims[c] : 0;
                list.push_back({da, db, off});
                dims[c] = off + na * nb;
            }
        }
    }

    int index(Bidegree da, int i, Bidegree db, int j) const
    {
        const auto& list = parts.at(da + db);
        for (const auto& part : list)
            if (part.da == da && part.db == db)
                return part.offset + i * B->dim(db) + j;
        throw Error("tensor: missing layout part");
    }
};

}  // namespace

AlgebraModel tensor_product(const AlgebraModel& a, const AlgebraModel& b)
{
    const MultiComplex& A = a.mc;
    const MultiComplex& B = b.mc;
    TensorLayout layout(A, B);

    AlgebraModel out;
    out.mc = MultiComplex(A.P() + B.P(), A.Q() + B.Q());
    for (const auto& [c, n] : layout.dims)
        out.mc.set_dim(c, n);

    // Labels, purely cosmetic.
    for (const auto& [c, list] : layout.parts) {
        std::vector<std::string> names(static_cast<std::size_t>(layout.dims.at(c)));
        for (const auto& part : list)
            for (int i = 0; i < A.dim(part.da); ++i)
                for (int j = 0; j < B.dim(part.db); ++j)
                    names[static_cast<std::size_t>(layout.index(part.da, i, part.db, j))] =
                        A.label(part.da, i) + "*" + B.label(part.db, j);
        out.mc.set_labels(c, std::move(names));
    }

    // d_k(x ⊗ y) = d_k x ⊗ y + (-1)^{|x|} x ⊗ d_k y.
    std::vector<int> ks;
    for (const auto& [k, blocks] : A.diff()) {
        (void)blocks;
        ks.push_back(k);
    }
    for (const auto& [k, blocks] : B.diff()) {
        (void)blocks;
        if (std::find(ks.begin(), ks.end(), k) == ks.end())
            ks.push_back(k);
    }
    for (int k : ks) {
        std::map<Bidegree, SparseMatrix> acc;
        for (const auto& [c, list] : layout.parts) {
            Bidegree target = diff_target(c, k);
            if (!out.mc.in_box(target) || !layout.dims.count(target))
                continue;
            SparseMatrix m(layout.dims.at(target), layout.dims.at(c));
            for (const auto& part : list) {
                const Bidegree da_shift = diff_target(part.da, k);
                const Bidegree db_shift = diff_target(part.db, k);
                const Rational sign = (part.da.total() % 2 == 0) ? 1 : -1;
                if (A.in_box(da_shift)) {
                    if (const SparseMatrix* da_block = A.block(k, part.da))
                        for (const auto& [key, v] : da_block->entries())
                            for (int j = 0; j < B.dim(part.db); ++j)
                                m.add_to(layout.index(da_shift, key.first, part.db, j),
                                         layout.index(part.da, key.second, part.db, j), v);
                }
                if (B.in_box(db_shift)) {
                    if (const SparseMatrix* db_block = B.block(k, part.db))
                        for (const auto& [key, v] : db_block->entries())
                            for (int i = 0; i < A.dim(part.da); ++i)
                                m.add_to(layout.index(part.da, i, db_shift, key.first),
                                         layout.index(part.da, i, part.db, key.second), sign * v);
                }
            }
            if (!m.is_zero())
                acc.emplace(c, std::move(m));
        }
        for (auto& [c, m] : acc)
            out.mc.set_block(k, c, std::move(m));
    }

    // (x ⊗ y)(x' ⊗ y') = (-1)^{|y| |x'|} (x x') ⊗ (y y').
    for (const auto& [keyA, tableA] : a.ps.blocks()) {
        const auto& [da, da2] = keyA;
        for (const auto& [keyB, tableB] : b.ps.blocks()) {
            const auto& [db, db2] = keyB;
            const Rational sign = (db.total() * da2.total()) % 2 == 0 ? 1 : -1;
            Bidegree lhs = da + db, rhs = da2 + db2;
            Bidegree tgtA = da + da2, tgtB = db + db2;
            for (const auto& [ii2, va] : tableA) {
                for (const auto& [jj2, vb] : tableB) {
                    QVector value = zero_vector(layout.dims.at(tgtA + tgtB));
                    for (std::size_t s = 0; s < va.size(); ++s) {
                        if (va[s] == 0)
                            continue;
                        for (std::size_t t = 0; t < vb.size(); ++t) {
                            if (vb[t] == 0)
                                continue;
                            value[static_cast<std::size_t>(layout.index(
                                tgtA, static_cast<int>(s), tgtB, static_cast<int>(t)))] =
                                sign * va[s] * vb[t];
                        }
                    }
                    out.ps.set_pair(out.mc, lhs, layout.index(da, ii2.first, db, jj2.first), rhs,
                                    layout.index(da2, ii2.second, db2, jj2.second),
                                    std::move(value));
                }
            }
        }
    }

    QVector unit = zero_vector(layout.dims.count({0, 0}) ? layout.dims.at({0, 0}) : 0);
    for (std::size_t i = 0; i < a.ps.unit().size(); ++i)
        for (std::size_t j = 0; j < b.ps.unit().size(); ++j)
            unit[static_cast<std::size_t>(layout.index({0, 0}, static_cast<int>(i), {0, 0},
                                                       static_cast<int>(j)))] =
                a.ps.unit()[i] * b.ps.unit()[j];
    out.ps.set_unit(std::move(unit));
    return out;
}

MultiComplex direct_sum(const MultiComplex& a, const MultiComplex& b)
{
    MultiComplex out(std::max(a.P(), b.P()), std::max(a.Q(), b.Q()));
    auto dim_a = [&](Bidegree c) { return a.in_box(c) ? a.dim(c) : 0; };
    auto dim_b = [&](Bidegree c) { return b.in_box(c) ? b.dim(c) : 0; };
    for (int p = 0; p <= out.P(); ++p)
        for (int q = 0; q <= out.Q(); ++q)
            out.set_dim({p, q}, dim_a({p, q}) + dim_b({p, q}));

    std::vector<int> ks;
    for (const auto& [k, blocks] : a.diff()) {
        (void)blocks;
        ks.push_back(k);
    }
    for (const auto& [k, blocks] : b.diff()) {
        (void)blocks;
        if (std::find(ks.begin(), ks.end(), k) == ks.end())
            ks.push_back(k);
    }
    for (int k : ks) {
        for (int p = 0; p <= out.P(); ++p) {
            for (int q = 0; q <= out.Q(); ++q) {
                Bidegree c{p, q};
                Bidegree t = diff_target(c, k);
                if (!out.in_box(t) || out.dim(c) == 0 || out.dim(t) == 0)
                    continue;
                SparseMatrix m(out.dim(t), out.dim(c));
                if (a.in_box(c) && a.in_box(t))
                    if (const SparseMatrix* ba = a.block(k, c))
                        for (const auto& [key, v] : ba->entries())
                            m.set(key.first, key.second, v);
                if (b.in_box(c) && b.in_box(t))
                    if (const SparseMatrix* bb = b.block(k, c))
                        for (const auto& [key, v] : bb->entries())
                            m.set(dim_a(t) + key.first, dim_a(c) + key.second, v);
                if (!m.is_zero())
                    out.set_block(k, c, std::move(m));
            }
        }
    }
    return out;
}

}  // namespace folcup
