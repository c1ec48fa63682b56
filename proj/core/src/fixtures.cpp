#include "folcup/fixtures.hpp"

#include <random>

namespace folcup::fixtures {

namespace {

SparseMatrix kron_with_identity(const SparseMatrix& a, int n)
{
    SparseMatrix out(a.rows() * n, a.cols() * n);
    for (const auto& [key, v] : a.entries())
        for (int j = 0; j < n; ++j)
            out.set(key.first * n + j, key.second * n + j, v);
    return out;
}

/// Lift a base-cochain map to base ⊗ fiber blocks (base transverse, fiber tangential).
BlockMap lift_base_map(const std::map<int, SparseMatrix>& base_blocks, const MultiComplex& src,
                       const MultiComplex& dst, int fiber_q_max,
                       const std::vector<int>& fiber_dims)
{
    BlockMap out;
    for (const auto& [p, m] : base_blocks) {
        for (int q = 0; q <= fiber_q_max; ++q) {
            Bidegree a{p, q};
            if (!src.in_box(a) && !dst.in_box(a))
                continue;
            SparseMatrix block = kron_with_identity(m, fiber_dims[static_cast<std::size_t>(q)]);
            if (!block.is_zero())
                out.blocks.emplace(a, std::move(block));
        }
    }
    return out;
}

std::map<int, SparseMatrix> base_restriction_blocks(const SimplicialComplex& k,
                                                    const SimplicialComplex& l)
{
    std::map<int, SparseMatrix> out;
    for (int d = 0; d <= k.dim(); ++d) {
        SparseMatrix m(l.count(d), k.count(d));
        for (int i = 0; i < l.count(d); ++i) {
            int j = k.index_of(d, l.simplices(d)[static_cast<std::size_t>(i)]);
            if (j < 0)
                throw Error("fixtures: not a subcomplex");
            m.set(i, j, rational(1));
        }
        out.emplace(d, std::move(m));
    }
    return out;
}

}  // namespace

AlgebraModel point_foliation(const SimplicialComplex& k)
{
    return cochain_algebra(k, Placement::Transverse);
}

AlgebraModel point_foliation_torus(int rank, int subdivisions)
{
    if (rank < 1)
        throw Error("point_foliation_torus: rank must be positive");
    AlgebraModel circle = cochain_algebra(SimplicialComplex::circle(subdivisions),
                                          Placement::Transverse);
    AlgebraModel out = circle;
    for (int i = 1; i < rank; ++i)
        out = tensor_product(out, circle);
    return out;
}

AlgebraModel product_bundle(const SimplicialComplex& base, const SimplicialComplex& fiber)
{
    return tensor_product(cochain_algebra(base, Placement::Transverse),
                          cochain_algebra(fiber, Placement::Tangential));
}

AlgebraModel torus_bundle(int base_subdiv, int fiber_subdiv)
{
    return product_bundle(SimplicialComplex::circle(base_subdiv),
                          SimplicialComplex::circle(fiber_subdiv));
}

AlgebraModel hopf_model()
{
    AlgebraModel m;
    m.mc = MultiComplex(2, 1);
    m.mc.set_dim({0, 0}, 1);
    m.mc.set_dim({0, 1}, 1);
    m.mc.set_dim({2, 0}, 1);
    m.mc.set_dim({2, 1}, 1);
    m.mc.set_labels({0, 0}, {"1"});
    m.mc.set_labels({0, 1}, {"y"});
    m.mc.set_labels({2, 0}, {"x"});
    m.mc.set_labels({2, 1}, {"xy"});

    SparseMatrix dy(1, 1);
    dy.set(0, 0, rational(1));
    m.mc.set_block(2, {0, 1}, std::move(dy));  // d(y) = x

    m.ps.set_unit({rational(1)});
    const QVector one = {rational(1)};
    for (Bidegree a : {Bidegree{0, 0}, Bidegree{0, 1}, Bidegree{2, 0}, Bidegree{2, 1}}) {
        m.ps.set_pair(m.mc, {0, 0}, 0, a, 0, one);
        if (a != Bidegree{0, 0})
            m.ps.set_pair(m.mc, a, 0, {0, 0}, 0, one);
    }
    m.ps.set_pair(m.mc, {2, 0}, 0, {0, 1}, 0, one);  // x·y = xy
    m.ps.set_pair(m.mc, {0, 1}, 0, {2, 0}, 0, one);  // y·x = xy
    return m;
}

CoverData torus_cover(int base_subdiv, int fiber_subdiv, const Rational& phi_u_first,
                      const Rational& phi_u_second)
{
    if (base_subdiv < 3 || fiber_subdiv < 3)
        throw Error("torus_cover: circle subdivision counts must be at least 3");
    const int nb = base_subdiv;
    const int cut = nb / 2;  // arcs meet at vertices 0 and cut

    SimplicialComplex base = SimplicialComplex::circle(nb);
    std::vector<SimplicialComplex::Simplex> u_facets, v_facets;
    for (int i = 0; i < cut; ++i)
        u_facets.push_back({i, i + 1});
    for (int i = cut; i < nb; ++i)
        v_facets.push_back({i, (i + 1) % nb});
    SimplicialComplex u_base = SimplicialComplex::from_facets(u_facets);
    SimplicialComplex v_base = SimplicialComplex::from_facets(v_facets);
    SimplicialComplex uv_base = SimplicialComplex::from_facets({{0}, {cut}});

    SimplicialComplex fiber = SimplicialComplex::circle(fiber_subdiv);
    std::vector<int> fdims = {fiber.count(0), fiber.count(1)};

    CoverData c;
    {
        AlgebraModel m = product_bundle(base, fiber);
        c.M = std::move(m.mc);
        c.psM = std::move(m.ps);
    }
    {
        AlgebraModel m = product_bundle(u_base, fiber);
        c.U = std::move(m.mc);
        c.psU = std::move(m.ps);
    }
    {
        AlgebraModel m = product_bundle(v_base, fiber);
        c.V = std::move(m.mc);
        c.psV = std::move(m.ps);
    }
    {
        AlgebraModel m = product_bundle(uv_base, fiber);
        c.UV = std::move(m.mc);
        c.psUV = std::move(m.ps);
    }

    c.rho_MU = lift_base_map(base_restriction_blocks(base, u_base), c.M, c.U, 1, fdims);
    c.rho_MV = lift_base_map(base_restriction_blocks(base, v_base), c.M, c.V, 1, fdims);
    c.rho_UUV = lift_base_map(base_restriction_blocks(u_base, uv_base), c.U, c.UV, 1, fdims);
    c.rho_VUV = lift_base_map(base_restriction_blocks(v_base, uv_base), c.V, c.UV, 1, fdims);

    // e_U multiplies by φ_V on the two cut vertices and extends by zero into
    // U; e_V multiplies by φ_U and extends into V. Vertex-supported, constant
    // along the fiber direction.
    auto partition_block = [&](const SimplicialComplex& target, const Rational& w0,
                               const Rational& w1) {
        SparseMatrix m(target.count(0), 2);
        int t0 = target.index_of(0, {0});
        int t1 = target.index_of(0, {cut});
        if (w0 != 0)
            m.set(t0, 0, w0);
        if (w1 != 0)
            m.set(t1, 1, w1);
        return m;
    };
    const Rational phi_v_first = 1 - phi_u_first;
    const Rational phi_v_second = 1 - phi_u_second;
    std::map<int, SparseMatrix> eu_base, ev_base;
    eu_base.emplace(0, partition_block(u_base, phi_v_first, phi_v_second));
    ev_base.emplace(0, partition_block(v_base, phi_u_first, phi_u_second));
    c.e_U = lift_base_map(eu_base, c.UV, c.U, 1, fdims);
    c.e_V = lift_base_map(ev_base, c.UV, c.V, 1, fdims);
    return c;
}

CoverData trivial_cover(const AlgebraModel& m)
{
    CoverData c;
    c.M = m.mc;
    c.U = m.mc;
    c.V = m.mc;
    c.UV = m.mc;
    c.psM = m.ps;
    c.psU = m.ps;
    c.psV = m.ps;
    c.psUV = m.ps;
    c.rho_MU = BlockMap::identity(m.mc);
    c.rho_MV = BlockMap::identity(m.mc);
    c.rho_UUV = BlockMap::identity(m.mc);
    c.rho_VUV = BlockMap::identity(m.mc);
    c.e_U = BlockMap::scaled_identity(m.mc, Rational(1, 2));
    c.e_V = BlockMap::scaled_identity(m.mc, Rational(1, 2));
    return c;
}

MultiplicationCover multiplication_cover(int base_subdiv, int fiber_subdiv, const QVector& phi_u)
{
    if (static_cast<int>(phi_u.size()) != base_subdiv)
        throw Error("multiplication_cover: one φ_U value per base vertex required");
    SimplicialComplex base = SimplicialComplex::circle(base_subdiv);
    SimplicialComplex fiber = SimplicialComplex::circle(fiber_subdiv);
    std::vector<int> fdims = {fiber.count(0), fiber.count(1)};
    AlgebraModel m = product_bundle(base, fiber);

    QVector phi_v;
    for (const auto& x : phi_u)
        phi_v.push_back(1 - x);

    // AW multiplication by a vertex function: (φ∪x)(σ) = φ(first vertex) x(σ).
    auto mult_blocks = [&](const QVector& phi) {
        std::map<int, SparseMatrix> blocks;
        for (int d = 0; d <= 1; ++d) {
            SparseMatrix block(base.count(d), base.count(d));
            for (int i = 0; i < base.count(d); ++i) {
                int v = base.simplices(d)[static_cast<std::size_t>(i)].front();
                if (phi[static_cast<std::size_t>(v)] != 0)
                    block.set(i, i, phi[static_cast<std::size_t>(v)]);
            }
            blocks.emplace(d, std::move(block));
        }
        return blocks;
    };

    MultiplicationCover out;
    out.cover = trivial_cover(m);
    out.cover.e_U = lift_base_map(mult_blocks(phi_v), out.cover.UV, out.cover.U, 1, fdims);
    out.cover.e_V = lift_base_map(mult_blocks(phi_u), out.cover.UV, out.cover.V, 1, fdims);

    // (δφ_V ∪ x)([v0..v_{p+1}]) = δφ_V([v0,v1]) x([v1..v_{p+1}]).
    std::map<int, SparseMatrix> cup_base;
    {
        SparseMatrix block(base.count(1), base.count(0));
        for (int e = 0; e < base.count(1); ++e) {
            const auto& edge = base.simplices(1)[static_cast<std::size_t>(e)];
            Rational dphi = phi_v[static_cast<std::size_t>(edge[1])] -
                            phi_v[static_cast<std::size_t>(edge[0])];
            int back = base.index_of(0, {edge[1]});
            if (dphi != 0)
                block.set(e, back, dphi);
        }
        cup_base.emplace(0, std::move(block));
    }
    BlockMap lifted = lift_base_map(cup_base, m.mc, m.mc, 1, fdims);
    for (auto& [a, block] : lifted.blocks)
        out.cup_dphi_v.emplace(Bidegree{a.p, a.q}, std::move(block));
    return out;
}

MultiComplex random_multicomplex(std::uint64_t seed, int max_p, int max_q,
                                 int max_dim_per_bidegree)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pair_count(1, 5);
    std::uniform_int_distribution<int> single_count(0, 4);

    MultiComplex mc(max_p, max_q);
    std::map<Bidegree, int> dims;
    struct Arrow {
        int k;
        Bidegree src;
        int src_index, dst_index;
    };
    std::vector<Arrow> arrows;

    // Candidate (k, p, q) with target inside the box.
    std::vector<std::tuple<int, int, int>> slots;
    for (int k = 0; k <= max_p; ++k)
        for (int p = 0; p + k <= max_p; ++p)
            for (int q = 0; q <= max_q; ++q)
                if (q + 1 - k >= 0 && q + 1 - k <= max_q)
                    slots.emplace_back(k, p, q);

    std::uniform_int_distribution<std::size_t> slot_pick(0, slots.empty() ? 0 : slots.size() - 1);
    const int pairs = slots.empty() ? 0 : pair_count(rng);
    for (int t = 0; t < pairs; ++t) {
        auto [k, p, q] = slots[slot_pick(rng)];
        Bidegree src{p, q};
        Bidegree dst = diff_target(src, k);
        if (dims[src] >= max_dim_per_bidegree || dims[dst] >= max_dim_per_bidegree ||
            (src == dst))
            continue;
        arrows.push_back({k, src, dims[src], dims[dst]});
        dims[src] += 1;
        dims[dst] += 1;
    }
    const int singles = single_count(rng);
    std::uniform_int_distribution<int> ppick(0, max_p), qpick(0, max_q);
    for (int t = 0; t < singles; ++t) {
        Bidegree a{ppick(rng), qpick(rng)};
        if (dims[a] < max_dim_per_bidegree)
            dims[a] += 1;
    }

    for (const auto& [a, n] : dims)
        if (n > 0)
            mc.set_dim(a, n);

    std::map<std::pair<int, Bidegree>, SparseMatrix> blocks;
    for (const Arrow& ar : arrows) {
        Bidegree dst = diff_target(ar.src, ar.k);
        auto key = std::make_pair(ar.k, ar.src);
        if (!blocks.count(key))
            blocks.emplace(key, SparseMatrix(mc.dim(dst), mc.dim(ar.src)));
        blocks.at(key).set(ar.dst_index, ar.src_index, rational(1));
    }

    // Unimodular change of basis per bidegree: T from random shears; the
    // inverse applies the opposite shears in reverse order.
    std::uniform_int_distribution<int> shear_val(-2, 2);
    std::uniform_int_distribution<int> shear_count(0, 6);
    std::map<Bidegree, std::pair<SparseMatrix, SparseMatrix>> basis_change;  // (T, T^{-1})
    for (const auto& [a, n] : dims) {
        if (n == 0)
            continue;
        SparseMatrix t = SparseMatrix::identity(n);
        SparseMatrix tinv = SparseMatrix::identity(n);
        const int shears = shear_count(rng);
        std::uniform_int_distribution<int> idx(0, n - 1);
        std::vector<std::tuple<int, int, int>> ops;
        for (int s = 0; s < shears; ++s) {
            int i = idx(rng), j = idx(rng), v = shear_val(rng);
            if (i == j || v == 0)
                continue;
            ops.emplace_back(i, j, v);
            SparseMatrix e = SparseMatrix::identity(n);
            e.set(i, j, rational(v));
            t = e * t;
        }
        for (const auto& op : ops) {  // T = E_m…E_1, so T^{-1} = E_1^{-1}…E_m^{-1}
            auto [i, j, v] = op;
            SparseMatrix e = SparseMatrix::identity(n);
            e.set(i, j, rational(-v));
            tinv = tinv * e;
        }
        basis_change.emplace(a, std::make_pair(std::move(t), std::move(tinv)));
    }

    for (auto& [key, block] : blocks) {
        Bidegree src = key.second;
        Bidegree dst = diff_target(src, key.first);
        SparseMatrix conj = basis_change.at(dst).first * block * basis_change.at(src).second;
        mc.set_block(key.first, src, std::move(conj));
    }
    return mc;
}

}  // namespace folcup::fixtures
