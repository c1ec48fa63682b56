#include "folcup/cover.hpp"

namespace folcup {

namespace {

std::vector<Bidegree> box_bidegrees(const MultiComplex& m)
{
    std::vector<Bidegree> out;
    for (int p = 0; p <= m.P(); ++p)
        for (int q = 0; q <= m.Q(); ++q)
            out.push_back({p, q});
    return out;
}

}  // namespace

ValidationReport validate_cover(const CoverData& c)
{
    ValidationReport report;

    auto sub = [&](const char* name, const ValidationReport& r) {
        for (const auto& v : r.violations)
            report.add(std::string(name) + "/" + v.check, v.at, v.index, v.detail);
    };

    sub("M", validate(c.M, &c.psM));
    sub("U", validate(c.U, &c.psU));
    sub("V", validate(c.V, &c.psV));
    sub("UV", validate(c.UV, &c.psUV));
    sub("rho_MU", validate_restriction(c.M, c.U, c.rho_MU, &c.psM, &c.psU));
    sub("rho_MV", validate_restriction(c.M, c.V, c.rho_MV, &c.psM, &c.psV));
    sub("rho_UUV", validate_restriction(c.U, c.UV, c.rho_UUV, &c.psU, &c.psUV));
    sub("rho_VUV", validate_restriction(c.V, c.UV, c.rho_VUV, &c.psV, &c.psUV));

    for (Bidegree a : box_bidegrees(c.M)) {
        const int dM = c.M.dim(a), dU = c.U.dim(a), dV = c.V.dim(a), dUV = c.UV.dim(a);

        SparseMatrix mu = c.rho_MU.block_or_zero(c.M, c.U, a);
        SparseMatrix mv = c.rho_MV.block_or_zero(c.M, c.V, a);
        SparseMatrix uuv = c.rho_UUV.block_or_zero(c.U, c.UV, a);
        SparseMatrix vuv = c.rho_VUV.block_or_zero(c.V, c.UV, a);

        if (!(uuv * mu == vuv * mv))
            report.add("cover_square", a, -1, "rho_{U->UV} rho_{M->U} != rho_{V->UV} rho_{M->V}");

        // i = (ρ_MU, ρ_MV) stacked, π = ρ_UUV ⊕ -ρ_VUV.
        SparseMatrix i_map(dU + dV, dM);
        for (const auto& [key, v] : mu.entries())
            i_map.set(key.first, key.second, v);
        for (const auto& [key, v] : mv.entries())
            i_map.set(dU + key.first, key.second, v);
        SparseMatrix pi(dUV, dU + dV);
        for (const auto& [key, v] : uuv.entries())
            pi.set(key.first, key.second, v);
        for (const auto& [key, v] : vuv.entries())
            pi.set(key.first, dU + key.second, -v);

        const int rank_i = echelon_form(i_map).rank();
        const int rank_pi = echelon_form(pi).rank();
        if (rank_i != dM)
            report.add("mv_e0_injective", a, -1, "Ω(M) → Ω(U)⊕Ω(V) is not injective");
        if (rank_pi != dUV)
            report.add("mv_e0_surjective", a, -1, "Ω(U)⊕Ω(V) → Ω(UV) is not onto");
        if (!(pi * i_map).is_zero())
            report.add("mv_e0_composite", a, -1, "π ∘ i != 0");
        else if (dU + dV - rank_pi != rank_i)
            report.add("mv_e0_middle", a, -1, "ker π != im i");

        // Section: ρ_{U→UV} e_U + ρ_{V→UV} e_V = id on Ω(UV).
        SparseMatrix section = uuv * c.e_U.block_or_zero(c.UV, c.U, a) +
                               vuv * c.e_V.block_or_zero(c.UV, c.V, a);
        if (!(section == SparseMatrix::identity(dUV)))
            report.add("partition_section", a, -1, "ρ e_U + ρ e_V != id");

        // Leafwise-constant partitions: e commutes with d_0.
        Bidegree up{a.p, a.q + 1};
        if (c.UV.in_box(up)) {
            SparseMatrix lhs = c.e_U.block_or_zero(c.UV, c.U, up) * c.UV.block_or_zero(0, a);
            SparseMatrix rhs = c.U.block_or_zero(0, a) * c.e_U.block_or_zero(c.UV, c.U, a);
            if (!(lhs == rhs))
                report.add("partition_basic", a, -1, "e_U does not commute with d_0");
            lhs = c.e_V.block_or_zero(c.UV, c.V, up) * c.UV.block_or_zero(0, a);
            rhs = c.V.block_or_zero(0, a) * c.e_V.block_or_zero(c.UV, c.V, a);
            if (!(lhs == rhs))
                report.add("partition_basic", a, -1, "e_V does not commute with d_0");
        }
    }
    return report;
}

}  // namespace folcup
