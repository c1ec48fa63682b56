#ifndef FOLCUP_RELATIVE_HPP
#define FOLCUP_RELATIVE_HPP

#include <optional>

#include "folcup/cover.hpp"

namespace folcup {

/* E_1 in its direct presentation: per bidegree, ker d_0 / im d_0 inside
 * Ω^{p,q}, with the differential induced by the d_1 blocks. This is the
 * presentation all of the Mayer-Vietoris machinery runs on. */
class E1Terms {
public:
    E1Terms() = default;
    explicit E1Terms(const MultiComplex& mc);

    const MultiComplex& complex() const { return *mc_; }
    const Subquotient& cell(Bidegree a) const;
    int dim(Bidegree a) const;
    /// Induced d_1 : E_1^{p,q} → E_1^{p+1,q} (zero-row matrix when p = P).
    const SparseMatrix& d1(Bidegree a) const;

private:
    const MultiComplex* mc_ = nullptr;
    std::map<Bidegree, Subquotient> cells_;
    std::map<Bidegree, SparseMatrix> d1_;
    SparseMatrix empty_;
};

struct E1Class {
    Bidegree pq;
    QVector coords;

    bool is_zero() const { return folcup::is_zero(coords); }
};

/// ker d_1 / im d_1 per bidegree, in E_1 coordinates.
std::map<Bidegree, Subquotient> e2_cells(const E1Terms& t);

enum class CoverSet { U, V, M, Empty };

/* Relative pages of the pair (M, W): the mapping cone
 * E_1^{p,q}(M,W) = E_1^{p,q}(M) ⊕ E_1^{p-1,q}(W) with
 * δ(μ,ω) = (d_1 μ, i*μ - d_1 ω), and E_2(M,W) = H(cone, δ). Cone
 * coordinates put the M part first. */
struct RelativePage {
    CoverSet w = CoverSet::M;
    int max_p = 0;
    std::map<Bidegree, int> m_dims;  // dim E_1^{p,q}(M)
    std::map<Bidegree, int> w_dims;  // dim E_1^{p-1,q}(W)
    std::map<Bidegree, SparseMatrix> delta;
    std::map<Bidegree, Subquotient> e2;

    int m_dim(Bidegree a) const;
    int w_dim(Bidegree a) const;
    int cone_dim(Bidegree a) const;
    const SparseMatrix& delta_at(Bidegree a) const;
};

/* A relative class (μ, α) with μ on M at (p,q) and α on W at (p-1,q), in E_1
 * coordinates; page 2 classes are δ-cocycles. */
struct RelClass {
    Bidegree pq;
    QVector mu;
    QVector alpha;
    int page = 1;
};

/* Koszul sign of the Δ-term of the relative cup product. The chain-map
 * property forces the first-factor convention; the second-factor reading is
 * kept so the sign-search oracle can demonstrate that it fails. */
enum class KoszulConvention { FirstFactorDegree, SecondFactorDegree };
inline constexpr KoszulConvention kRelativeCupConvention = KoszulConvention::FirstFactorDegree;

/* All Mayer-Vietoris data of a cover at the E_1 level: the induced maps of
 * the restrictions, the section S(ω) = (e_U ω, -e_V ω), the left section
 * J = i^{-1}(id - Sπ), and the connecting morphism Δ = i^{-1}(dS - Sd). */
class MayerVietoris {
public:
    explicit MayerVietoris(const CoverData& c);

    const CoverData& cover() const { return *cover_; }
    const E1Terms& terms(CoverSet which) const;
    const E1Terms& terms_uv() const { return uv_; }

    const SparseMatrix& i_u(Bidegree a) const { return at(i_u_, a); }
    const SparseMatrix& i_v(Bidegree a) const { return at(i_v_, a); }
    const SparseMatrix& j_u(Bidegree a) const { return at(j_u_, a); }
    const SparseMatrix& j_v(Bidegree a) const { return at(j_v_, a); }
    const SparseMatrix& s_u(Bidegree a) const { return at(s_u_, a); }
    const SparseMatrix& s_v(Bidegree a) const { return at(s_v_, a); }
    const SparseMatrix& left_section_u(Bidegree a) const { return at(left_u_, a); }
    const SparseMatrix& left_section_v(Bidegree a) const { return at(left_v_, a); }
    const SparseMatrix& delta_matrix(Bidegree a) const { return at(delta_, a); }

    /// Δ[ω] for an E_1 class on U∩V; lands at (p+1, q) on M.
    E1Class delta(const E1Class& omega_on_uv) const;

    /// Exactness of 0 → E_1(M) → E_1(U)⊕E_1(V) → E_1(U∩V) → 0 per bidegree,
    /// with S as the splitting (π∘S = id, S∘d_0 = d_0∘S).
    ValidationReport e1_exactness() const;

    /// Δ = dS - Sd, dJ - Jd = -Δπ, Δd_1 = -d_1Δ, π∘S = id as exact matrix
    /// identities on the E_1 representative bases.
    ValidationReport identity_checks() const;

    const RelativePage& relative(CoverSet w) const;

    /// Product of E_1 classes through representatives (zero off the box).
    E1Class product(CoverSet where, const E1Class& x, const E1Class& y) const;
    E1Class restrict_class(CoverSet from, CoverSet to, const E1Class& x) const;

private:
    static const SparseMatrix& at(const std::map<Bidegree, SparseMatrix>& m, Bidegree a);
    RelativePage build_relative(CoverSet w) const;

    const CoverData* cover_;
    E1Terms m_, u_, v_, uv_;
    MultiComplex empty_complex_;
    E1Terms empty_terms_;
    std::map<Bidegree, SparseMatrix> i_u_, i_v_, j_u_, j_v_, s_u_, s_v_;
    std::map<Bidegree, SparseMatrix> left_u_, left_v_, delta_;
    mutable std::map<CoverSet, RelativePage> relative_;
};

ValidationReport mv_e1_exactness(const CoverData& c);
E1Class connecting_delta(const CoverData& c, const E1Class& omega_on_uv);
RelativePage relative_pages(const CoverData& c, CoverSet w);

/// Exactness of ⋯ → E_2^{p-1,q}(W) → E_2^{p,q}(M,W) → E_2^{p,q}(M) →
/// E_2^{p,q}(W) → ⋯ at every node, by rank bookkeeping.
ValidationReport les_pair_check(const CoverData& c, CoverSet w);

/* E_1-level relative product, Eq. (μ,α)∪(ν,β) = (μ∪ν, ξ) with
 * ξ = J(α∪ν|U, (-1)^{|μ|} μ|V∪β) + s' Δ(α|UV ∪ β|UV); defined on all pairs,
 * so the δ-chain-map identity can be tested directly. */
RelClass relative_cup_e1(const MayerVietoris& mv, const RelClass& x, const RelClass& y,
                         KoszulConvention convention = kRelativeCupConvention);

struct RelativeCupResult {
    RelClass pair;          // δ-cocycle in the cone of (M, U∪V) = (M, M)
    QVector e2_class;       // class in E_2(M,M)
    QVector image_in_e2_m;  // class of μ∪ν in E_2(M), compatibility data
};

/* δ-cocycles in E_2(M,U) × E_2(M,V) → E_2(M, U∪V); rejects non-cocycles,
 * asserts the δ-cocycle postcondition on the output. */
RelativeCupResult relative_cup(const MayerVietoris& mv, const RelClass& x, const RelClass& y);

}  // namespace folcup

#endif
