#ifndef FOLCUP_COVER_HPP
#define FOLCUP_COVER_HPP

#include "folcup/multicomplex.hpp"

namespace folcup {

/* A saturated two-set cover of M, in the minimal form the Mayer-Vietoris
 * constructions consume: the four complexes with products, the restriction
 * morphisms, and the partition operators e_U = "multiply by φ_V and extend
 * to U", e_V = "multiply by φ_U and extend to V". The section of π is
 * S(ω) = (e_U ω, -e_V ω). */
struct CoverData {
    MultiComplex M, U, V, UV;
    ProductStructure psM, psU, psV, psUV;
    BlockMap rho_MU, rho_MV;    // restrictions M → U, M → V
    BlockMap rho_UUV, rho_VUV;  // restrictions U → UV, V → UV
    BlockMap e_U, e_V;          // partition operators Ω(UV) → Ω(U), Ω(UV) → Ω(V)
};

/* Checks, per bidegree: each complex and restriction validates, the
 * restriction square commutes, 0 → Ω(M) → Ω(U)⊕Ω(V) → Ω(UV) → 0 is exact,
 * ρ_{U→UV} e_U + ρ_{V→UV} e_V = id, and the partition operators commute
 * with d_0 (the leafwise-constant condition). */
ValidationReport validate_cover(const CoverData& c);

}  // namespace folcup

#endif
