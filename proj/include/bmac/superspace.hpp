#ifndef BMAC_SUPERSPACE_HPP
#define BMAC_SUPERSPACE_HPP

#include "bmac/double_macdonald.hpp"

namespace bmac {

// Macdonald polynomials indexed by superpartitions, represented through
// their bisymmetric images (SM basis, truncated to m x-variables).
struct SuperMacdonald {
    SuperPartition label;
    BiSymPoly poly;  // SM basis; labels are pairs with len(first) <= m
};

// Gram-Schmidt over the SM basis, labels restricted to superpartitions of the
// same bidegree ordered by super dominance, inner product biscalar_qt at cap
// m. The (-q)^{C(m,2)} super factor scales norms only.
SuperMacdonald super_P(const SuperPartition& L);

// h-down = prod over bosonic boxes of (1 - q^{arm in circled} t^{leg in star + 1});
// h-up(q,t) = h-down of the conjugate with (t,q).
struct HFactors {
    RatFunc down, up;
};
HFactors h_factors(const SuperPartition& L);

// v_Lambda = prod over fermionic boxes of (1 - q^{arm in circled} t^{leg in star + 1}).
RatFunc v_factor(const SuperPartition& L);

BiSymPoly super_J(const SuperPartition& L);
BiSymPoly super_H(const SuperPartition& L);
// Schur superpolynomial s_Lambda = P_Lambda at q = t = 0.
BiSymPoly super_schur(const SuperPartition& L);

// Expansion of f (SM basis, cap m) in the super Schur basis of the bidegree.
std::map<SuperPartition, RatFunc> super_schur_expansion(const BiSymPoly& f, int star_degree, int m);

// Coefficient of s_Omega in H_Lambda.
RatFunc super_kostka(const SuperPartition& Om, const SuperPartition& L);

// psi at m = 1: s_Omega -> s_{Omega-circled}; input indexed by superpartition
// Schur labels, output an ordinary symmetric function in the Schur basis.
SymPoly psi_m1(const std::map<SuperPartition, RatFunc>& schur_coeffs);

// General psi: s_Lambda -> sum over circle-to-box replacements with signs
// (-1)^{# circles above}; fermionic degree drops by one.
std::map<SuperPartition, RatFunc> psi_general(const std::map<SuperPartition, RatFunc>& schur_coeffs);

// Both sides of the fermionic-degree-lowering Kostka relation for (L, Delta):
// v_L sum_{Om : Om-replacement = Delta} (-1)^{#} K_{Om L}
//   = sum_{Gam = L-replacement} (-1)^{#} v_Gam K_{Delta Gam}.
struct KdiffmResult {
    RatFunc lhs, rhs;
    bool holds() const { return lhs == rhs; }
};
KdiffmResult kdiffm_check(const SuperPartition& L, const SuperPartition& Delta);

// Evaluation at x_i = t^{i-1}/q^{max(m-i,0)}: closed form and the explicit
// substitution of the bisymmetric image in N variables.
RatFunc super_evaluation_closed(const SuperPartition& L, int N);
RatFunc super_evaluation_explicit(const SuperPartition& L, int N);

// Monomial expansions of super_P across fermionic degrees; stable (equal as
// maps on pair labels) for all m >= total pair degree.
struct SweepEntry {
    int m;
    BiSymPoly poly;  // SM basis
};
struct SweepResult {
    PairLabel pair;
    std::vector<SweepEntry> entries;
    bool stable_sector_equal;  // all entries with m >= n agree
};
SweepResult stability_sweep(const PairLabel& p, const std::vector<int>& ms);

// Bisymmetric images of the super monomial / power-sum bases.
BiSymPoly super_monomial(const SuperPartition& L);
BiSymPoly super_powersum(const SuperPartition& L);

}  // namespace bmac

#endif
