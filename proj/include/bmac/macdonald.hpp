#ifndef BMAC_MACDONALD_HPP
#define BMAC_MACDONALD_HPP

#include "bmac/symfunc.hpp"

namespace bmac {

// One-alphabet Macdonald family at parameter expressions (Q,T), which may be
// substituted pairs such as (q,qt) or (qt,t). Results are memoized; the cache
// allows concurrent readers with exclusive insertion, and cached values equal
// recomputation.

// P_lambda: unitriangular in the monomial basis, orthogonal under z_lam(Q,T).
SymPoly macdonald_P(const Partition& lam, const RatFunc& Q, const RatFunc& T);

// b_lam(Q,T) = prod (1-Q^a T^{l+1})/(1-Q^{a+1} T^l) = <P,P>^{-1}.
RatFunc b_norm(const Partition& lam, const RatFunc& Q, const RatFunc& T);

// c_lam(Q,T) = prod (1-Q^a T^{l+1}); J = c_lam P.
RatFunc c_norm(const Partition& lam, const RatFunc& Q, const RatFunc& T);
SymPoly macdonald_J(const Partition& lam, const RatFunc& Q, const RatFunc& T);

// H = J[X/(1-T)], with positive Schur expansion.
SymPoly macdonald_H(const Partition& lam, const RatFunc& Q, const RatFunc& T);

// Coefficient of s_mu in H_lam.
RatFunc kostka_qt(const Partition& mu, const Partition& lam, const RatFunc& Q, const RatFunc& T);

// w_lam(u;Q,T) = prod (T^{l'} - Q^{a'} u)/(1 - Q^a T^{l+1}).
RatFunc evaluation_w(const Partition& lam, const RatFunc& u, const RatFunc& Q, const RatFunc& T);

// Jack polynomials via the alpha-deformed scalar product.
SymPoly jack_P(const Partition& lam, const RatFunc& A);

void clear_macdonald_cache();

}  // namespace bmac

#endif
