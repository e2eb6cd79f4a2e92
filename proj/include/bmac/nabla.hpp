#ifndef BMAC_NABLA_HPP
#define BMAC_NABLA_HPP

#include "bmac/double_macdonald.hpp"

namespace bmac {

// [k]_{q,t} = (q^k - t^k)/(q - t).
RatFunc qt_bracket(int k);
RatFunc qt_binomial_2n_n(int n);

// H~_{lam,mu} = q^{-n(lam')-n(mu')} t^{|mu|+n(mu')} H_{lam,mu}(q, 1/t),
// normalized so the coefficient of s_{(1^n),0} is 1. SS basis; coefficients
// lie in N[q^{+-1}, t^{+-1}].
BiSymPoly h_tilde(const PairLabel& p);

enum class NablaKind { B, BarB, SqrtB };
NablaKind parse_nabla_kind(const std::string& name);

RatFunc nabla_eigenvalue(const PairLabel& p, NablaKind kind);

// Diagonal action on the H~ basis; input must be homogeneous.
BiSymPoly nabla_apply(const BiSymPoly& f, NablaKind kind);

// (qt)^{-C(n,2)} h_n[[n]_{q,t} X + [n+1]_{q,t} Y] expanded in the SS basis:
// sum s_lam[[n]] s_mu[[n+1]] s_{lam,mu}. Equals nabla_apply(s_{0,(n)}, B).
BiSymPoly nabla_on_s_empty_n_closed(int n);

// <nabla^B s_{0,(n)}, s_{0,(n)}>_B = (qt)^{-C(n,2)} [2n over n]_{q,t}.
RatFunc catalan_B_closed(int n);
RatFunc catalan_B_pairing(int n);

// <nabla^B s_{0,(n)}, p_{0,(1^n)}>_B = (([n+1]+[n])/(qt)^{(n-1)/2})^n.
RatFunc dim_pairing_closed(int n);
RatFunc dim_pairing_operator(int n);

// s_lam evaluated at the alphabet [k]_{q,t} (sum of k monomials).
RatFunc schur_at_bracket(const Partition& lam, int k);

}  // namespace bmac

#endif
