#ifndef BMAC_DOUBLE_MACDONALD_HPP
#define BMAC_DOUBLE_MACDONALD_HPP

#include <array>

#include "bmac/bisym.hpp"
#include "bmac/macdonald.hpp"
#include "bmac/plethysm.hpp"

namespace bmac {

// Double Macdonald polynomial P_{lam,mu} via the factorization
// P_lam^{(q,qt)}[X + q(1-t)/(1-qt) Y] P_mu^{(qt,t)}[Y], in the SM basis.
BiSymPoly double_P(const PairLabel& p);

// The defining construction: Gram-Schmidt over the SM basis ordered by pair
// dominance, orthogonal under biscalar_qt. Equal to double_P.
BiSymPoly double_P_oracle(const PairLabel& p);

// b_{lam,mu}(q,t) = q^{-|lam|} b_lam(q,qt) b_mu(qt,t); <<P,P>> = 1/b.
RatFunc double_b_norm(const PairLabel& p);
BiSymPoly double_Q(const PairLabel& p);

// J_{lam,mu} = c_lam(q,qt) c_mu(qt,t) P_{lam,mu}.
BiSymPoly double_J(const PairLabel& p);

// H_{lam,mu} = phi(J), equal to H_lam^{(q,qt)}[X+qY] H_mu^{(qt,t)}[tX+Y];
// returned in the SS basis. Both routes are computed and compared.
BiSymPoly double_H(const PairLabel& p);

// Coefficient of s_{kap,gam} in H_{lam,mu}; lies in N[q,t].
RatFunc double_kostka(const Partition& kap, const Partition& gam, const Partition& lam,
                      const Partition& mu);

// Independent route: the Littlewood-Richardson / one-alphabet Kostka sum.
RatFunc double_kostka_lr_sum(const Partition& kap, const Partition& gam, const Partition& lam,
                             const Partition& mu);

// Closed forms for the four one-dimensional labels, in the order
// ((n),0), (0,(n)), (0,(1^n)), ((1^n),0).
std::array<RatFunc, 4> kostka_specials(const Partition& lam, const Partition& mu);

// The automorphism omega^B_{Q,T}: p_r[X] -> (-1)^r T^r p_r[X],
// p_r[X+Y] -> (-1)^{r-1} (1-Q^{-r})/(1-T^{-r}) p_r[X+Y].
BiSymPoly omega_B(const BiSymPoly& f, const RatFunc& Q, const RatFunc& T);
BiSymPoly omega_B(const BiSymPoly& f);
// (omega^B_{q,t})^{-1} = (q/t)^n omega^B_{1/t,1/q} per degree n.
BiSymPoly omega_B_inverse(const BiSymPoly& f);

// sum over gamma,eta,sigma,tau of
// (-1)^{|tau|} c^gamma_{tau' nu} c^lam_{gamma eta} c^sigma_{eta mu}
// c^om_{sigma tau}; equals delta_{lam nu} delta_{mu om}.
long lr4_identity(const Partition& lam, const Partition& mu, const Partition& nu,
                  const Partition& om);

// E_{N,m}: x_i = t^{i-1}/q^{m-i}, y_i = t^{m+i-1}.
RatFunc evaluate_E_closed(const PairLabel& p, int N, int m);
RatFunc evaluate_E_explicit(const PairLabel& p, int N, int m);

// Kernel identity, degree by degree:
// sum z_{lam,mu}^{-1} p_{lam,mu} x p_{lam,mu} = sum P_{lam,mu} x Q_{lam,mu}.
bool kernel_identity_holds(int degree);

enum class Limit { HL0, HLinf, Schur, BarSchur, Q1, T1, JackSchur };
Limit parse_limit(const std::string& name);
// Specializations of double_P; substitution into reduced coefficients,
// PoleError when a denominator vanishes.
BiSymPoly specialize(const PairLabel& p, Limit which);

// Jack limit, both constructions over Q(alpha):
// product form P_lam^{(a/(a+1))}[X + Y/(a+1)] P_mu^{(a+1)}[Y] and the
// Gram-Schmidt with the alpha scalar product.
BiSymPoly double_jack(const PairLabel& p);
BiSymPoly double_jack_oracle(const PairLabel& p);

}  // namespace bmac

#endif
