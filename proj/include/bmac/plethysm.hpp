#ifndef BMAC_PLETHYSM_HPP
#define BMAC_PLETHYSM_HPP

#include <functional>

#include "bmac/bisym.hpp"
#include "bmac/symfunc.hpp"

namespace bmac {

// Affine two-alphabet expression a(q,t) X + b(q,t) Y + c(q,t). Under p_r the
// coefficients are raised to the r-th power componentwise unless `inert` is
// set (the alpha parameter is untouched by plethysm).
struct AlphabetExpr {
    RatFunc xcoef, ycoef, scalar;
    bool inert = false;

    static AlphabetExpr X(const ParamsPtr& params = Params::qt());
    static AlphabetExpr Y(const ParamsPtr& params = Params::qt());
    static AlphabetExpr XplusY(const ParamsPtr& params = Params::qt());
    static AlphabetExpr make(const RatFunc& x, const RatFunc& y);
};

// p_r[A], expanded in the canonical PP basis.
BiSymPoly pleth_powersum(int r, const AlphabetExpr& A);

// f[A]: linear in f, multiplicative over products.
BiSymPoly pleth_symfunc(const SymPoly& f, const AlphabetExpr& A);

// Evaluation at a pure scalar alphabet: the image of p_r is supplied
// functionally (e.g. r -> (1-u^r)/(1-t^r)).
RatFunc pleth_evaluate(const SymPoly& f, const std::function<RatFunc(int)>& p_image);

// One-alphabet rescaling p_r -> factor(r) p_r (used for X -> X/(1-t)).
SymPoly pleth_scale_powersums(const SymPoly& f, const std::function<RatFunc(int)>& factor);

// The homomorphism fixing the X part and sending p_n[X+Y] to
// p_n[X+Y]/(1-t^n); computed on the SP presentation, returned in SP.
BiSymPoly phi_modify(const BiSymPoly& f);

}  // namespace bmac

#endif
