#include "bmac/plethysm.hpp"

namespace bmac {

AlphabetExpr AlphabetExpr::X(const ParamsPtr& params) {
    return {RatFunc(1, params), RatFunc(0, params), RatFunc(0, params), false};
}
AlphabetExpr AlphabetExpr::Y(const ParamsPtr& params) {
    return {RatFunc(0, params), RatFunc(1, params), RatFunc(0, params), false};
}
AlphabetExpr AlphabetExpr::XplusY(const ParamsPtr& params) {
    return {RatFunc(1, params), RatFunc(1, params), RatFunc(0, params), false};
}
AlphabetExpr AlphabetExpr::make(const RatFunc& x, const RatFunc& y) {
    return {x, y, RatFunc(0, x.params()), false};
}

BiSymPoly pleth_powersum(int r, const AlphabetExpr& A) {
    if (r < 1) throw MathError("p_r needs r >= 1");
    BiSymPoly out(BiBasis::PP);
    RatFunc x = A.inert ? A.xcoef : A.xcoef.frobenius(r);
    RatFunc y = A.inert ? A.ycoef : A.ycoef.frobenius(r);
    RatFunc c = A.inert ? A.scalar : A.scalar.frobenius(r);
    out.add_term({Partition{r}, Partition()}, x);
    out.add_term({Partition(), Partition{r}}, y);
    out.add_term({Partition(), Partition()}, c);
    return out;
}

BiSymPoly pleth_symfunc(const SymPoly& f, const AlphabetExpr& A) {
    SymPoly fp = change_basis(f, OneBasis::P);
    BiSymPoly out(BiBasis::PP);
    for (const auto& [lam, c] : fp.coeffs()) {
        BiSymPoly term = BiSymPoly::one(BiBasis::PP, c.params()).scaled(c);
        for (int r : lam.parts()) term = bisym_multiply(term, pleth_powersum(r, A));
        out = out + term;
    }
    return out;
}

RatFunc pleth_evaluate(const SymPoly& f, const std::function<RatFunc(int)>& p_image) {
    SymPoly fp = change_basis(f, OneBasis::P);
    RatFunc acc;
    bool first = true;
    for (const auto& [lam, c] : fp.coeffs()) {
        RatFunc term = c;
        for (int r : lam.parts()) term *= p_image(r);
        if (first) {
            acc = term;
            first = false;
        } else {
            acc += term;
        }
    }
    if (first) return RatFunc(0);
    return acc;
}

SymPoly pleth_scale_powersums(const SymPoly& f, const std::function<RatFunc(int)>& factor) {
    SymPoly fp = change_basis(f, OneBasis::P);
    SymPoly out(OneBasis::P);
    for (const auto& [lam, c] : fp.coeffs()) {
        RatFunc v = c;
        for (int r : lam.parts()) v *= factor(r);
        out.add_term(lam, v);
    }
    return out;
}

BiSymPoly phi_modify(const BiSymPoly& f) {
    BiSymPoly fs = convert(f, BiBasis::SP);
    ParamsPtr params = fs.params();
    RatFunc one(1, params), t = RatFunc::var("t", params);
    BiSymPoly out(BiBasis::SP);
    for (const auto& [lab, c] : fs.coeffs()) {
        RatFunc v = c;
        for (int r : lab.mu.parts()) v /= one - t.pow(r);
        out.add_term(lab, v);
    }
    return out;
}

}  // namespace bmac
