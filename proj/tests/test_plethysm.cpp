#include "bmac/plethysm.hpp"

#include <random>

#include "doctest.h"

using namespace bmac;

namespace {
RatFunc rf(const std::string& s) { return RatFunc::parse(s); }
PairLabel pl(std::initializer_list<int> a, std::initializer_list<int> b) {
    return PairLabel(Partition(a), Partition(b));
}
}

TEST_CASE("power sums of twisted alphabets") {
    RatFunc q = RatFunc::var("q"), t = RatFunc::var("t"), one(1);
    AlphabetExpr tw = AlphabetExpr::make(one, q * (one - t) / (one - q * t));

    BiSymPoly p2 = pleth_powersum(2, tw);
    CHECK(p2.coeff(pl({2}, {})) == one);
    CHECK(p2.coeff(pl({}, {2})) == rf("q^2*(1-t^2)/(1-q^2*t^2)"));

    // p_r[-X + (X+Y)] = p_r[Y]
    for (int r = 1; r <= 3; ++r) {
        BiSymPoly lhs = pleth_powersum(r, AlphabetExpr::make(-one + one, one));
        CHECK(lhs == pleth_powersum(r, AlphabetExpr::Y()));
    }

    CHECK(pleth_powersum(1, AlphabetExpr::X()) ==
          BiSymPoly::basis_element(BiBasis::PP, pl({1}, {})));
}

TEST_CASE("symmetric function plethysm") {
    RatFunc q = RatFunc::var("q"), one(1);
    AlphabetExpr xqy = AlphabetExpr::make(one, q);

    BiSymPoly s1 = pleth_symfunc(SymPoly::basis_element(OneBasis::S, Partition{1}), xqy);
    CHECK(s1.coeff(pl({1}, {})) == one);
    CHECK(s1.coeff(pl({}, {1})) == q);

    // s_(2)[X+qY]: coefficient of s_(1)[X]s_(1)[Y] equals q c^(2)_{(1)(1)} = q
    BiSymPoly s2 = convert(pleth_symfunc(SymPoly::basis_element(OneBasis::S, Partition{2}), xqy),
                           BiBasis::SS);
    CHECK(s2.coeff(pl({1}, {1})) == q);

    // h_n[Z+W] = sum h_{n-l}[Z] h_l[W] with Z = X, W = Y
    for (int n = 1; n <= 4; ++n) {
        BiSymPoly lhs = pleth_symfunc(SymPoly::basis_element(OneBasis::H, Partition{n}),
                                      AlphabetExpr::XplusY());
        BiSymPoly rhs(BiBasis::PP);
        for (int l = 0; l <= n; ++l) {
            SymPoly hz = l == n ? SymPoly::one(OneBasis::H)
                                : SymPoly::basis_element(OneBasis::H, Partition{n - l});
            SymPoly hw = l == 0 ? SymPoly::one(OneBasis::H)
                                : SymPoly::basis_element(OneBasis::H, Partition{l});
            rhs = rhs + tensor_xy(hz, hw);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("multiplicativity over random inputs") {
    std::mt19937_64 rng(11);
    RatFunc q = RatFunc::var("q"), t = RatFunc::var("t"), one(1);
    AlphabetExpr tw = AlphabetExpr::make(one + t, q);
    auto parts = Partition::all_up_to(3);
    auto random_sym = [&]() {
        SymPoly f(OneBasis::P);
        for (int i = 0; i < 3; ++i) {
            long c = static_cast<long>(rng() % 5) - 2;
            if (c != 0) f.add_term(parts[rng() % parts.size()], RatFunc(c));
        }
        return f;
    };
    for (int trial = 0; trial < 8; ++trial) {
        SymPoly f = random_sym(), g = random_sym();
        CHECK(pleth_symfunc(multiply(f, g), tw) ==
              bisym_multiply(pleth_symfunc(f, tw), pleth_symfunc(g, tw)));
    }
}

TEST_CASE("additivity matches Littlewood-Richardson") {
    // s_nu[X+Y] = sum c^nu_{rho sigma} s_rho[X] s_sigma[Y]
    for (int n = 1; n <= 4; ++n)
        for (const auto& nu : Partition::all(n)) {
            BiSymPoly lhs = convert(pleth_symfunc(SymPoly::basis_element(OneBasis::S, nu),
                                                  AlphabetExpr::XplusY()),
                                    BiBasis::SS);
            for (const auto& [lab, c] : lhs.coeffs()) {
                CHECK(c.is_constant());
                CHECK(c == RatFunc(lr_coeff(nu, lab.lam, lab.mu)));
            }
        }
}

TEST_CASE("scalar evaluation") {
    RatFunc q = RatFunc::var("q"), t = RatFunc::var("t"), one(1);
    ParamsPtr pu = Params::qtu();
    RatFunc uq = RatFunc::var("q", pu), ut = RatFunc::var("t", pu), uu = RatFunc::var("u", pu);
    RatFunc uone(1, pu);
    auto image = [&](int r) { return (uone - uu.pow(r)) / (uone - ut.pow(r)); };

    // p_1 at (1-u)/(1-t)
    CHECK(pleth_evaluate(SymPoly::basis_element(OneBasis::P, Partition{1}, pu), image) ==
          (uone - uu) / (uone - ut));
    // empty product
    CHECK(pleth_evaluate(SymPoly::one(OneBasis::P, pu), image) == uone);
}

TEST_CASE("phi homomorphism") {
    RatFunc t = RatFunc::var("t"), one(1);
    BiSymPoly p1 = BiSymPoly::basis_element(BiBasis::SP, pl({}, {1}));
    CHECK(phi_modify(p1).coeff(pl({}, {1})) == one / (one - t));

    BiSymPoly s1x = BiSymPoly::basis_element(BiBasis::SP, pl({1}, {}));
    CHECK(phi_modify(s1x) == s1x);

    BiSymPoly p21 = BiSymPoly::basis_element(BiBasis::SP, pl({}, {2, 1}));
    CHECK(phi_modify(p21).coeff(pl({}, {2, 1})) ==
          one / ((one - t * t) * (one - t)));

    // algebra homomorphism on products
    BiSymPoly prod = bisym_multiply(p1, p21);
    CHECK(convert(phi_modify(prod), BiBasis::PP) ==
          convert(bisym_multiply(phi_modify(p1), phi_modify(p21)), BiBasis::PP));
}
