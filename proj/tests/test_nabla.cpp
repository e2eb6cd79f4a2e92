#include "bmac/nabla.hpp"

#include "doctest.h"

using namespace bmac;

namespace {
RatFunc rf(const std::string& s) { return RatFunc::parse(s); }
PairLabel pl(std::initializer_list<int> a, std::initializer_list<int> b) {
    return PairLabel(Partition(a), Partition(b));
}
}

TEST_CASE("normalized modified polynomials") {
    RatFunc one(1);
    BiSymPoly h10 = h_tilde(pl({1}, {}));
    CHECK(h10.coeff(pl({1}, {})) == one);
    BiSymPoly h01 = h_tilde(pl({}, {1}));
    CHECK(h01.coeff(pl({1}, {})) == one);
    // Laurent positivity through degree 3
    for (int n = 1; n <= 3; ++n)
        for (const auto& p : PairLabel::all(n)) {
            BiSymPoly ht = h_tilde(p);
            for (const auto& [lab, c] : ht.coeffs()) CHECK(c.is_nonneg_laurent());
        }
}

TEST_CASE("eigenvalues") {
    RatFunc q = RatFunc::var("q"), t = RatFunc::var("t");
    CHECK(nabla_eigenvalue(pl({1}, {}), NablaKind::B) == q);
    CHECK(nabla_eigenvalue(pl({}, {1}), NablaKind::B) == t);
    CHECK(nabla_eigenvalue(pl({}, {1}), NablaKind::SqrtB) == t);
    CHECK(nabla_eigenvalue(pl({1}, {}), NablaKind::SqrtB) == q);

    BiSymPoly h10 = h_tilde(pl({1}, {}));
    CHECK(nabla_apply(h10, NablaKind::B) == h10.scaled(q));
    BiSymPoly h01 = h_tilde(pl({}, {1}));
    CHECK(nabla_apply(h01, NablaKind::SqrtB) == h01.scaled(t));

    // nabla bar-nabla has eigenvalue q^{2|lam|} t^{2|mu|}
    for (const auto& p : PairLabel::all(2)) {
        BiSymPoly ht = h_tilde(p);
        BiSymPoly both = nabla_apply(nabla_apply(ht, NablaKind::BarB), NablaKind::B);
        CHECK(both == ht.scaled(q.pow(2 * p.lam.degree()) * t.pow(2 * p.mu.degree())));
    }
}

TEST_CASE("closed action on s_{0,(n)}") {
    RatFunc q = RatFunc::var("q"), t = RatFunc::var("t"), one(1);
    BiSymPoly n1 = nabla_on_s_empty_n_closed(1);
    CHECK(n1.coeff(pl({1}, {})) == one);
    CHECK(n1.coeff(pl({}, {1})) == q + t);

    for (int n = 1; n <= 2; ++n) {
        BiSymPoly closed = nabla_on_s_empty_n_closed(n);
        BiSymPoly viaop = nabla_apply(
            BiSymPoly::basis_element(BiBasis::SS, pl({}, {n})), NablaKind::B);
        CHECK(closed == viaop);
    }

    // sign coefficient equals 1 for n <= 4
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> ones(static_cast<size_t>(n), 1);
        CHECK(nabla_on_s_empty_n_closed(n).coeff({Partition(ones), Partition()}) == one);
    }
}

TEST_CASE("catalan pairing") {
    RatFunc q = RatFunc::var("q"), t = RatFunc::var("t");
    CHECK(catalan_B_closed(1) == q + t);
    CHECK(catalan_B_pairing(1) == q + t);
    RatFunc c2 = catalan_B_closed(2);
    CHECK(c2.substitute({{"q", RatFunc(1)}, {"t", RatFunc(1)}}) == RatFunc(6));
    CHECK(catalan_B_pairing(2) == c2);
}

TEST_CASE("dimension pairing") {
    auto at11 = [](const RatFunc& v) {
        return v.substitute({{"q", RatFunc(1)}, {"t", RatFunc(1)}});
    };
    CHECK(at11(dim_pairing_closed(1)) == RatFunc(3));
    CHECK(at11(dim_pairing_closed(2)) == RatFunc(25));
    CHECK(dim_pairing_operator(1) == dim_pairing_closed(1));
    CHECK(dim_pairing_operator(2) == dim_pairing_closed(2));
}

TEST_CASE("brackets") {
    RatFunc q = RatFunc::var("q"), t = RatFunc::var("t");
    CHECK(qt_bracket(1) == RatFunc(1));
    CHECK(qt_bracket(2) == q + t);
    CHECK(qt_bracket(3) == q * q + q * t + t * t);
    CHECK(schur_at_bracket(Partition{1}, 2) == q + t);
    // s_{(1,1)}[[2]] = e_2 of {q,t} = qt
    CHECK(schur_at_bracket(Partition{1, 1}, 2) == q * t);
    CHECK(schur_at_bracket(Partition{1, 1, 1}, 2).is_zero());
}
