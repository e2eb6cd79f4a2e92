#include "bmac/double_macdonald.hpp"

#include <algorithm>
#include <mutex>

namespace bmac {

namespace {

RatFunc q_var() { return RatFunc::var("q"); }
RatFunc t_var() { return RatFunc::var("t"); }

std::map<PairLabel, BiSymPoly> g_P_cache;
std::map<PairLabel, BiSymPoly> g_H_cache;
std::mutex g_cache_mutex;

// The plethystic twist X + q(1-t)/(1-qt) Y.
AlphabetExpr twisted_alphabet() {
    RatFunc q = q_var(), t = t_var(), one(1);
    return AlphabetExpr::make(one, q * (one - t) / (one - q * t));
}

}  // namespace

BiSymPoly double_P(const PairLabel& p) {
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_P_cache.find(p);
        if (it != g_P_cache.end()) return it->second;
    }
    RatFunc q = q_var(), t = t_var();
    SymPoly Pl = macdonald_P(p.lam, q, q * t);
    SymPoly Pm = macdonald_P(p.mu, q * t, t);
    BiSymPoly f = bisym_multiply(pleth_symfunc(Pl, twisted_alphabet()),
                                 pleth_symfunc(Pm, AlphabetExpr::Y()));
    BiSymPoly out = convert(f, BiBasis::SM);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_P_cache.emplace(p, out);
    return out;
}

BiSymPoly double_P_oracle(const PairLabel& p) {
    auto desc = pair_labels_descending(p.total_degree());
    std::vector<PairLabel> asc(desc.rbegin(), desc.rend());
    std::vector<BiSymPoly> basis;
    basis.reserve(asc.size());
    for (const auto& lab : asc) basis.push_back(BiSymPoly::basis_element(BiBasis::SM, lab));
    size_t target = 0;
    while (target < asc.size() && !(asc[target] == p)) ++target;
    if (target == asc.size()) throw MathError("pair label not found");
    auto rows = gram_schmidt(target + 1,
                             [&](size_t i, size_t j) { return biscalar_qt(basis[i], basis[j]); });
    BiSymPoly out(BiBasis::SM);
    for (const auto& [i, c] : rows[target]) out.add_term(asc[i], c);
    return out;
}

RatFunc double_b_norm(const PairLabel& p) {
    RatFunc q = q_var(), t = t_var();
    return q.pow(-p.lam.degree()) * b_norm(p.lam, q, q * t) * b_norm(p.mu, q * t, t);
}

BiSymPoly double_Q(const PairLabel& p) { return double_P(p).scaled(double_b_norm(p)); }

BiSymPoly double_J(const PairLabel& p) {
    RatFunc q = q_var(), t = t_var();
    return double_P(p).scaled(c_norm(p.lam, q, q * t) * c_norm(p.mu, q * t, t));
}

BiSymPoly double_H(const PairLabel& p) {
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_H_cache.find(p);
        if (it != g_H_cache.end()) return it->second;
    }
    RatFunc q = q_var(), t = t_var(), one(1);
    BiSymPoly via_phi = convert(phi_modify(double_J(p)), BiBasis::SS);
    SymPoly Hl = macdonald_H(p.lam, q, q * t);
    SymPoly Hm = macdonald_H(p.mu, q * t, t);
    BiSymPoly via_product =
        convert(bisym_multiply(pleth_symfunc(Hl, AlphabetExpr::make(one, q)),
                               pleth_symfunc(Hm, AlphabetExpr::make(t, one))),
                BiBasis::SS);
    if (!(via_phi == via_product)) throw MathError("double H: phi route disagrees with product route");
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_H_cache.emplace(p, via_phi);
    return via_phi;
}

RatFunc double_kostka(const Partition& kap, const Partition& gam, const Partition& lam,
                      const Partition& mu) {
    if (kap.degree() + gam.degree() != lam.degree() + mu.degree())
        throw MathError("double Kostka labels need equal total degrees");
    return double_H({lam, mu}).coeff({kap, gam});
}

RatFunc double_kostka_lr_sum(const Partition& kap, const Partition& gam, const Partition& lam,
                             const Partition& mu) {
    if (kap.degree() + gam.degree() != lam.degree() + mu.degree())
        throw MathError("double Kostka labels need equal total degrees");
    RatFunc q = q_var(), t = t_var();
    RatFunc acc(0);
    int nk = kap.degree(), ng = gam.degree();
    for (const auto& nu : Partition::all(lam.degree())) {
        RatFunc Knu = kostka_qt(nu, lam, q, q * t);
        if (Knu.is_zero()) continue;
        for (const auto& om : Partition::all(mu.degree())) {
            RatFunc Kom = kostka_qt(om, mu, q * t, t);
            if (Kom.is_zero()) continue;
            for (int asz = std::max(0, nu.degree() - ng); asz <= std::min(nu.degree(), nk); ++asz) {
                int bsz = nu.degree() - asz;
                int rsz = nk - asz;
                int ssz = om.degree() - rsz;
                if (rsz < 0 || ssz < 0 || bsz + ssz != ng) continue;
                for (const auto& al : Partition::all(asz))
                    for (const auto& be : Partition::all(bsz)) {
                        long c1 = lr_coeff(nu, al, be);
                        if (c1 == 0) continue;
                        for (const auto& rho : Partition::all(rsz))
                            for (const auto& sig : Partition::all(ssz)) {
                                long c2 = lr_coeff(om, rho, sig);
                                if (c2 == 0) continue;
                                long c3 = lr_coeff(kap, al, rho);
                                if (c3 == 0) continue;
                                long c4 = lr_coeff(gam, be, sig);
                                if (c4 == 0) continue;
                                acc += Knu * Kom * RatFunc(c1 * c2 * c3 * c4) * q.pow(bsz) * t.pow(rsz);
                            }
                    }
            }
        }
    }
    return acc;
}

std::array<RatFunc, 4> kostka_specials(const Partition& lam, const Partition& mu) {
    RatFunc q = q_var(), t = t_var();
    long nl = lam.n_stat(), nm = mu.n_stat();
    long nlc = lam.conjugate().n_stat(), nmc = mu.conjugate().n_stat();
    long dl = lam.degree(), dm = mu.degree();
    return {
        q.pow(nl) * t.pow(dm + nl + nm),          // K_{(n),0}
        q.pow(dl + nl) * t.pow(nl + nm),          // K_{0,(n)}
        q.pow(dl + nlc + nmc) * t.pow(nmc),       // K_{0,(1^n)}
        q.pow(nlc + nmc) * t.pow(dm + nmc),       // K_{(1^n),0}
    };
}

BiSymPoly omega_B(const BiSymPoly& f, const RatFunc& Q, const RatFunc& T) {
    BiSymPoly fs = convert(f, BiBasis::SP);
    RatFunc one(1, Q.params());
    BiSymPoly out(BiBasis::SP);
    for (const auto& [lab, c] : fs.coeffs()) {
        RatFunc v = c * T.pow(lab.lam.degree());
        if (lab.lam.degree() % 2 != 0) v = -v;
        for (int r : lab.mu.parts()) {
            RatFunc factor = (one - Q.pow(-r)) / (one - T.pow(-r));
            if ((r - 1) % 2 != 0) factor = -factor;
            v *= factor;
        }
        out.add_term(lab, v);
    }
    return f.basis() == BiBasis::SP ? out : convert(out, f.basis());
}

BiSymPoly omega_B(const BiSymPoly& f) { return omega_B(f, q_var(), t_var()); }

BiSymPoly omega_B_inverse(const BiSymPoly& f) {
    RatFunc q = q_var(), t = t_var(), one(1);
    BiSymPoly g = omega_B(f, one / t, one / q);
    BiSymPoly out(g.basis());
    for (const auto& [lab, c] : g.coeffs())
        out.add_term(lab, c * (q / t).pow(lab.total_degree()));
    return out;
}

long lr4_identity(const Partition& lam, const Partition& mu, const Partition& nu,
                  const Partition& om) {
    long acc = 0;
    int max_tau = lam.degree() - nu.degree();
    for (int tsz = 0; tsz <= std::max(0, max_tau); ++tsz) {
        if (nu.degree() + tsz > lam.degree()) break;
        for (const auto& tau : Partition::all(tsz)) {
            Partition tauc = tau.conjugate();
            int gsz = nu.degree() + tsz;
            int esz = lam.degree() - gsz;
            int ssz = esz + mu.degree();
            if (esz < 0 || ssz + tsz != om.degree()) continue;
            long sign = tsz % 2 == 0 ? 1 : -1;
            for (const auto& gam : Partition::all(gsz)) {
                long c1 = lr_coeff(gam, tauc, nu);
                if (c1 == 0) continue;
                for (const auto& eta : Partition::all(esz)) {
                    long c2 = lr_coeff(lam, gam, eta);
                    if (c2 == 0) continue;
                    for (const auto& sig : Partition::all(ssz)) {
                        long c3 = lr_coeff(sig, eta, mu);
                        if (c3 == 0) continue;
                        long c4 = lr_coeff(om, sig, tau);
                        if (c4 == 0) continue;
                        acc += sign * c1 * c2 * c3 * c4;
                    }
                }
            }
        }
    }
    return acc;
}

RatFunc evaluate_E_closed(const PairLabel& p, int N, int m) {
    RatFunc q = q_var(), t = t_var();
    RatFunc u1 = q.pow(m) * t.pow(N);
    RatFunc u2 = t.pow(N - m);
    return t.pow(static_cast<long>(m) * p.mu.degree()) *
           q.pow(-static_cast<long>(m - 1) * p.lam.degree()) *
           evaluation_w(p.lam, u1, q, q * t) * evaluation_w(p.mu, u2, q * t, t);
}

RatFunc evaluate_E_explicit(const PairLabel& p, int N, int m) {
    if (m < 0 || N < m) throw MathError("evaluation needs 0 <= m <= N");
    RatFunc q = q_var(), t = t_var();
    auto px = [&](int r) {
        RatFunc s(0);
        for (int i = 1; i <= m; ++i) s += t.pow(static_cast<long>(r) * (i - 1)) * q.pow(-static_cast<long>(r) * (m - i));
        return s;
    };
    auto py = [&](int r) {
        RatFunc s(0);
        for (int j = 1; j <= N - m; ++j) s += t.pow(static_cast<long>(r) * (m + j - 1));
        return s;
    };
    RatFunc acc(0);
    BiSymPoly P = double_P(p);
    for (const auto& [lab, c] : P.coeffs()) {
        RatFunc sx = pleth_evaluate(SymPoly::basis_element(OneBasis::S, lab.lam), px);
        if (sx.is_zero()) continue;
        RatFunc my = pleth_evaluate(SymPoly::basis_element(OneBasis::M, lab.mu), py);
        if (my.is_zero()) continue;
        acc += c * sx * my;
    }
    return acc;
}

bool kernel_identity_holds(int degree) {
    using Key = std::pair<PairLabel, PairLabel>;
    std::map<Key, RatFunc> lhs, rhs;
    auto add = [](std::map<Key, RatFunc>& m, const Key& k, const RatFunc& v) {
        if (v.is_zero()) return;
        auto it = m.find(k);
        if (it == m.end()) m.emplace(k, v);
        else {
            it->second += v;
            if (it->second.is_zero()) m.erase(it);
        }
    };
    RatFunc q = q_var(), t = t_var(), one(1);
    for (const auto& p : PairLabel::all(degree)) {
        BiSymPoly pp = convert(BiSymPoly::basis_element(BiBasis::SP, p), BiBasis::PP);
        RatFunc w = one / (q.pow(p.lam.degree()) * z_qt(p.mu, q, t));
        for (const auto& [l1, c1] : pp.coeffs())
            for (const auto& [l2, c2] : pp.coeffs()) add(lhs, {l1, l2}, w * c1 * c2);

        BiSymPoly P = convert(double_P(p), BiBasis::PP);
        BiSymPoly Q = convert(double_Q(p), BiBasis::PP);
        for (const auto& [l1, c1] : P.coeffs())
            for (const auto& [l2, c2] : Q.coeffs()) add(rhs, {l1, l2}, c1 * c2);
    }
    return lhs == rhs;
}

Limit parse_limit(const std::string& name) {
    if (name == "HL0") return Limit::HL0;
    if (name == "HLinf") return Limit::HLinf;
    if (name == "Schur") return Limit::Schur;
    if (name == "barSchur") return Limit::BarSchur;
    if (name == "q1") return Limit::Q1;
    if (name == "t1") return Limit::T1;
    if (name == "jackSchur") return Limit::JackSchur;
    throw ParseError("unknown specialization: " + name);
}

BiSymPoly specialize(const PairLabel& p, Limit which) {
    RatFunc q = q_var(), t = t_var(), one(1), zero(0);
    auto subst = [](const BiSymPoly& f, const std::string& name, const RatFunc& v) {
        return f.map_coeffs([&](const RatFunc& c) { return c.substitute(name, v); });
    };
    switch (which) {
        case Limit::HL0:
            return subst(double_P(p), "q", zero);
        case Limit::Schur:
            return double_P(p).map_coeffs(
                [&](const RatFunc& c) { return c.substitute({{"q", zero}, {"t", zero}}); });
        case Limit::Q1:
            return subst(double_P(p), "q", one);
        case Limit::T1:
            return subst(double_P(p), "t", one);
        case Limit::HLinf:
            return subst(subst(double_P(p), "q", one / q), "q", zero);
        case Limit::BarSchur: {
            BiSymPoly g = subst(subst(double_P(p), "q", one / q), "q", zero);
            return subst(subst(g, "t", one / t), "t", zero);
        }
        case Limit::JackSchur: {
            RatFunc a1(1, Params::alpha());
            return double_jack(p).map_coeffs([&](const RatFunc& c) { return c.substitute("a", a1); });
        }
    }
    throw MathError("unreachable");
}

BiSymPoly double_jack(const PairLabel& p) {
    ParamsPtr pa = Params::alpha();
    RatFunc a = RatFunc::var("a", pa), one(1, pa);
    SymPoly Pl = jack_P(p.lam, a / (a + one));
    SymPoly Pm = jack_P(p.mu, a + one);
    AlphabetExpr alphabet{one, one / (a + one), RatFunc(0, pa), true};
    BiSymPoly f = bisym_multiply(pleth_symfunc(Pl, alphabet),
                                 pleth_symfunc(Pm, AlphabetExpr{RatFunc(0, pa), one, RatFunc(0, pa), true}));
    return convert(f, BiBasis::SM);
}

BiSymPoly double_jack_oracle(const PairLabel& p) {
    ParamsPtr pa = Params::alpha();
    RatFunc a = RatFunc::var("a", pa);
    auto desc = pair_labels_descending(p.total_degree());
    std::vector<PairLabel> asc(desc.rbegin(), desc.rend());
    std::vector<BiSymPoly> basis;
    for (const auto& lab : asc) basis.push_back(BiSymPoly::basis_element(BiBasis::SM, lab, pa));
    size_t target = 0;
    while (target < asc.size() && !(asc[target] == p)) ++target;
    auto rows = gram_schmidt(
        target + 1, [&](size_t i, size_t j) { return biscalar_alpha(basis[i], basis[j], a); });
    BiSymPoly out(BiBasis::SM);
    for (const auto& [i, c] : rows[target]) out.add_term(asc[i], c);
    return out;
}

}  // namespace bmac
