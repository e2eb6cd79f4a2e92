#include "bmac/superspace.hpp"

#include <algorithm>
#include <mutex>

namespace bmac {

namespace {

RatFunc q_var() { return RatFunc::var("q"); }
RatFunc t_var() { return RatFunc::var("t"); }

std::map<SuperPartition, BiSymPoly> g_superP_cache;
std::mutex g_super_mutex;

RatFunc box_product(const SuperPartition& L, const std::vector<std::pair<int, int>>& boxes,
                    const RatFunc& Q, const RatFunc& T) {
    Partition star = L.star();
    Partition circ = L.circled();
    Partition starc = star.conjugate();
    RatFunc one(1, Q.params());
    RatFunc r = one;
    for (auto [i, j] : boxes) {
        int arm = circ.part(i) - j;
        int leg = starc.part(j) - i;
        r *= one - Q.pow(arm) * T.pow(leg + 1);
    }
    return r;
}

}  // namespace

SuperMacdonald super_P(const SuperPartition& L) {
    {
        std::lock_guard<std::mutex> lock(g_super_mutex);
        auto it = g_superP_cache.find(L);
        if (it != g_superP_cache.end()) return {L, it->second};
    }
    int m = L.fermionic_degree();
    auto desc = super_labels_descending(L.star_degree(), m);
    std::vector<SuperPartition> asc(desc.rbegin(), desc.rend());
    std::vector<BiSymPoly> basis;
    basis.reserve(asc.size());
    for (const auto& sp : asc) basis.push_back(BiSymPoly::basis_element(BiBasis::SM, sp.to_pair()));
    size_t target = 0;
    while (target < asc.size() && !(asc[target] == L)) ++target;
    if (target == asc.size()) throw MathError("superpartition not found in its bidegree");
    auto rows = gram_schmidt(
        target + 1, [&](size_t i, size_t j) { return biscalar_qt(basis[i], basis[j], m); });
    BiSymPoly out(BiBasis::SM);
    for (const auto& [i, c] : rows[target]) out.add_term(asc[i].to_pair(), c);
    {
        std::lock_guard<std::mutex> lock(g_super_mutex);
        g_superP_cache.emplace(L, out);
    }
    return {L, out};
}

HFactors h_factors(const SuperPartition& L) {
    RatFunc q = q_var(), t = t_var();
    auto st = L.stats();
    RatFunc down = box_product(L, st.bosonic_boxes, q, t);
    SuperPartition Lc = L.conjugate();
    RatFunc up = box_product(Lc, Lc.stats().bosonic_boxes, t, q);
    return {down, up};
}

RatFunc v_factor(const SuperPartition& L) {
    return box_product(L, L.stats().fermionic_boxes, q_var(), t_var());
}

BiSymPoly super_J(const SuperPartition& L) { return super_P(L).poly.scaled(h_factors(L).down); }

BiSymPoly super_H(const SuperPartition& L) {
    int m = L.fermionic_degree();
    BiSymPoly j_sp = convert_capped(super_J(L), BiBasis::SP, m);
    ParamsPtr params = Params::qt();
    RatFunc one(1, params), t = t_var();
    BiSymPoly out(BiBasis::SP);
    for (const auto& [lab, c] : j_sp.coeffs()) {
        RatFunc v = c;
        for (int r : lab.mu.parts()) v /= one - t.pow(r);
        out.add_term(lab, v);
    }
    return convert_capped(out, BiBasis::SM, m);
}

BiSymPoly super_schur(const SuperPartition& L) {
    RatFunc zero(0);
    return super_P(L).poly.map_coeffs(
        [&](const RatFunc& c) { return c.substitute({{"q", zero}, {"t", zero}}); });
}

std::map<SuperPartition, RatFunc> super_schur_expansion(const BiSymPoly& f, int star_degree, int m) {
    auto labels = super_labels_descending(star_degree, m);
    size_t n = labels.size();
    std::vector<PairLabel> pairs;
    std::map<PairLabel, size_t> index;
    for (size_t i = 0; i < n; ++i) {
        pairs.push_back(labels[i].to_pair());
        index[pairs.back()] = i;
    }
    // Solve sum_k x_k s_{labels[k]} = f in SM coordinates.
    std::vector<std::vector<RatFunc>> a(n, std::vector<RatFunc>(n + 1, RatFunc(0)));
    for (size_t k = 0; k < n; ++k) {
        BiSymPoly sk = super_schur(labels[k]);
        for (const auto& [lab, c] : sk.coeffs()) a[index.at(lab)][k] = c;
    }
    BiSymPoly fsm = f.basis() == BiBasis::SM ? f : convert_capped(f, BiBasis::SM, m);
    for (const auto& [lab, c] : fsm.coeffs()) {
        auto it = index.find(lab);
        if (it == index.end()) throw MathError("label outside the bidegree in super Schur expansion");
        a[it->second][n] = c;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw MathError("super Schur basis is singular");
        std::swap(a[piv], a[col]);
        RatFunc pv = a[col][col];
        for (size_t j = col; j <= n; ++j) a[col][j] /= pv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            RatFunc fmul = a[r][col];
            for (size_t j = col; j <= n; ++j) a[r][j] -= fmul * a[col][j];
        }
    }
    std::map<SuperPartition, RatFunc> out;
    for (size_t k = 0; k < n; ++k)
        if (!a[k][n].is_zero()) out.emplace(labels[k], a[k][n]);
    return out;
}

RatFunc super_kostka(const SuperPartition& Om, const SuperPartition& L) {
    if (Om.star_degree() != L.star_degree() || Om.fermionic_degree() != L.fermionic_degree())
        throw MathError("super Kostka labels need equal bidegrees");
    auto exp = super_schur_expansion(super_H(L), L.star_degree(), L.fermionic_degree());
    auto it = exp.find(Om);
    return it == exp.end() ? RatFunc(0) : it->second;
}

SymPoly psi_m1(const std::map<SuperPartition, RatFunc>& schur_coeffs) {
    SymPoly out(OneBasis::S);
    for (const auto& [Om, c] : schur_coeffs) {
        if (Om.fermionic_degree() != 1) throw MathError("psi_m1 needs fermionic degree 1");
        out.add_term(Om.circled(), c);
    }
    return out;
}

std::map<SuperPartition, RatFunc> psi_general(const std::map<SuperPartition, RatFunc>& schur_coeffs) {
    std::map<SuperPartition, RatFunc> out;
    for (const auto& [Om, c] : schur_coeffs) {
        for (const auto& [rep, sign] : Om.circle_replacements()) {
            RatFunc v = sign > 0 ? c : -c;
            auto it = out.find(rep);
            if (it == out.end()) out.emplace(rep, v);
            else {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

KdiffmResult kdiffm_check(const SuperPartition& L, const SuperPartition& Delta) {
    if (Delta.fermionic_degree() != L.fermionic_degree() - 1 ||
        Delta.star_degree() != L.star_degree() + 1)
        throw MathError("kdiffm: Delta must have fermionic degree m-1 and one more box");
    RatFunc lhs(0), rhs(0);
    // LHS: v_L sum over Omega in L's bidegree with a replacement equal to Delta.
    for (const auto& Om : SuperPartition::all(L.star_degree(), L.fermionic_degree())) {
        for (const auto& [rep, sign] : Om.circle_replacements()) {
            if (rep == Delta) {
                RatFunc k = super_kostka(Om, L);
                lhs += sign > 0 ? k : -k;
            }
        }
    }
    lhs *= v_factor(L);
    for (const auto& [Gam, sign] : L.circle_replacements()) {
        RatFunc term = v_factor(Gam) * super_kostka(Delta, Gam);
        rhs += sign > 0 ? term : -term;
    }
    return {lhs, rhs};
}

RatFunc super_evaluation_closed(const SuperPartition& L, int N) {
    Partition circ = L.circled();
    if (N < circ.length()) throw MathError("evaluation needs N >= number of rows");
    int m = L.fermionic_degree();
    RatFunc q = q_var(), t = t_var(), one(1);
    auto st = L.stats();
    PairLabel p = L.to_pair();
    long nl = p.lam.n_stat();

    RatFunc r = t.pow(st.n_skew + st.d_F) * q.pow(-(static_cast<long>(m - 1) * p.lam.degree() - nl)) /
                h_factors(L).down;
    for (int i = 1; i <= circ.length(); ++i) {
        int skip = std::max(m + 1 - i, 0);  // cells of the staircase in row i
        for (int j = skip + 1; j <= circ.part(i); ++j)
            r *= one - q.pow(j - 1) * t.pow(static_cast<long>(N) - (i - 1));
    }
    return r;
}

RatFunc super_evaluation_explicit(const SuperPartition& L, int N) {
    Partition circ = L.circled();
    if (N < circ.length()) throw MathError("evaluation needs N >= number of rows");
    int m = L.fermionic_degree();
    RatFunc q = q_var(), t = t_var();
    auto px = [&](int r) {
        RatFunc s(0);
        for (int i = 1; i <= m; ++i)
            s += t.pow(static_cast<long>(r) * (i - 1)) * q.pow(-static_cast<long>(r) * (m - i));
        return s;
    };
    auto py = [&](int r) {
        RatFunc s(0);
        for (int j = m + 1; j <= N; ++j) s += t.pow(static_cast<long>(r) * (j - 1));
        return s;
    };
    RatFunc acc(0);
    BiSymPoly poly = super_P(L).poly;
    for (const auto& [lab, c] : poly.coeffs()) {
        RatFunc sx = pleth_evaluate(SymPoly::basis_element(OneBasis::S, lab.lam), px);
        if (sx.is_zero()) continue;
        RatFunc my = pleth_evaluate(SymPoly::basis_element(OneBasis::M, lab.mu), py);
        if (my.is_zero()) continue;
        acc += c * sx * my;
    }
    return acc;
}

SweepResult stability_sweep(const PairLabel& p, const std::vector<int>& ms) {
    SweepResult res;
    res.pair = p;
    res.stable_sector_equal = true;
    int n = p.total_degree();
    for (int m : ms) {
        if (p.lam.length() > m) continue;
        SuperMacdonald sp = super_P(SuperPartition::from_pair(p, m));
        res.entries.push_back({m, sp.poly});
    }
    // All stable-sector expansions must agree with the double Macdonald one.
    for (const auto& e : res.entries)
        if (e.m >= n && !(e.poly == double_P(p))) res.stable_sector_equal = false;
    return res;
}

BiSymPoly super_monomial(const SuperPartition& L) {
    return BiSymPoly::basis_element(BiBasis::SM, L.to_pair());
}

BiSymPoly super_powersum(const SuperPartition& L) {
    return BiSymPoly::basis_element(BiBasis::SP, L.to_pair());
}

}  // namespace bmac
