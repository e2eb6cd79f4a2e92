#include "bmac/nabla.hpp"

#include <mutex>

namespace bmac {

namespace {

RatFunc q_var() { return RatFunc::var("q"); }
RatFunc t_var() { return RatFunc::var("t"); }

struct HTildeBasis {
    std::vector<PairLabel> labels;
    std::vector<BiSymPoly> elems;  // SS basis
};

const HTildeBasis& h_tilde_basis(int n) {
    static std::map<int, HTildeBasis> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it == cache.end()) {
        HTildeBasis b;
        b.labels = pair_labels_descending(n);
        for (const auto& p : b.labels) b.elems.push_back(h_tilde(p));
        it = cache.emplace(n, std::move(b)).first;
    }
    return it->second;
}

long binom2(int n) { return static_cast<long>(n) * (n - 1) / 2; }

}  // namespace

RatFunc qt_bracket(int k) {
    RatFunc q = q_var(), t = t_var();
    return (q.pow(k) - t.pow(k)) / (q - t);
}

RatFunc qt_binomial_2n_n(int n) {
    RatFunc r(1);
    for (int k = n + 1; k <= 2 * n; ++k) r *= qt_bracket(k);
    for (int k = 1; k <= n; ++k) r /= qt_bracket(k);
    return r;
}

BiSymPoly h_tilde(const PairLabel& p) {
    RatFunc q = q_var(), t = t_var(), one(1);
    BiSymPoly H = double_H(p);
    BiSymPoly flipped = H.map_coeffs([&](const RatFunc& c) { return c.substitute("t", one / t); });
    RatFunc scale = q.pow(-p.lam.conjugate().n_stat() - p.mu.conjugate().n_stat()) *
                    t.pow(p.mu.degree() + p.mu.conjugate().n_stat());
    return flipped.scaled(scale);
}

NablaKind parse_nabla_kind(const std::string& name) {
    if (name == "B") return NablaKind::B;
    if (name == "barB") return NablaKind::BarB;
    if (name == "sqrtB") return NablaKind::SqrtB;
    throw ParseError("unknown nabla kind: " + name);
}

RatFunc nabla_eigenvalue(const PairLabel& p, NablaKind kind) {
    RatFunc q = q_var(), t = t_var();
    long nl = p.lam.n_stat(), nm = p.mu.n_stat();
    long nlc = p.lam.conjugate().n_stat(), nmc = p.mu.conjugate().n_stat();
    // n^(lam,mu) = n(mu') - n(lam) - n(mu); the q exponent uses n^(mu',lam').
    long nhat_q = nl - nmc - nlc;
    long nhat_t = nmc - nl - nm;
    switch (kind) {
        case NablaKind::B:
            return q.pow(p.lam.degree() + nhat_q) * t.pow(p.mu.degree() + nhat_t);
        case NablaKind::BarB:
            return q.pow(p.lam.degree() - nhat_q) * t.pow(p.mu.degree() - nhat_t);
        case NablaKind::SqrtB:
            return q.pow(p.lam.degree()) * t.pow(p.mu.degree());
    }
    throw MathError("unreachable");
}

BiSymPoly nabla_apply(const BiSymPoly& f, NablaKind kind) {
    BiSymPoly fss = convert(f, BiBasis::SS);
    if (fss.is_zero()) return fss;
    int n = fss.coeffs().begin()->first.total_degree();
    for (const auto& [lab, c] : fss.coeffs())
        if (lab.total_degree() != n) throw MathError("nabla needs a homogeneous input");

    const HTildeBasis& basis = h_tilde_basis(n);
    size_t nn = basis.labels.size();
    // Solve sum_k x_k Htilde_k = f in SS coordinates.
    std::vector<PairLabel> ss_labels = pair_labels_descending(n);
    std::map<PairLabel, size_t> ss_index;
    for (size_t i = 0; i < ss_labels.size(); ++i) ss_index[ss_labels[i]] = i;
    std::vector<std::vector<RatFunc>> a(nn, std::vector<RatFunc>(nn + 1, RatFunc(0)));
    for (size_t k = 0; k < nn; ++k)
        for (const auto& [lab, c] : basis.elems[k].coeffs()) a[ss_index.at(lab)][k] = c;
    for (const auto& [lab, c] : fss.coeffs()) a[ss_index.at(lab)][nn] = c;

    for (size_t col = 0; col < nn; ++col) {
        size_t piv = col;
        while (piv < nn && a[piv][col].is_zero()) ++piv;
        if (piv == nn) throw MathError("H~ basis is singular");
        std::swap(a[piv], a[col]);
        RatFunc pv = a[col][col];
        for (size_t j = col; j <= nn; ++j) a[col][j] /= pv;
        for (size_t r = 0; r < nn; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            RatFunc fmul = a[r][col];
            for (size_t j = col; j <= nn; ++j) a[r][j] -= fmul * a[col][j];
        }
    }
    BiSymPoly out(BiBasis::SS);
    for (size_t k = 0; k < nn; ++k) {
        if (a[k][nn].is_zero()) continue;
        RatFunc w = a[k][nn] * nabla_eigenvalue(basis.labels[k], kind);
        for (const auto& [lab, c] : basis.elems[k].coeffs()) out.add_term(lab, w * c);
    }
    return f.basis() == BiBasis::SS ? out : convert(out, f.basis());
}

RatFunc schur_at_bracket(const Partition& lam, int k) {
    RatFunc q = q_var(), t = t_var();
    return pleth_evaluate(SymPoly::basis_element(OneBasis::S, lam),
                          [&](int r) { return (q.pow(static_cast<long>(r) * k) - t.pow(static_cast<long>(r) * k)) / (q.pow(r) - t.pow(r)); });
}

BiSymPoly nabla_on_s_empty_n_closed(int n) {
    RatFunc q = q_var(), t = t_var();
    RatFunc scale = (q * t).pow(-binom2(n));
    BiSymPoly out(BiBasis::SS);
    for (const auto& p : PairLabel::all(n)) {
        RatFunc c = schur_at_bracket(p.lam, n) * schur_at_bracket(p.mu, n + 1) * scale;
        out.add_term(p, c);
    }
    return out;
}

RatFunc catalan_B_closed(int n) {
    RatFunc q = q_var(), t = t_var();
    return (q * t).pow(-binom2(n)) * qt_binomial_2n_n(n);
}

RatFunc catalan_B_pairing(int n) {
    BiSymPoly f = nabla_apply(BiSymPoly::basis_element(BiBasis::SS, {Partition(), Partition{n}}),
                              NablaKind::B);
    return b_hall_scalar(f, BiSymPoly::basis_element(BiBasis::SS, {Partition(), Partition{n}}));
}

RatFunc dim_pairing_closed(int n) {
    RatFunc q = q_var(), t = t_var();
    return (qt_bracket(n + 1) + qt_bracket(n)).pow(n) * (q * t).pow(-binom2(n));
}

RatFunc dim_pairing_operator(int n) {
    BiSymPoly f = nabla_apply(BiSymPoly::basis_element(BiBasis::SS, {Partition(), Partition{n}}),
                              NablaKind::B);
    std::vector<int> ones(static_cast<size_t>(n), 1);
    BiSymPoly p1n = BiSymPoly::basis_element(BiBasis::PM, {Partition(ones), Partition()});
    return b_hall_scalar(f, p1n);
}

}  // namespace bmac
