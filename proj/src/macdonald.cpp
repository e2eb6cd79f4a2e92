#include "bmac/macdonald.hpp"

#include "bmac/plethysm.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

namespace bmac {

namespace {

struct CacheKey {
    Partition lam;
    std::string q, t;
    bool operator<(const CacheKey& o) const {
        if (!(lam == o.lam)) return lam < o.lam;
        if (q != o.q) return q < o.q;
        return t < o.t;
    }
};

std::map<CacheKey, SymPoly> g_P_cache;
std::shared_mutex g_cache_mutex;

SymPoly gram_schmidt_family(const std::vector<Partition>& labels_ascending, const Partition& lam,
                            const std::function<RatFunc(const SymPoly&, const SymPoly&)>& inner,
                            const ParamsPtr& params) {
    std::vector<SymPoly> basis;
    basis.reserve(labels_ascending.size());
    for (const auto& p : labels_ascending)
        basis.push_back(SymPoly::basis_element(OneBasis::M, p, params));

    size_t target = 0;
    while (target < labels_ascending.size() && !(labels_ascending[target] == lam)) ++target;
    if (target == labels_ascending.size()) throw MathError("label not found in Gram-Schmidt list");

    auto rows = gram_schmidt(target + 1, [&](size_t i, size_t j) { return inner(basis[i], basis[j]); });
    SymPoly out(OneBasis::M);
    for (const auto& [i, c] : rows[target]) out.add_term(labels_ascending[i], c);
    return out;
}

}  // namespace

SymPoly macdonald_P(const Partition& lam, const RatFunc& Q, const RatFunc& T) {
    CacheKey key{lam, Q.to_string(), T.to_string()};
    {
        std::shared_lock lock(g_cache_mutex);
        auto it = g_P_cache.find(key);
        if (it != g_P_cache.end()) return it->second;
    }
    // Ascending linear extension of dominance: reverse of descending lex.
    auto labels = Partition::all(lam.degree());
    std::reverse(labels.begin(), labels.end());
    SymPoly out = gram_schmidt_family(
        labels, lam, [&](const SymPoly& a, const SymPoly& b) { return qt_scalar(a, b, Q, T); },
        Q.params());
    {
        std::unique_lock lock(g_cache_mutex);
        g_P_cache.emplace(key, out);
    }
    return out;
}

RatFunc b_norm(const Partition& lam, const RatFunc& Q, const RatFunc& T) {
    RatFunc one(1, Q.params());
    RatFunc r = one;
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j) {
            int a = lam.arm(i, j), l = lam.leg(i, j);
            r *= (one - Q.pow(a) * T.pow(l + 1)) / (one - Q.pow(a + 1) * T.pow(l));
        }
    return r;
}

RatFunc c_norm(const Partition& lam, const RatFunc& Q, const RatFunc& T) {
    RatFunc one(1, Q.params());
    RatFunc r = one;
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j)
            r *= one - Q.pow(lam.arm(i, j)) * T.pow(lam.leg(i, j) + 1);
    return r;
}

SymPoly macdonald_J(const Partition& lam, const RatFunc& Q, const RatFunc& T) {
    return macdonald_P(lam, Q, T).scaled(c_norm(lam, Q, T));
}

SymPoly macdonald_H(const Partition& lam, const RatFunc& Q, const RatFunc& T) {
    SymPoly j = macdonald_J(lam, Q, T);
    RatFunc one(1, Q.params());
    SymPoly h = pleth_scale_powersums(j, [&](int r) { return one / (one - T.frobenius(r)); });
    return change_basis(h, OneBasis::S);
}

RatFunc kostka_qt(const Partition& mu, const Partition& lam, const RatFunc& Q, const RatFunc& T) {
    if (mu.degree() != lam.degree()) throw MathError("Kostka labels need equal degrees");
    return macdonald_H(lam, Q, T).coeff(mu);
}

RatFunc evaluation_w(const Partition& lam, const RatFunc& u, const RatFunc& Q, const RatFunc& T) {
    RatFunc one(1, Q.params());
    RatFunc r = one;
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j) {
            RatFunc numer = T.pow(i - 1) - Q.pow(j - 1) * u;
            RatFunc denom = one - Q.pow(lam.arm(i, j)) * T.pow(lam.leg(i, j) + 1);
            if (denom.is_zero()) throw PoleError("evaluation_w: vanishing hook denominator");
            r *= numer / denom;
        }
    return r;
}

SymPoly jack_P(const Partition& lam, const RatFunc& A) {
    CacheKey key{lam, "jack:" + A.to_string(), ""};
    {
        std::shared_lock lock(g_cache_mutex);
        auto it = g_P_cache.find(key);
        if (it != g_P_cache.end()) return it->second;
    }
    auto labels = Partition::all(lam.degree());
    std::reverse(labels.begin(), labels.end());
    SymPoly out = gram_schmidt_family(
        labels, lam, [&](const SymPoly& a, const SymPoly& b) { return alpha_scalar(a, b, A); },
        A.params());
    {
        std::unique_lock lock(g_cache_mutex);
        g_P_cache.emplace(key, out);
    }
    return out;
}

void clear_macdonald_cache() {
    std::unique_lock lock(g_cache_mutex);
    g_P_cache.clear();
}

}  // namespace bmac
