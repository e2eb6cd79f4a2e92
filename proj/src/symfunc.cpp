#include "bmac/symfunc.hpp"

#include <algorithm>
#include <mutex>

namespace bmac {

std::string basis_name(OneBasis b) {
    switch (b) {
        case OneBasis::M: return "m";
        case OneBasis::E: return "e";
        case OneBasis::H: return "h";
        case OneBasis::P: return "p";
        case OneBasis::S: return "s";
    }
    return "?";
}

OneBasis parse_one_basis(const std::string& name) {
    if (name == "m") return OneBasis::M;
    if (name == "e") return OneBasis::E;
    if (name == "h") return OneBasis::H;
    if (name == "p") return OneBasis::P;
    if (name == "s") return OneBasis::S;
    throw ParseError("unknown basis: " + name);
}

SymPoly SymPoly::basis_element(OneBasis b, const Partition& p, const ParamsPtr& params) {
    SymPoly f(b);
    f.c_[p] = RatFunc(1, params);
    return f;
}

SymPoly SymPoly::one(OneBasis b, const ParamsPtr& params) { return basis_element(b, Partition(), params); }

RatFunc SymPoly::coeff(const Partition& p) const {
    auto it = c_.find(p);
    if (it == c_.end()) return RatFunc(0);
    return it->second;
}

void SymPoly::add_term(const Partition& p, const RatFunc& v) {
    if (v.is_zero()) return;
    auto it = c_.find(p);
    if (it == c_.end()) {
        c_.emplace(p, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

SymPoly SymPoly::scaled(const RatFunc& v) const {
    SymPoly f(basis_);
    if (v.is_zero()) return f;
    for (const auto& [p, c] : c_) f.c_[p] = c * v;
    return f;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    if (basis_ != o.basis_) throw MathError("SymPoly addition needs matching bases");
    SymPoly f = *this;
    for (const auto& [p, c] : o.c_) f.add_term(p, c);
    return f;
}

SymPoly SymPoly::operator-(const SymPoly& o) const { return *this + o.scaled(RatFunc(-1)); }

// ---------------------------------------------------------------------------
// Transition tables via expansion in `degree` variables.

namespace {

// Dense polynomial in d variables with integer coefficients, used only to
// derive expansion matrices.
using VarPoly = std::map<std::vector<int>, mpz_class>;

VarPoly vp_one(int d) { return {{std::vector<int>(static_cast<size_t>(d), 0), 1}}; }

VarPoly vp_mul(const VarPoly& a, const VarPoly& b, int d) {
    VarPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(static_cast<size_t>(d));
            for (int i = 0; i < d; ++i) e[static_cast<size_t>(i)] = ea[static_cast<size_t>(i)] + eb[static_cast<size_t>(i)];
            auto [it, fresh] = r.emplace(std::move(e), ca * cb);
            if (!fresh) {
                it->second += ca * cb;
                if (it->second == 0) r.erase(it);
            }
        }
    return r;
}

VarPoly vp_elementary(int k, int d) {
    VarPoly r;
    std::vector<int> idx(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int start, int chosen) {
        if (chosen == k) {
            std::vector<int> e(static_cast<size_t>(d), 0);
            for (int i = 0; i < k; ++i) e[static_cast<size_t>(idx[static_cast<size_t>(i)])] = 1;
            r[e] = 1;
            return;
        }
        for (int i = start; i < d; ++i) {
            idx[static_cast<size_t>(chosen)] = i;
            rec(i + 1, chosen + 1);
        }
    };
    if (k == 0) return vp_one(d);
    if (k > d) return {};
    rec(0, 0);
    return r;
}

VarPoly vp_homogeneous(int k, int d) {
    VarPoly r;
    std::vector<int> e(static_cast<size_t>(d), 0);
    std::function<void(int, int)> rec = [&](int start, int left) {
        if (left == 0) {
            r[e] = 1;
            return;
        }
        if (start == d) return;
        for (int take = left; take >= 0; --take) {
            e[static_cast<size_t>(start)] = take;
            rec(start + 1, left - take);
        }
        e[static_cast<size_t>(start)] = 0;
    };
    if (k == 0) return vp_one(d);
    rec(0, k);
    return r;
}

VarPoly vp_powersum(int k, int d) {
    VarPoly r;
    for (int i = 0; i < d; ++i) {
        std::vector<int> e(static_cast<size_t>(d), 0);
        e[static_cast<size_t>(i)] = k;
        r[e] = 1;
    }
    return r;
}

// Coefficients of monomial symmetric functions inside a symmetric VarPoly.
std::vector<mpq_class> monomial_row(const VarPoly& f, const std::vector<Partition>& labels,
                                    const std::map<Partition, int>& index, int d) {
    std::vector<mpq_class> row(labels.size(), 0);
    for (const auto& [e, c] : f) {
        std::vector<int> sorted = e;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        bool is_partition_shape = true;
        for (int i = 0; i < d; ++i)
            if (e[static_cast<size_t>(i)] != sorted[static_cast<size_t>(i)]) {
                is_partition_shape = false;
                break;
            }
        if (!is_partition_shape) continue;
        Partition p(sorted);
        row[static_cast<size_t>(index.at(p))] = mpq_class(c);
    }
    return row;
}

std::vector<std::vector<mpq_class>> invert(const std::vector<std::vector<mpq_class>>& a) {
    size_t n = a.size();
    std::vector<std::vector<mpq_class>> m = a;
    std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw MathError("transition matrix is singular");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        mpq_class p = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            mpq_class f = m[r][col];
            for (size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// s_lambda as a signed sum of h_mu via the Jacobi-Trudi determinant.
std::map<Partition, long> schur_in_h(const Partition& lam) {
    std::map<Partition, long> out;
    int l = lam.length();
    if (l == 0) {
        out[Partition()] = 1;
        return out;
    }
    std::vector<int> perm(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) perm[static_cast<size_t>(i)] = i;
    do {
        int sign = 1;
        {
            // parity of the permutation
            std::vector<bool> seen(static_cast<size_t>(l), false);
            for (int i = 0; i < l; ++i) {
                if (seen[static_cast<size_t>(i)]) continue;
                int len = 0, j = i;
                while (!seen[static_cast<size_t>(j)]) {
                    seen[static_cast<size_t>(j)] = true;
                    j = perm[static_cast<size_t>(j)];
                    ++len;
                }
                if (len % 2 == 0) sign = -sign;
            }
        }
        std::vector<int> hs;
        bool ok = true;
        for (int i = 0; i < l && ok; ++i) {
            int k = lam.part(i + 1) - (i + 1) + (perm[static_cast<size_t>(i)] + 1);
            if (k < 0) ok = false;
            else if (k > 0) hs.push_back(k);
        }
        if (ok) {
            std::sort(hs.begin(), hs.end(), std::greater<int>());
            out[Partition(hs)] += sign;
            if (out[Partition(hs)] == 0) out.erase(Partition(hs));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::map<int, DegreeTables> g_tables;
std::mutex g_tables_mutex;

DegreeTables build_tables(int d) {
    DegreeTables t;
    t.labels = Partition::all(d);
    for (size_t i = 0; i < t.labels.size(); ++i) t.index[t.labels[i]] = static_cast<int>(i);
    size_t n = t.labels.size();

    t.to_m.assign(4, std::vector<std::vector<mpq_class>>(n, std::vector<mpq_class>(n, 0)));

    auto fill = [&](int which, const std::function<VarPoly(int)>& gen) {
        // cache generator polynomials by part size
        std::map<int, VarPoly> cache;
        for (size_t i = 0; i < n; ++i) {
            VarPoly prod = vp_one(d);
            for (int p : t.labels[i].parts()) {
                auto it = cache.find(p);
                if (it == cache.end()) it = cache.emplace(p, gen(p)).first;
                prod = vp_mul(prod, it->second, d);
            }
            t.to_m[static_cast<size_t>(which)][i] = monomial_row(prod, t.labels, t.index, d);
        }
    };
    fill(0, [&](int k) { return vp_elementary(k, d); });
    fill(1, [&](int k) { return vp_homogeneous(k, d); });
    fill(2, [&](int k) { return vp_powersum(k, d); });

    // Schur via Jacobi-Trudi composed with h -> m.
    for (size_t i = 0; i < n; ++i) {
        auto hexp = schur_in_h(t.labels[i]);
        for (const auto& [hp, c] : hexp) {
            int k = t.index.at(hp);
            for (size_t j = 0; j < n; ++j)
                t.to_m[3][i][j] += mpq_class(c) * t.to_m[1][static_cast<size_t>(k)][j];
        }
    }

    t.from_m.resize(4);
    for (int b = 0; b < 4; ++b) t.from_m[static_cast<size_t>(b)] = invert(t.to_m[static_cast<size_t>(b)]);
    return t;
}

int basis_slot(OneBasis b) {
    switch (b) {
        case OneBasis::E: return 0;
        case OneBasis::H: return 1;
        case OneBasis::P: return 2;
        case OneBasis::S: return 3;
        case OneBasis::M: return -1;
    }
    return -1;
}

}  // namespace

const DegreeTables& degree_tables(int degree) {
    std::lock_guard<std::mutex> lock(g_tables_mutex);
    auto it = g_tables.find(degree);
    if (it == g_tables.end()) it = g_tables.emplace(degree, build_tables(degree)).first;
    return it->second;
}

SymPoly change_basis(const SymPoly& f, OneBasis target) {
    if (f.basis() == target) return f;
    SymPoly out(target);
    // group by degree
    std::map<int, std::vector<std::pair<Partition, RatFunc>>> by_degree;
    for (const auto& [p, c] : f.coeffs()) by_degree[p.degree()].push_back({p, c});

    for (const auto& [d, terms] : by_degree) {
        const DegreeTables& t = degree_tables(d);
        size_t n = t.labels.size();
        std::vector<RatFunc> vec(n, RatFunc(0));
        ParamsPtr params = terms.front().second.params();
        for (auto& v : vec) v = RatFunc(0, params);

        int src = basis_slot(f.basis());
        if (src < 0) {
            for (const auto& [p, c] : terms) vec[static_cast<size_t>(t.index.at(p))] = c;
        } else {
            const auto& mat = t.to_m[static_cast<size_t>(src)];
            for (const auto& [p, c] : terms) {
                size_t i = static_cast<size_t>(t.index.at(p));
                for (size_t j = 0; j < n; ++j)
                    if (mat[i][j] != 0) vec[j] += c * RatFunc::from_mpq(mat[i][j], params);
            }
        }
        int dst = basis_slot(target);
        if (dst < 0) {
            for (size_t j = 0; j < n; ++j) out.add_term(t.labels[j], vec[j]);
        } else {
            const auto& mat = t.from_m[static_cast<size_t>(dst)];
            for (size_t i = 0; i < n; ++i) {
                if (vec[i].is_zero()) continue;
                for (size_t j = 0; j < n; ++j)
                    if (mat[i][j] != 0) out.add_term(t.labels[j], vec[i] * RatFunc::from_mpq(mat[i][j], params));
            }
        }
    }
    return out;
}

SymPoly multiply(const SymPoly& f, const SymPoly& g) {
    SymPoly fp = change_basis(f, OneBasis::P);
    SymPoly gp = change_basis(g, OneBasis::P);
    SymPoly prod(OneBasis::P);
    for (const auto& [a, ca] : fp.coeffs())
        for (const auto& [b, cb] : gp.coeffs()) prod.add_term(a.union_with(b), ca * cb);
    return change_basis(prod, f.basis());
}

std::map<Partition, long> littlewood_richardson(const Partition& a, const Partition& b) {
    SymPoly prod = multiply(SymPoly::basis_element(OneBasis::S, a), SymPoly::basis_element(OneBasis::S, b));
    std::map<Partition, long> out;
    for (const auto& [p, c] : prod.coeffs()) {
        if (!c.is_constant()) throw MathError("non-constant LR coefficient");
        mpq_class v = c.constant_value();
        if (v.get_den() != 1) throw MathError("non-integer LR coefficient");
        out[p] = static_cast<long>(v.get_num().get_si());
    }
    return out;
}

long lr_coeff(const Partition& lam, const Partition& a, const Partition& b) {
    if (lam.degree() != a.degree() + b.degree()) return 0;
    static std::map<std::pair<Partition, Partition>, std::map<Partition, long>> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_pair(a, b);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, littlewood_richardson(a, b)).first;
    auto jt = it->second.find(lam);
    return jt == it->second.end() ? 0 : jt->second;
}

RatFunc z_qt(const Partition& lam, const RatFunc& Q, const RatFunc& T) {
    RatFunc z(lam.z_factor(), Q.params());
    RatFunc one(1, Q.params());
    for (int p : lam.parts()) z *= (one - Q.pow(p)) / (one - T.pow(p));
    return z;
}

RatFunc qt_scalar(const SymPoly& f, const SymPoly& g, const RatFunc& Q, const RatFunc& T) {
    SymPoly fp = change_basis(f, OneBasis::P);
    SymPoly gp = change_basis(g, OneBasis::P);
    RatFunc acc(0, Q.params());
    for (const auto& [p, cf] : fp.coeffs()) {
        RatFunc cg = gp.coeff(p);
        if (cg.is_zero()) continue;
        acc += cf * cg * z_qt(p, Q, T);
    }
    return acc;
}

RatFunc hall_scalar(const SymPoly& f, const SymPoly& g) {
    SymPoly fp = change_basis(f, OneBasis::P);
    SymPoly gp = change_basis(g, OneBasis::P);
    RatFunc acc(0);
    for (const auto& [p, cf] : fp.coeffs()) {
        RatFunc cg = gp.coeff(p);
        if (cg.is_zero()) continue;
        acc += cf * cg * RatFunc(p.z_factor(), cf.params());
    }
    return acc;
}

RatFunc alpha_scalar(const SymPoly& f, const SymPoly& g, const RatFunc& A) {
    SymPoly fp = change_basis(f, OneBasis::P);
    SymPoly gp = change_basis(g, OneBasis::P);
    RatFunc acc(0, A.params());
    for (const auto& [p, cf] : fp.coeffs()) {
        RatFunc cg = gp.coeff(p);
        if (cg.is_zero()) continue;
        acc += cf * cg * A.pow(p.length()) * RatFunc(p.z_factor(), A.params());
    }
    return acc;
}

const SymPoly& cached_expansion(OneBasis from, OneBasis to, const Partition& p) {
    static std::map<std::tuple<OneBasis, OneBasis, Partition>, SymPoly> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_tuple(from, to, p);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, change_basis(SymPoly::basis_element(from, p), to)).first;
    return it->second;
}

std::vector<std::map<size_t, RatFunc>> gram_schmidt(
    size_t nlabels, const std::function<RatFunc(size_t, size_t)>& gram) {
    // Cached symmetric Gram entries.
    std::map<std::pair<size_t, size_t>, RatFunc> G;
    auto gij = [&](size_t i, size_t j) -> const RatFunc& {
        auto key = std::minmax(i, j);
        auto it = G.find(key);
        if (it == G.end()) it = G.emplace(key, gram(key.first, key.second)).first;
        return it->second;
    };

    std::vector<std::map<size_t, RatFunc>> rows;
    for (size_t k = 0; k < nlabels; ++k) {
        std::map<size_t, RatFunc> row;
        if (k > 0) {
            // Solve sum_{i<k} c_i G(i,j) = -G(k,j) for all j < k.
            std::vector<std::vector<RatFunc>> a(k, std::vector<RatFunc>(k + 1));
            for (size_t j = 0; j < k; ++j) {
                for (size_t i = 0; i < k; ++i) a[j][i] = gij(i, j);
                a[j][k] = -gij(k, j);
            }
            // Gaussian elimination.
            for (size_t col = 0; col < k; ++col) {
                size_t piv = col;
                while (piv < k && a[piv][col].is_zero()) ++piv;
                if (piv == k) throw MathError("singular Gram matrix");
                std::swap(a[piv], a[col]);
                RatFunc p = a[col][col];
                for (size_t j = col; j <= k; ++j) a[col][j] /= p;
                for (size_t r = 0; r < k; ++r) {
                    if (r == col || a[r][col].is_zero()) continue;
                    RatFunc f = a[r][col];
                    for (size_t j = col; j <= k; ++j) a[r][j] -= f * a[col][j];
                }
            }
            for (size_t i = 0; i < k; ++i)
                if (!a[i][k].is_zero()) row[i] = a[i][k];
        }
        row[k] = RatFunc(1, gij(k, k).params());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace bmac
