#include "bmac/bisym.hpp"

#include <algorithm>
#include <mutex>

namespace bmac {

std::string bibasis_name(BiBasis b) {
    switch (b) {
        case BiBasis::PP: return "PP";
        case BiBasis::SM: return "SM";
        case BiBasis::SP: return "SP";
        case BiBasis::SS: return "SS";
        case BiBasis::PM: return "PM";
    }
    return "?";
}

BiBasis parse_bibasis(const std::string& name) {
    if (name == "PP") return BiBasis::PP;
    if (name == "SM") return BiBasis::SM;
    if (name == "SP") return BiBasis::SP;
    if (name == "SS") return BiBasis::SS;
    if (name == "PM") return BiBasis::PM;
    throw ParseError("unknown bisymmetric basis: " + name);
}

BiSymPoly BiSymPoly::basis_element(BiBasis b, const PairLabel& p, const ParamsPtr& params) {
    BiSymPoly f(b);
    f.c_[p] = RatFunc(1, params);
    return f;
}

BiSymPoly BiSymPoly::one(BiBasis b, const ParamsPtr& params) { return basis_element(b, PairLabel(), params); }

RatFunc BiSymPoly::coeff(const PairLabel& p) const {
    auto it = c_.find(p);
    if (it == c_.end()) return RatFunc(0, params());
    return it->second;
}

void BiSymPoly::add_term(const PairLabel& p, const RatFunc& v) {
    if (v.is_zero()) return;
    auto it = c_.find(p);
    if (it == c_.end()) {
        c_.emplace(p, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

BiSymPoly BiSymPoly::scaled(const RatFunc& v) const {
    BiSymPoly f(basis_);
    if (v.is_zero()) return f;
    for (const auto& [p, c] : c_) f.c_[p] = c * v;
    return f;
}

BiSymPoly BiSymPoly::operator+(const BiSymPoly& o) const {
    if (basis_ != o.basis_) throw MathError("BiSymPoly addition needs matching bases");
    BiSymPoly f = *this;
    for (const auto& [p, c] : o.c_) f.add_term(p, c);
    return f;
}

BiSymPoly BiSymPoly::operator-(const BiSymPoly& o) const { return *this + o.scaled(RatFunc(-1, params())); }

BiSymPoly BiSymPoly::map_coeffs(const std::function<RatFunc(const RatFunc&)>& f) const {
    BiSymPoly out(basis_);
    for (const auto& [p, c] : c_) out.add_term(p, f(c));
    return out;
}

ParamsPtr BiSymPoly::params() const {
    if (c_.empty()) return Params::qt();
    return c_.begin()->second.params();
}

// ---------------------------------------------------------------------------
// Splittings

std::vector<std::tuple<Partition, Partition, long>> partition_splits(const Partition& mu) {
    std::vector<std::pair<int, int>> runs;  // (value, count)
    for (int p : mu.parts()) {
        if (!runs.empty() && runs.back().first == p) runs.back().second++;
        else runs.emplace_back(p, 1);
    }
    std::vector<std::tuple<Partition, Partition, long>> out;
    std::vector<int> take(runs.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == runs.size()) {
            std::vector<int> a, b;
            long mult = 1;
            for (size_t r = 0; r < runs.size(); ++r) {
                auto [v, c] = runs[r];
                int k = take[r];
                for (int j = 0; j < k; ++j) a.push_back(v);
                for (int j = 0; j < c - k; ++j) b.push_back(v);
                // binomial C(c, k)
                long bin = 1;
                for (int j = 0; j < k; ++j) bin = bin * (c - j) / (j + 1);
                mult *= bin;
            }
            out.emplace_back(Partition(std::move(a)), Partition(std::move(b)), mult);
            return;
        }
        for (int k = 0; k <= runs[i].second; ++k) {
            take[i] = k;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

// ---------------------------------------------------------------------------
// Conversions (stable, via PP)

namespace {

BiSymPoly to_pp(const BiSymPoly& f) {
    if (f.basis() == BiBasis::PP) return f;
    BiSymPoly out(BiBasis::PP);
    for (const auto& [lab, c] : f.coeffs()) {
        switch (f.basis()) {
            case BiBasis::SM:
            case BiBasis::SS: {
                OneBasis second = f.basis() == BiBasis::SM ? OneBasis::M : OneBasis::S;
                const SymPoly& xs = cached_expansion(OneBasis::S, OneBasis::P, lab.lam);
                const SymPoly& ys = cached_expansion(second, OneBasis::P, lab.mu);
                for (const auto& [a, ca] : xs.coeffs())
                    for (const auto& [b, cb] : ys.coeffs()) out.add_term({a, b}, c * ca * cb);
                break;
            }
            case BiBasis::SP: {
                const SymPoly& xs = cached_expansion(OneBasis::S, OneBasis::P, lab.lam);
                for (const auto& [a, ca] : xs.coeffs())
                    for (const auto& [al, be, mult] : partition_splits(lab.mu))
                        out.add_term({a.union_with(al), be}, c * ca * RatFunc(mult, c.params()));
                break;
            }
            case BiBasis::PM: {
                // p_r[X+Y] = p_r[X]+p_r[Y], p_r[X-Y] = p_r[X]-p_r[Y]
                for (const auto& [al1, be1, m1] : partition_splits(lab.lam))
                    for (const auto& [al2, be2, m2] : partition_splits(lab.mu)) {
                        long sign = be2.length() % 2 == 0 ? 1 : -1;
                        out.add_term({al1.union_with(al2), be1.union_with(be2)},
                                     c * RatFunc(m1 * m2 * sign, c.params()));
                    }
                break;
            }
            case BiBasis::PP: break;
        }
    }
    return out;
}

BiSymPoly from_pp(const BiSymPoly& f, BiBasis target) {
    if (target == BiBasis::PP) return f;
    BiSymPoly out(target);
    for (const auto& [lab, c] : f.coeffs()) {
        switch (target) {
            case BiBasis::SM:
            case BiBasis::SS: {
                OneBasis second = target == BiBasis::SM ? OneBasis::M : OneBasis::S;
                const SymPoly& xs = cached_expansion(OneBasis::P, OneBasis::S, lab.lam);
                const SymPoly& ys = cached_expansion(OneBasis::P, second, lab.mu);
                for (const auto& [a, ca] : xs.coeffs())
                    for (const auto& [b, cb] : ys.coeffs()) out.add_term({a, b}, c * ca * cb);
                break;
            }
            case BiBasis::SP: {
                // p_sig[Y] = prod (p_r[X+Y] - p_r[X])
                for (const auto& [toX, toXY, mult] : partition_splits(lab.mu)) {
                    long sign = toX.length() % 2 == 0 ? 1 : -1;
                    Partition xpart = lab.lam.union_with(toX);
                    const SymPoly& xs = cached_expansion(OneBasis::P, OneBasis::S, xpart);
                    for (const auto& [a, ca] : xs.coeffs())
                        out.add_term({a, toXY}, c * ca * RatFunc(mult * sign, c.params()));
                }
                break;
            }
            case BiBasis::PM: {
                // p_r[X] = (p_r[X+Y]+p_r[X-Y])/2, p_r[Y] = (p_r[X+Y]-p_r[X-Y])/2
                RatFunc half = RatFunc(mpq_class(1, 2), c.params());
                for (const auto& [plus1, minus1, m1] : partition_splits(lab.lam))
                    for (const auto& [plus2, minus2, m2] : partition_splits(lab.mu)) {
                        long sign = minus2.length() % 2 == 0 ? 1 : -1;
                        RatFunc w = c * RatFunc(m1 * m2 * sign, c.params()) *
                                    half.pow(lab.lam.length() + lab.mu.length());
                        out.add_term({plus1.union_with(plus2), minus1.union_with(minus2)}, w);
                    }
                break;
            }
            case BiBasis::PP: break;
        }
    }
    return out;
}

}  // namespace

BiSymPoly convert(const BiSymPoly& f, BiBasis target) {
    if (f.basis() == target) return f;
    return from_pp(to_pp(f), target);
}

BiSymPoly bisym_multiply(const BiSymPoly& f, const BiSymPoly& g) {
    BiSymPoly fp = to_pp(f), gp = to_pp(g);
    BiSymPoly prod(BiBasis::PP);
    for (const auto& [a, ca] : fp.coeffs())
        for (const auto& [b, cb] : gp.coeffs())
            prod.add_term({a.lam.union_with(b.lam), a.mu.union_with(b.mu)}, ca * cb);
    return f.basis() == BiBasis::PP ? prod : from_pp(prod, f.basis());
}

BiSymPoly tensor_xy(const SymPoly& fx, const SymPoly& gy) {
    SymPoly fp = change_basis(fx, OneBasis::P);
    SymPoly gp = change_basis(gy, OneBasis::P);
    BiSymPoly out(BiBasis::PP);
    for (const auto& [a, ca] : fp.coeffs())
        for (const auto& [b, cb] : gp.coeffs()) out.add_term({a, b}, ca * cb);
    return out;
}

// ---------------------------------------------------------------------------
// Capped SM <-> SP tables

namespace {

struct CappedTables {
    std::vector<PairLabel> labels;  // pairs of total degree n with len(lam) <= cap
    std::map<PairLabel, int> index;
    std::vector<std::vector<mpq_class>> sp_to_sm;  // rows: SP labels, cols: SM labels
    std::vector<std::vector<mpq_class>> sm_to_sp;
};

CappedTables build_capped(int n, int cap) {
    CappedTables t;
    for (const auto& p : PairLabel::all(n))
        if (p.lam.length() <= cap) t.labels.push_back(p);
    for (size_t i = 0; i < t.labels.size(); ++i) t.index[t.labels[i]] = static_cast<int>(i);
    size_t nn = t.labels.size();
    t.sp_to_sm.assign(nn, std::vector<mpq_class>(nn, 0));

    for (size_t i = 0; i < nn; ++i) {
        const PairLabel& sp = t.labels[i];
        for (const auto& [toX, toY, mult] : partition_splits(sp.mu)) {
            // s_lam[X] * p_toX[X], truncated to length <= cap
            SymPoly xprod = multiply(SymPoly::basis_element(OneBasis::S, sp.lam),
                                     SymPoly::basis_element(OneBasis::P, toX));
            const SymPoly& ym = cached_expansion(OneBasis::P, OneBasis::M, toY);
            for (const auto& [a, ca] : xprod.coeffs()) {
                if (a.length() > cap) continue;
                for (const auto& [b, cb] : ym.coeffs()) {
                    mpq_class v = ca.constant_value() * cb.constant_value() * mult;
                    t.sp_to_sm[i][static_cast<size_t>(t.index.at({a, b}))] += v;
                }
            }
        }
    }
    // invert
    {
        size_t m = nn;
        auto a = t.sp_to_sm;
        std::vector<std::vector<mpq_class>> inv(m, std::vector<mpq_class>(m, 0));
        for (size_t i = 0; i < m; ++i) inv[i][i] = 1;
        for (size_t col = 0; col < m; ++col) {
            size_t piv = col;
            while (piv < m && a[piv][col] == 0) ++piv;
            if (piv == m) throw MathError("capped SM/SP transition is singular");
            std::swap(a[piv], a[col]);
            std::swap(inv[piv], inv[col]);
            mpq_class p = a[col][col];
            for (size_t j = 0; j < m; ++j) {
                a[col][j] /= p;
                inv[col][j] /= p;
            }
            for (size_t r = 0; r < m; ++r) {
                if (r == col || a[r][col] == 0) continue;
                mpq_class f = a[r][col];
                for (size_t j = 0; j < m; ++j) {
                    a[r][j] -= f * a[col][j];
                    inv[r][j] -= f * inv[col][j];
                }
            }
        }
        t.sm_to_sp = std::move(inv);
    }
    return t;
}

const CappedTables& capped_tables(int n, int cap) {
    static std::map<std::pair<int, int>, CappedTables> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_pair(n, cap);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_capped(n, cap)).first;
    return it->second;
}

}  // namespace

BiSymPoly convert_capped(const BiSymPoly& f, BiBasis target, int cap) {
    if (f.basis() == target) return f;
    if (!((f.basis() == BiBasis::SM && target == BiBasis::SP) ||
          (f.basis() == BiBasis::SP && target == BiBasis::SM)))
        throw MathError("capped conversion supports SM <-> SP only");
    BiSymPoly out(target);
    // split by total degree
    std::map<int, std::vector<std::pair<PairLabel, RatFunc>>> by_degree;
    for (const auto& [p, c] : f.coeffs()) by_degree[p.total_degree()].push_back({p, c});
    for (const auto& [n, terms] : by_degree) {
        const CappedTables& t = capped_tables(n, std::min(cap, n));
        const auto& mat = f.basis() == BiBasis::SP ? t.sp_to_sm : t.sm_to_sp;
        for (const auto& [p, c] : terms) {
            auto it = t.index.find(p);
            if (it == t.index.end()) throw MathError("label exceeds the cap in capped conversion");
            size_t i = static_cast<size_t>(it->second);
            for (size_t j = 0; j < t.labels.size(); ++j)
                if (mat[i][j] != 0) out.add_term(t.labels[j], c * RatFunc::from_mpq(mat[i][j], c.params()));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Scalar products

RatFunc biscalar_qt(const BiSymPoly& f, const BiSymPoly& g, std::optional<int> cap) {
    BiSymPoly fs = cap ? convert_capped(f, BiBasis::SP, *cap)
                       : (f.basis() == BiBasis::SP ? f : convert(f, BiBasis::SP));
    BiSymPoly gs = cap ? convert_capped(g, BiBasis::SP, *cap)
                       : (g.basis() == BiBasis::SP ? g : convert(g, BiBasis::SP));
    ParamsPtr params = fs.params();
    RatFunc q = RatFunc::var("q", params), t = RatFunc::var("t", params);
    RatFunc acc(0, params);
    for (const auto& [p, cf] : fs.coeffs()) {
        RatFunc cg = gs.coeff(p);
        if (cg.is_zero()) continue;
        acc += cf * cg * q.pow(p.lam.degree()) * z_qt(p.mu, q, t);
    }
    return acc;
}

RatFunc biscalar_primed(const BiSymPoly& f, const BiSymPoly& g) {
    // Expand in the u_lam v_mu basis: p_r[X] = u_r - c_r v_r, p_r[Y] = v_r,
    // c_r = q^r (1-t^r)/(1-q^r t^r).
    ParamsPtr params = f.params();
    RatFunc q = RatFunc::var("q", params), t = RatFunc::var("t", params);
    RatFunc one(1, params);
    auto uv_coords = [&](const BiSymPoly& h) {
        std::map<PairLabel, RatFunc> out;
        BiSymPoly hp = to_pp(h);
        for (const auto& [lab, c] : hp.coeffs()) {
            for (const auto& [toU, toV, mult] : partition_splits(lab.lam)) {
                RatFunc w = c * RatFunc(mult, params);
                for (int r : toV.parts()) w *= -(q.pow(r) * (one - t.pow(r)) / (one - q.pow(r) * t.pow(r)));
                PairLabel key{toU, toV.union_with(lab.mu)};
                auto it = out.find(key);
                if (it == out.end()) out.emplace(key, w);
                else it->second += w;
            }
        }
        return out;
    };
    auto fu = uv_coords(f), gu = uv_coords(g);
    RatFunc acc(0, params);
    for (const auto& [p, cf] : fu) {
        auto it = gu.find(p);
        if (it == gu.end() || cf.is_zero() || it->second.is_zero()) continue;
        acc += cf * it->second * q.pow(p.lam.degree()) * z_qt(p.lam, q, q * t) * z_qt(p.mu, q * t, t);
    }
    return acc;
}

RatFunc b_hall_scalar(const BiSymPoly& f, const BiSymPoly& g) {
    BiSymPoly fm = convert(f, BiBasis::PM);
    BiSymPoly gm = convert(g, BiBasis::PM);
    ParamsPtr params = fm.params();
    RatFunc acc(0, params);
    for (const auto& [p, cf] : fm.coeffs()) {
        RatFunc cg = gm.coeff(p);
        if (cg.is_zero()) continue;
        mpz_class w = p.lam.z_factor() * p.mu.z_factor();
        mpz_class two = 1;
        two <<= static_cast<unsigned>(p.lam.length() + p.mu.length());
        mpz_class wz = w * two;
        acc += cf * cg * RatFunc(wz, params);
    }
    return acc;
}

RatFunc biscalar_alpha(const BiSymPoly& f, const BiSymPoly& g, const RatFunc& A, std::optional<int> cap) {
    BiSymPoly fs = cap ? convert_capped(f, BiBasis::SP, *cap) : convert(f, BiBasis::SP);
    BiSymPoly gs = cap ? convert_capped(g, BiBasis::SP, *cap) : convert(g, BiBasis::SP);
    RatFunc acc(0, A.params());
    for (const auto& [p, cf] : fs.coeffs()) {
        RatFunc cg = gs.coeff(p);
        if (cg.is_zero()) continue;
        acc += cf * cg * A.pow(p.mu.length()) * RatFunc(p.mu.z_factor(), A.params());
    }
    return acc;
}

}  // namespace bmac
