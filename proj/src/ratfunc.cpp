#include "bmac/ratfunc.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace bmac {

Params::Params(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxVars) throw MathError("too many parameters");
}

const ParamsPtr& Params::qt() {
    static const ParamsPtr p = std::make_shared<Params>(std::vector<std::string>{"q", "t"});
    return p;
}
const ParamsPtr& Params::qtu() {
    static const ParamsPtr p = std::make_shared<Params>(std::vector<std::string>{"q", "t", "u"});
    return p;
}
const ParamsPtr& Params::alpha() {
    static const ParamsPtr p = std::make_shared<Params>(std::vector<std::string>{"a"});
    return p;
}

int Params::index_of(const std::string& n) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == n) return static_cast<int>(i);
    return -1;
}

// ---------------------------------------------------------------------------
// MPoly

namespace {
int exps_total(const Exps& e) { return e[0] + e[1] + e[2]; }
}  // namespace

bool MPoly::GradedLexLess::operator()(const Exps& a, const Exps& b) const {
    int da = exps_total(a), db = exps_total(b);
    if (da != db) return da < db;
    return a < b;
}

MPoly MPoly::constant(int nvars, const mpz_class& c) {
    MPoly p(nvars);
    if (c != 0) p.terms_[{0, 0, 0}] = c;
    return p;
}

MPoly MPoly::variable(int nvars, int index, int power) {
    if (index < 0 || index >= nvars) throw MathError("variable index out of range");
    MPoly p(nvars);
    Exps e{0, 0, 0};
    e[static_cast<size_t>(index)] = power;
    p.terms_[e] = 1;
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exps{0, 0, 0};
}

mpz_class MPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw MathError("not a constant polynomial");
    return terms_.begin()->second;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return exps_total(terms_.rbegin()->first);
}

int MPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(var)]);
    return d;
}

void MPoly::add_term(const Exps& e, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exps e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly MPoly::mul_term(const Exps& e, const mpz_class& c) const {
    MPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [ea, ca] : terms_)
        r.terms_[{ea[0] + e[0], ea[1] + e[1], ea[2] + e[2]}] = ca * c;
    return r;
}

const std::pair<const Exps, mpz_class>& MPoly::leading() const {
    if (terms_.empty()) throw MathError("leading term of zero polynomial");
    return *terms_.rbegin();
}

MPoly MPoly::exact_div(const MPoly& d) const {
    if (d.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    MPoly q(nvars_);
    MPoly r = *this;
    const auto& dl = d.leading();
    while (!r.is_zero()) {
        const auto& rl = r.leading();
        Exps e;
        for (int i = 0; i < kMaxVars; ++i) {
            e[static_cast<size_t>(i)] = rl.first[static_cast<size_t>(i)] - dl.first[static_cast<size_t>(i)];
            if (e[static_cast<size_t>(i)] < 0) throw MathError("inexact polynomial division");
        }
        mpz_class c, rem;
        mpz_fdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), rl.second.get_mpz_t(), dl.second.get_mpz_t());
        if (rem != 0) throw MathError("inexact polynomial division");
        q.add_term(e, c);
        r = r - d.mul_term(e, c);
    }
    return q;
}

bool MPoly::divides(const MPoly& d, MPoly* quotient) const {
    try {
        MPoly q = exact_div(d);
        if (quotient) *quotient = q;
        return true;
    } catch (const MathError&) {
        return false;
    }
}

mpz_class MPoly::int_content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_class a = abs(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

MPoly MPoly::frobenius(int r) const {
    MPoly p(nvars_);
    for (const auto& [e, c] : terms_)
        p.terms_[{e[0] * r, e[1] * r, e[2] * r}] = c;
    return p;
}

namespace {

// Coefficient of x_var^k, with the x_var exponent cleared.
MPoly coeff_in_var(const MPoly& f, int var, int k) {
    MPoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (e[static_cast<size_t>(var)] != k) continue;
        Exps e2 = e;
        e2[static_cast<size_t>(var)] = 0;
        r.add_term(e2, c);
    }
    return r;
}

MPoly content_in_var(const MPoly& f, int var) {
    MPoly g(f.nvars());
    int d = f.degree_in(var);
    for (int k = 0; k <= d; ++k) {
        MPoly c = coeff_in_var(f, var, k);
        if (!c.is_zero()) g = MPoly::gcd(g, c);
    }
    return g;
}

MPoly primitive_in_var(const MPoly& f, int var) {
    if (f.is_zero()) return f;
    return f.exact_div(content_in_var(f, var));
}

// Pseudo-remainder of a by b with respect to x_var.
MPoly pseudo_rem(MPoly a, const MPoly& b, int var) {
    int db = b.degree_in(var);
    MPoly lb = coeff_in_var(b, var, db);
    while (!a.is_zero()) {
        int da = a.degree_in(var);
        if (da < db) break;
        MPoly la = coeff_in_var(a, var, da);
        Exps shift{0, 0, 0};
        shift[static_cast<size_t>(var)] = da - db;
        MPoly shifted(a.nvars());
        for (const auto& [e, c] : la.terms()) {
            Exps e2{e[0] + shift[0], e[1] + shift[1], e[2] + shift[2]};
            shifted.add_term(e2, c);
        }
        a = a * lb - shifted * b;
    }
    return a;
}

MPoly normalize_sign(MPoly p) {
    if (p.is_zero()) return p;
    if (p.leading().second < 0) return -p;
    return p;
}

}  // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    if (a.is_constant() && b.is_constant()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.constant_value().get_mpz_t(), b.constant_value().get_mpz_t());
        return MPoly::constant(a.nvars(), g);
    }
    int var = -1;
    for (int i = 0; i < a.nvars(); ++i) {
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
            var = i;
            break;
        }
    }
    if (var < 0) throw MathError("gcd: inconsistent state");

    MPoly ca = content_in_var(a, var), cb = content_in_var(b, var);
    MPoly cg = gcd(ca, cb);
    MPoly pa = a.exact_div(ca), pb = b.exact_div(cb);

    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    // Primitive pseudo-remainder sequence.
    while (!pb.is_zero()) {
        MPoly r = pseudo_rem(pa, pb, var);
        pa = pb;
        pb = primitive_in_var(r, var);
    }
    return normalize_sign(cg * primitive_in_var(pa, var));
}

std::string MPoly::to_string(const Params& params) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class a = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? "-" : "+");
        }
        bool has_vars = exps_total(e) > 0;
        bool printed = false;
        if (!has_vars || a != 1) {
            out << a.get_str();
            printed = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            int p = e[static_cast<size_t>(i)];
            if (p == 0) continue;
            if (printed) out << "*";
            out << params.name(i);
            if (p != 1) out << "^" << p;
            printed = true;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc() : params_(Params::qt()), num_(params_->size()), den_(MPoly::constant(params_->size(), 1)) {}

RatFunc::RatFunc(long v, ParamsPtr params)
    : params_(std::move(params)),
      num_(MPoly::constant(params_->size(), mpz_class(v))),
      den_(MPoly::constant(params_->size(), 1)) {}

RatFunc::RatFunc(const mpz_class& v, ParamsPtr params)
    : params_(std::move(params)),
      num_(MPoly::constant(params_->size(), v)),
      den_(MPoly::constant(params_->size(), 1)) {}

RatFunc::RatFunc(const mpq_class& v, ParamsPtr params)
    : params_(std::move(params)),
      num_(MPoly::constant(params_->size(), v.get_num())),
      den_(MPoly::constant(params_->size(), v.get_den())) {}

RatFunc::RatFunc(MPoly num, MPoly den, ParamsPtr params)
    : params_(std::move(params)), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    reduce();
}

RatFunc RatFunc::var(const std::string& name, ParamsPtr params) {
    int i = params->index_of(name);
    if (i < 0) throw MathError("unknown parameter: " + name);
    return RatFunc(MPoly::variable(params->size(), i), MPoly::constant(params->size(), 1), params);
}

RatFunc RatFunc::from_mpq(const mpq_class& v, ParamsPtr params) { return RatFunc(v, std::move(params)); }

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = MPoly::constant(params_->size(), 1);
        return;
    }
    MPoly g = MPoly::gcd(num_, den_);
    if (!(g.is_constant() && g.constant_value() == 1)) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    if (den_.leading().second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool RatFunc::is_one() const { return num_ == den_ && !num_.is_zero(); }

bool RatFunc::is_integral_poly() const { return den_.is_constant() && den_.constant_value() == 1; }

bool RatFunc::is_nonneg_laurent() const {
    if (den_.term_count() > 1) return false;
    if (is_zero()) return true;
    if (den_.leading().second != 1) return false;
    for (const auto& [e, c] : num_.terms())
        if (c < 0) return false;
    return true;
}

bool RatFunc::is_integral_laurent() const {
    if (is_zero()) return true;
    return den_.term_count() == 1 && den_.leading().second == 1;
}

mpq_class RatFunc::constant_value() const {
    if (!is_constant()) throw MathError("not a constant");
    mpq_class v(num_.constant_value(), den_.constant_value());
    v.canonicalize();
    return v;
}

namespace {
void align(RatFunc& a, RatFunc& b) {
    if (a.params() == b.params() || *a.params() == *b.params()) return;
    if (a.is_constant()) {
        a = RatFunc(a.constant_value(), b.params());
        return;
    }
    if (b.is_constant()) {
        b = RatFunc(b.constant_value(), a.params());
        return;
    }
    throw MathError("parameter list mismatch");
}
}  // namespace

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    RatFunc a = *this, b = o;
    align(a, b);
    MPoly g = MPoly::gcd(a.den_, b.den_);
    MPoly db = b.den_.exact_div(g);
    MPoly da = a.den_.exact_div(g);
    return RatFunc(a.num_ * db + b.num_ * da, a.den_ * db, a.params_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    RatFunc a = *this, b = o;
    align(a, b);
    if (a.is_zero() || b.is_zero()) return RatFunc(0, a.params_);
    MPoly g1 = MPoly::gcd(a.num_, b.den_);
    MPoly g2 = MPoly::gcd(b.num_, a.den_);
    MPoly n = a.num_.exact_div(g1) * b.num_.exact_div(g2);
    MPoly d = a.den_.exact_div(g2) * b.den_.exact_div(g1);
    return RatFunc(std::move(n), std::move(d), a.params_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZeroError("division by zero rational function");
    return *this * o.inverse();
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    return RatFunc(den_, num_, params_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r(1, params_);
    RatFunc base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
    RatFunc a = *this, b = o;
    align(a, b);
    return a.num_ == b.num_ && a.den_ == b.den_;
}

RatFunc RatFunc::frobenius(int r) const {
    if (r == 1) return *this;
    return RatFunc(num_.frobenius(r), den_.frobenius(r), params_);
}

namespace {
RatFunc eval_poly(const MPoly& p, const std::vector<std::vector<RatFunc>>& powers, const ParamsPtr& target) {
    RatFunc acc(0, target);
    for (const auto& [e, c] : p.terms()) {
        RatFunc term(c, target);
        for (size_t i = 0; i < powers.size(); ++i) {
            int k = e[i];
            if (k > 0) term *= powers[i][static_cast<size_t>(k)];
        }
        acc += term;
    }
    return acc;
}
}  // namespace

RatFunc RatFunc::substitute(const std::map<std::string, RatFunc>& bindings) const {
    ParamsPtr target;
    for (const auto& [k, v] : bindings) {
        if (!target) target = v.params();
        else if (!(*target == *v.params())) throw MathError("substitute: mixed parameter lists");
    }
    if (!target) target = params_;

    int nv = params_->size();
    std::vector<std::vector<RatFunc>> powers(static_cast<size_t>(nv));
    int maxdeg_num = 0, maxdeg_den = 0;
    for (int i = 0; i < nv; ++i) {
        maxdeg_num = std::max(maxdeg_num, num_.degree_in(i));
        maxdeg_den = std::max(maxdeg_den, den_.degree_in(i));
    }
    int maxdeg = std::max(maxdeg_num, maxdeg_den);
    for (int i = 0; i < nv; ++i) {
        RatFunc base;
        auto it = bindings.find(params_->name(i));
        if (it != bindings.end()) base = it->second;
        else base = RatFunc::var(params_->name(i), target);
        auto& pw = powers[static_cast<size_t>(i)];
        pw.resize(static_cast<size_t>(maxdeg) + 1, RatFunc(1, target));
        for (int k = 1; k <= maxdeg; ++k) pw[static_cast<size_t>(k)] = pw[static_cast<size_t>(k - 1)] * base;
    }
    RatFunc n = eval_poly(num_, powers, target);
    RatFunc d = eval_poly(den_, powers, target);
    if (d.is_zero()) throw PoleError("pole after substitution");
    return n / d;
}

RatFunc RatFunc::substitute(const std::string& name, const RatFunc& value) const {
    return substitute(std::map<std::string, RatFunc>{{name, value}});
}

std::string RatFunc::to_string() const {
    std::string n = num_.to_string(*params_);
    if (is_integral_poly()) return n;
    return "(" + n + ")/(" + den_.to_string(*params_) + ")";
}

RatFunc operator*(long a, const RatFunc& b) { return RatFunc(a, b.params()) * b; }

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    ParamsPtr params;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    RatFunc parse_expr() {
        RatFunc v = parse_term();
        for (;;) {
            if (eat('+')) v += parse_term();
            else if (eat('-')) v -= parse_term();
            else return v;
        }
    }

    RatFunc parse_term() {
        RatFunc v = parse_factor();
        for (;;) {
            if (eat('*')) v *= parse_factor();
            else if (eat('/')) v /= parse_factor();
            else return v;
        }
    }

    RatFunc parse_factor() {
        bool neg = false;
        for (;;) {
            if (eat('-')) neg = !neg;
            else if (eat('+')) continue;
            else break;
        }
        RatFunc v = parse_atom();
        if (eat('^')) v = v.pow(parse_int());
        return neg ? -v : v;
    }

    long parse_int() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer in: " + s);
        long v = std::stol(s.substr(start, pos - start));
        return neg ? -v : v;
    }

    RatFunc parse_atom() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of expression: " + s);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            RatFunc v = parse_expr();
            if (!eat(')')) throw ParseError("missing ')' in: " + s);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return RatFunc(mpz_class(s.substr(start, pos - start)), params);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            return RatFunc::var(s.substr(start, pos - start), params);
        }
        throw ParseError(std::string("unexpected character '") + c + "' in: " + s);
    }
};

}  // namespace

RatFunc RatFunc::parse(const std::string& text, ParamsPtr params) {
    Parser p{text, 0, std::move(params)};
    RatFunc v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input in: " + text);
    return v;
}

}  // namespace bmac
