#ifndef BMAC_RATFUNC_HPP
#define BMAC_RATFUNC_HPP

#include <array>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bmac {

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivisionByZeroError : MathError {
    using MathError::MathError;
};
struct PoleError : MathError {
    using MathError::MathError;
};
struct ParseError : MathError {
    using MathError::MathError;
};

// Named parameter list for a coefficient field, e.g. {"q","t"} or {"a"}.
// Shared by all values of one computation; mixing lists is an error except
// where one side is a constant.
class Params {
public:
    explicit Params(std::vector<std::string> names);

    static const std::shared_ptr<const Params>& qt();
    static const std::shared_ptr<const Params>& qtu();
    static const std::shared_ptr<const Params>& alpha();

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
    int index_of(const std::string& n) const;  // -1 if absent
    bool operator==(const Params& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using ParamsPtr = std::shared_ptr<const Params>;

constexpr int kMaxVars = 3;
using Exps = std::array<int, kMaxVars>;

// Integer-coefficient polynomial in at most kMaxVars named variables.
// Terms are kept in ascending graded-lex order (total degree, then the
// exponent of the first variable, and so on).
class MPoly {
public:
    struct GradedLexLess {
        bool operator()(const Exps& a, const Exps& b) const;
    };
    using TermMap = std::map<Exps, mpz_class, GradedLexLess>;

    MPoly() : nvars_(0) {}
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly constant(int nvars, const mpz_class& c);
    static MPoly variable(int nvars, int index, int power = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term as integer; requires is_constant().
    mpz_class constant_value() const;
    int total_degree() const;
    int degree_in(int var) const;
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exps& e, const mpz_class& c);

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly mul_term(const Exps& e, const mpz_class& c) const;
    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    // Leading term under graded-lex.
    const std::pair<const Exps, mpz_class>& leading() const;

    // Exact division; throws MathError if the division is not exact.
    MPoly exact_div(const MPoly& d) const;
    bool divides(const MPoly& d, MPoly* quotient) const;  // d | *this ?

    // gcd of integer contents of all terms (nonnegative; 0 for zero poly).
    mpz_class int_content() const;

    // Every variable exponent multiplied by r (x -> x^r).
    MPoly frobenius(int r) const;

    static MPoly gcd(const MPoly& a, const MPoly& b);

    std::string to_string(const Params& params) const;

private:
    int nvars_;
    TermMap terms_;
};

// Element of the fraction field of MPoly in canonical reduced form:
// gcd(num, den) = 1, leading coefficient of den positive, zero is 0/1.
class RatFunc {
public:
    RatFunc();  // zero over the qt parameter list
    explicit RatFunc(long v, ParamsPtr params = Params::qt());
    explicit RatFunc(const mpz_class& v, ParamsPtr params = Params::qt());
    explicit RatFunc(const mpq_class& v, ParamsPtr params = Params::qt());
    RatFunc(MPoly num, MPoly den, ParamsPtr params);

    static RatFunc var(const std::string& name, ParamsPtr params = Params::qt());
    static RatFunc from_mpq(const mpq_class& v, ParamsPtr params = Params::qt());
    // Parses "+,-,*,/,^", integers, parameter names, parentheses.
    static RatFunc parse(const std::string& text, ParamsPtr params = Params::qt());

    const ParamsPtr& params() const { return params_; }
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // Denominator is the constant 1 (integer-coefficient polynomial).
    bool is_integral_poly() const;
    // Denominator is constant (rational-coefficient polynomial).
    bool is_poly() const { return den_.is_constant(); }
    // Laurent polynomial with nonnegative integer coefficients: denominator a
    // single monomial with coefficient 1 and all numerator coefficients >= 0.
    bool is_nonneg_laurent() const;
    bool is_integral_laurent() const;
    mpq_class constant_value() const;  // requires is_constant()

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    RatFunc inverse() const;
    RatFunc pow(long e) const;

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // All parameters raised to the r-th power (plethystic twist of scalars).
    RatFunc frobenius(int r) const;

    // Exact substitution; parameters absent from the map are preserved.
    // Throws PoleError if the denominator vanishes.
    RatFunc substitute(const std::map<std::string, RatFunc>& bindings) const;
    RatFunc substitute(const std::string& name, const RatFunc& value) const;

    std::string to_string() const;

private:
    void reduce();

    ParamsPtr params_;
    MPoly num_, den_;
};

RatFunc operator*(long a, const RatFunc& b);

}  // namespace bmac

#endif
