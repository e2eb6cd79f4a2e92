#ifndef BMAC_SYMFUNC_HPP
#define BMAC_SYMFUNC_HPP

#include <functional>
#include <map>
#include <vector>

#include "bmac/partition.hpp"
#include "bmac/ratfunc.hpp"

namespace bmac {

enum class OneBasis { M, E, H, P, S };

std::string basis_name(OneBasis b);
OneBasis parse_one_basis(const std::string& name);

// One-alphabet symmetric function: finite coefficient map over partition
// labels, tagged with the basis. Mixed degrees are allowed.
class SymPoly {
public:
    SymPoly() : basis_(OneBasis::M) {}
    explicit SymPoly(OneBasis b) : basis_(b) {}

    static SymPoly basis_element(OneBasis b, const Partition& p, const ParamsPtr& params = Params::qt());
    static SymPoly one(OneBasis b, const ParamsPtr& params = Params::qt());

    OneBasis basis() const { return basis_; }
    const std::map<Partition, RatFunc>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    RatFunc coeff(const Partition& p) const;
    void add_term(const Partition& p, const RatFunc& v);
    SymPoly scaled(const RatFunc& v) const;
    SymPoly operator+(const SymPoly& o) const;  // same basis
    SymPoly operator-(const SymPoly& o) const;

    bool operator==(const SymPoly& o) const { return basis_ == o.basis_ && c_ == o.c_; }

private:
    OneBasis basis_;
    std::map<Partition, RatFunc> c_;
};

// Exact change of basis; round trips are the identity.
SymPoly change_basis(const SymPoly& f, OneBasis target);

// Product, computed in the power-sum basis, returned in f's basis.
SymPoly multiply(const SymPoly& f, const SymPoly& g);

// s_a * s_b = sum c^lam_{a,b} s_lam, via monomial expansion of the product.
std::map<Partition, long> littlewood_richardson(const Partition& a, const Partition& b);
long lr_coeff(const Partition& lam, const Partition& a, const Partition& b);

// z_lambda(Q,T) = z_lambda prod (1-Q^{lambda_i})/(1-T^{lambda_i}).
RatFunc z_qt(const Partition& lam, const RatFunc& Q, const RatFunc& T);

// <p_lam, p_mu>_{Q,T} = delta z_lam(Q,T), extended bilinearly.
RatFunc qt_scalar(const SymPoly& f, const SymPoly& g, const RatFunc& Q, const RatFunc& T);
// Hall scalar product (q = t).
RatFunc hall_scalar(const SymPoly& f, const SymPoly& g);
// <p_lam, p_mu> = delta A^{len(lam)} z_lam (the alpha deformation).
RatFunc alpha_scalar(const SymPoly& f, const SymPoly& g, const RatFunc& A);

// Triangular Gram-Schmidt over an ordered label list (lowest first).
// gram(i,j) is the scalar product of the leading-basis elements i and j.
// Returns, for each k, coefficients c_{k,i} (i <= k, c_{k,k} = 1) of the
// unique element leading(k) + lower terms orthogonal to all previous ones.
// Throws MathError on a singular Gram system.
std::vector<std::map<size_t, RatFunc>> gram_schmidt(
    size_t nlabels, const std::function<RatFunc(size_t, size_t)>& gram);

// Cached expansion of a basis element in another basis.
const SymPoly& cached_expansion(OneBasis from, OneBasis to, const Partition& p);

// Per-degree transition tables (exact rational matrices), cached.
struct DegreeTables {
    std::vector<Partition> labels;
    std::map<Partition, int> index;
    // to_m[b][i][j]: coefficient of m_{labels[j]} in basis-b element labels[i].
    // Bases indexed E=0, H=1, P=2, S=3.
    std::vector<std::vector<std::vector<mpq_class>>> to_m;
    std::vector<std::vector<std::vector<mpq_class>>> from_m;
};
const DegreeTables& degree_tables(int degree);

}  // namespace bmac

#endif
