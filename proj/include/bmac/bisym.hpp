#ifndef BMAC_BISYM_HPP
#define BMAC_BISYM_HPP

#include <map>
#include <optional>
#include <vector>

#include "bmac/partition.hpp"
#include "bmac/ratfunc.hpp"
#include "bmac/symfunc.hpp"

namespace bmac {

// Bases of the bisymmetric algebra, indexed by pairs of partitions:
//   PP: p_lam[X] p_mu[Y]        (canonical, multiplicative)
//   SM: s_lam[X] m_mu[Y]
//   SP: s_lam[X] p_mu[X+Y]
//   SS: s_lam[X] s_mu[Y]
//   PM: p_lam[X+Y] p_mu[X-Y]
enum class BiBasis { PP, SM, SP, SS, PM };

std::string bibasis_name(BiBasis b);
BiBasis parse_bibasis(const std::string& name);

class BiSymPoly {
public:
    BiSymPoly() : basis_(BiBasis::PP) {}
    explicit BiSymPoly(BiBasis b) : basis_(b) {}

    static BiSymPoly basis_element(BiBasis b, const PairLabel& p, const ParamsPtr& params = Params::qt());
    static BiSymPoly one(BiBasis b, const ParamsPtr& params = Params::qt());

    BiBasis basis() const { return basis_; }
    const std::map<PairLabel, RatFunc>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    RatFunc coeff(const PairLabel& p) const;
    void add_term(const PairLabel& p, const RatFunc& v);
    BiSymPoly scaled(const RatFunc& v) const;
    BiSymPoly operator+(const BiSymPoly& o) const;
    BiSymPoly operator-(const BiSymPoly& o) const;
    bool operator==(const BiSymPoly& o) const { return basis_ == o.basis_ && c_ == o.c_; }
    bool operator!=(const BiSymPoly& o) const { return !(*this == o); }

    // Applies f to every coefficient (substitutions, frobenius, ...).
    BiSymPoly map_coeffs(const std::function<RatFunc(const RatFunc&)>& f) const;

    ParamsPtr params() const;

private:
    BiBasis basis_;
    std::map<PairLabel, RatFunc> c_;
};

// Exact change of basis between any two of the five bases (routed through PP).
BiSymPoly convert(const BiSymPoly& f, BiBasis target);

// Change of basis between SM and SP in the algebra truncated to `cap`
// x-variables: Schur labels of length > cap vanish. With cap >= degree this
// agrees with the stable conversion.
BiSymPoly convert_capped(const BiSymPoly& f, BiBasis target, int cap);

// Product; computed in PP, returned in f's basis.
BiSymPoly bisym_multiply(const BiSymPoly& f, const BiSymPoly& g);

// f(x) tensor g(y) as a PP-basis element.
BiSymPoly tensor_xy(const SymPoly& fx, const SymPoly& gy);

// <<p_{lam,mu}, p_{om,eta}>>_{q,t} = delta delta q^{|lam|} z_mu(q,t),
// extended bilinearly over the SP basis. `cap` selects the truncated algebra
// (number of x variables) used to interpret SM labels; by default stable.
RatFunc biscalar_qt(const BiSymPoly& f, const BiSymPoly& g, std::optional<int> cap = std::nullopt);

// Diagonal on the basis u_lam v_mu = p_lam[X + q(1-t)/(1-qt) Y] p_mu[Y] with
// weights q^{|lam|} z_lam(q,qt) z_mu(qt,t).
RatFunc biscalar_primed(const BiSymPoly& f, const BiSymPoly& g);

// Hyperoctahedral Hall product: diagonal on PM with weight
// z_lam z_mu 2^{len(lam)+len(mu)}; Schur labels are orthonormal.
RatFunc b_hall_scalar(const BiSymPoly& f, const BiSymPoly& g);

// Jack limit of the two-alphabet scalar product:
// <p_{lam,mu}, p_{om,eta}> = delta delta A^{len(mu)} z_mu on the SP basis.
RatFunc biscalar_alpha(const BiSymPoly& f, const BiSymPoly& g, const RatFunc& A,
                       std::optional<int> cap = std::nullopt);

// Sub-multiset splittings of a partition with multinomial multiplicities:
// all (alpha, beta) with alpha cup beta = mu, and the number of ways to pick
// which copies of each part go to alpha.
std::vector<std::tuple<Partition, Partition, long>> partition_splits(const Partition& mu);

}  // namespace bmac

#endif
