#ifndef BMAC_PARTITION_HPP
#define BMAC_PARTITION_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "bmac/ratfunc.hpp"

namespace bmac {

// Weakly decreasing list of positive integers; the empty list is the empty
// partition. Stored without trailing zeros.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int degree() const;
    // 1-based; zero beyond the length.
    int part(int i) const;
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool contains(const Partition& inner) const;
    // Entrywise sum (shorter one padded with zeros).
    Partition plus(const Partition& o) const;
    // Multiset union of parts, re-sorted.
    Partition union_with(const Partition& o) const;

    // Staircase (m-1, m-2, ..., 1, 0).
    static Partition staircase(int m);

    int arm(int row, int col) const;
    int leg(int row, int col) const;
    int coarm(int row, int col) const { check_cell(row, col); return col - 1; }
    int coleg(int row, int col) const { check_cell(row, col); return row - 1; }
    bool has_cell(int row, int col) const;

    // n(lambda) = sum_i (i-1) lambda_i.
    long n_stat() const;
    // z_lambda = prod_i i^{m_i} m_i!.
    mpz_class z_factor() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    // Total order usable as a map key: by degree, then reverse lex.
    bool operator<(const Partition& o) const;

    std::string to_string() const;  // "3,1"; empty partition -> ""
    static Partition parse(const std::string& text);

    // All partitions of n, in descending lex order ((n) first, (1^n) last).
    static std::vector<Partition> all(int n);
    // All partitions of degree <= n.
    static std::vector<Partition> all_up_to(int n);

private:
    void check_cell(int row, int col) const;
    std::vector<int> parts_;
};

// lambda <= mu under dominance. Without `relaxed`, degrees must match.
// With `relaxed`, partial sums are compared even if degrees differ
// (then the relation is merely a preorder-style comparison).
bool dominance_leq(const Partition& a, const Partition& b, bool relaxed = false);

// Pair of partitions (lambda, mu) indexing the two-alphabet objects.
struct PairLabel {
    Partition lam, mu;

    PairLabel() = default;
    PairLabel(Partition l, Partition m) : lam(std::move(l)), mu(std::move(m)) {}

    int total_degree() const { return lam.degree() + mu.degree(); }
    PairLabel conjugate_swap() const { return PairLabel(mu.conjugate(), lam.conjugate()); }

    bool operator==(const PairLabel& o) const { return lam == o.lam && mu == o.mu; }
    bool operator!=(const PairLabel& o) const { return !(*this == o); }
    bool operator<(const PairLabel& o) const;

    std::string to_string() const;  // "3,1|2"
    static PairLabel parse(const std::string& text);

    static std::vector<PairLabel> all(int n);
};

// (lambda,mu) <= (omega,eta); total degrees must agree.
bool pair_dominance_leq(const PairLabel& a, const PairLabel& b);

// Linear extension of the pair dominance order, highest label first: sorted
// by descending lex on (Lambda*, Lambda~) of the associated stable
// superpartition. This is also the row order of the coefficient tables.
std::vector<PairLabel> pair_labels_descending(int n);

// Superpartition (Lambda^a; Lambda^s): Lambda^a strictly decreasing, last
// entry may be zero; Lambda^s an ordinary partition.
class SuperPartition {
public:
    SuperPartition() = default;
    SuperPartition(std::vector<int> anti, Partition sym);

    int fermionic_degree() const { return static_cast<int>(anti_.size()); }
    const std::vector<int>& anti() const { return anti_; }
    const Partition& sym() const { return sym_; }
    int star_degree() const;  // |Lambda*|

    Partition star() const;     // Lambda* = anti cup sym
    Partition circled() const;  // Lambda~ = (anti + 1^m) cup sym

    // Per row of circled(): true if the row ends with a circle. Rows with
    // equal circled-length put the non-fermionic row first.
    std::vector<bool> fermionic_rows() const;
    // Column j (1-based) ends with a circle iff j == anti_k + 1 for some k.
    std::vector<bool> fermionic_cols() const;

    static SuperPartition from_star_pair(const Partition& star, const Partition& circled);
    static SuperPartition from_pair(const PairLabel& p, int m);
    PairLabel to_pair() const;  // (anti - staircase, sym)

    SuperPartition conjugate() const;

    struct Stats {
        std::vector<std::pair<int, int>> bosonic_boxes;
        std::vector<std::pair<int, int>> fermionic_boxes;
        long d_B = 0;
        long d_F = 0;
        long n_skew = 0;  // n(Lambda~ / staircase(m+1))
    };
    Stats stats() const;

    // Superpartitions obtained by turning one circle into a box (fermionic
    // degree drops by one), with the sign (-1)^{#circles above}.
    std::vector<std::pair<SuperPartition, int>> circle_replacements() const;

    bool operator==(const SuperPartition& o) const { return anti_ == o.anti_ && sym_ == o.sym_; }
    bool operator!=(const SuperPartition& o) const { return !(*this == o); }
    bool operator<(const SuperPartition& o) const;

    std::string to_string() const;  // "3,1,0;2,1"
    static SuperPartition parse(const std::string& text);

    // All superpartitions with |Lambda*| = n and fermionic degree m.
    static std::vector<SuperPartition> all(int n, int m);

private:
    std::vector<int> anti_;
    Partition sym_;
};

// L <= O iff L* <= O* and L~ <= O~ under dominance. Fermionic degrees and
// star degrees must agree.
bool super_dominance_leq(const SuperPartition& L, const SuperPartition& O);

// Linear extension of super dominance, highest first (descending lex on
// (star, circled)).
std::vector<SuperPartition> super_labels_descending(int n, int m);

}  // namespace bmac

#endif
