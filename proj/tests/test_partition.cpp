#include "bmac/partition.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"

using namespace bmac;

TEST_CASE("conjugation") {
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition().conjugate() == Partition());
    CHECK(Partition{2, 2, 1}.conjugate() == Partition{3, 2});
    for (const auto& p : Partition::all_up_to(6))
        CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("arms and legs") {
    Partition p{3, 1};
    CHECK(p.arm(1, 1) == 2);
    CHECK(p.leg(1, 1) == 1);
    CHECK(p.coarm(1, 1) == 0);
    CHECK(p.coleg(1, 1) == 0);
    CHECK(p.arm(1, 3) == 0);
    CHECK(p.leg(1, 3) == 0);
    CHECK(p.coarm(1, 3) == 2);

    Partition big{4, 2, 2, 1, 1};
    CHECK(big.arm(2, 1) == 1);
    CHECK(big.leg(2, 1) == 3);
    CHECK(big.coarm(2, 1) == 0);
    CHECK(big.coleg(2, 1) == 1);

    CHECK_THROWS_AS(p.arm(2, 2), MathError);
}

TEST_CASE("n statistic") {
    CHECK(Partition{3, 1}.n_stat() == 1);
    CHECK(Partition().n_stat() == 0);
    CHECK(Partition{2, 2, 1}.n_stat() == 4);
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(Partition{1, 1, 1}, Partition{3}));
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
    // unequal degrees: strict order rejects, relaxed compares partial sums
    CHECK_FALSE(dominance_leq(Partition{2, 1}, Partition{1, 1, 1, 1}));
    CHECK_FALSE(dominance_leq(Partition{1, 1, 1, 1}, Partition{2, 1}, true));
    CHECK(dominance_leq(Partition{2, 1}, Partition{3, 1}, true));
}

TEST_CASE("pair dominance") {
    PairLabel a(Partition{1}, Partition{1});
    PairLabel b(Partition{2}, Partition());
    CHECK(pair_dominance_leq(a, b));
    CHECK(pair_dominance_leq(PairLabel(Partition(), Partition{2}), a));
    CHECK(pair_dominance_leq(b, b));
    CHECK_THROWS_AS(pair_dominance_leq(a, PairLabel(Partition{1}, Partition())), MathError);
}

TEST_CASE("superpartition from pair") {
    SuperPartition L = SuperPartition::from_pair({Partition(), Partition{2}}, 2);
    CHECK(L == SuperPartition({1, 0}, Partition{2}));
    CHECK(SuperPartition::from_pair({Partition(), Partition()}, 0) ==
          SuperPartition({}, Partition()));
    SuperPartition big = SuperPartition::from_pair({Partition{2}, Partition{3, 1}}, 6);
    CHECK(big == SuperPartition({7, 4, 3, 2, 1, 0}, Partition{3, 1}));
    CHECK(big.to_pair() == PairLabel(Partition{2}, Partition{3, 1}));
    CHECK_THROWS_AS(SuperPartition::from_pair({Partition{1, 1}, Partition()}, 1), MathError);
}

TEST_CASE("star and circled diagrams") {
    SuperPartition L({3, 1, 0}, Partition{2, 1});
    CHECK(L.star() == Partition{3, 2, 1, 1});
    CHECK(L.circled() == Partition{4, 2, 2, 1, 1});
    auto rows = L.fermionic_rows();
    REQUIRE(rows.size() == 5);
    CHECK(rows[0]);
    CHECK_FALSE(rows[1]);
    CHECK(rows[2]);
    CHECK_FALSE(rows[3]);
    CHECK(rows[4]);
}

TEST_CASE("super dominance") {
    SuperPartition L({1, 0}, Partition{2});
    SuperPartition O({1, 0}, Partition{1, 1});
    CHECK(super_dominance_leq(O, L));
    CHECK(super_dominance_leq(L, L));
    SuperPartition A({2, 0}, Partition{1});
    SuperPartition B({1, 0}, Partition{2});
    CHECK(super_dominance_leq(B, A));
    CHECK_FALSE(super_dominance_leq(A, B));
}

TEST_CASE("super conjugation") {
    SuperPartition big = SuperPartition::from_pair({Partition{2}, Partition{3, 1}}, 6);
    CHECK(big.conjugate().to_pair() == PairLabel(Partition{2, 1, 1}, Partition{1, 1}));
    SuperPartition zero({0}, Partition());
    CHECK(zero.conjugate() == zero);
    SuperPartition L({3, 1, 0}, Partition{2, 1});
    CHECK(L.conjugate().conjugate() == L);
    // transpose oracle: star and circled diagrams transpose
    CHECK(L.conjugate().star() == L.star().conjugate());
    CHECK(L.conjugate().circled() == L.circled().conjugate());
}

TEST_CASE("super statistics") {
    SuperPartition L({3, 1, 0}, Partition{2, 1});
    auto st = L.stats();
    std::vector<std::pair<int, int>> bosonic = {{1, 3}, {2, 1}, {2, 2}, {4, 1}};
    CHECK(st.bosonic_boxes == bosonic);
    CHECK(st.d_B == 4);
    CHECK(st.d_F == 1);
    // n(circled) - n(staircase(4)) = 13 - 4
    CHECK(st.n_skew == 9);
}

TEST_CASE("circle replacements") {
    SuperPartition L({2, 0}, Partition{2});
    auto reps = L.circle_replacements();
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].first == SuperPartition({0}, Partition{3, 2}));
    CHECK(reps[0].second == 1);
    CHECK(reps[1].first == SuperPartition({2}, Partition{2, 1}));
    CHECK(reps[1].second == -1);
}

TEST_CASE("label enumeration") {
    CHECK(PairLabel::all(2).size() == 5);
    CHECK(PairLabel::all(3).size() == 10);
    CHECK(PairLabel::all(4).size() == 20);
    CHECK(SuperPartition::all(3, 1).size() == 7);
    CHECK(SuperPartition::all(4, 2).size() == 9);
    // descending orders are linear extensions of the partial orders
    for (int n = 1; n <= 4; ++n) {
        auto labels = pair_labels_descending(n);
        for (size_t i = 0; i < labels.size(); ++i)
            for (size_t j = i + 1; j < labels.size(); ++j)
                CHECK_FALSE((pair_dominance_leq(labels[i], labels[j]) && !(labels[i] == labels[j])));
    }
    for (int m : {1, 2}) {
        auto labels = super_labels_descending(3, m);
        for (size_t i = 0; i < labels.size(); ++i)
            for (size_t j = i + 1; j < labels.size(); ++j)
                CHECK_FALSE((super_dominance_leq(labels[i], labels[j]) && !(labels[i] == labels[j])));
    }
}

TEST_CASE("text forms") {
    CHECK(Partition::parse("3,1") == Partition{3, 1});
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition{3, 1}.to_string() == "3,1");
    CHECK(PairLabel::parse("3,1|2") == PairLabel(Partition{3, 1}, Partition{2}));
    CHECK(PairLabel::parse("|") == PairLabel());
    CHECK(PairLabel(Partition{3, 1}, Partition{2}).to_string() == "3,1|2");
    CHECK(SuperPartition::parse("3,1,0;2,1") == SuperPartition({3, 1, 0}, Partition{2, 1}));
    CHECK(SuperPartition::parse("0;") == SuperPartition({0}, Partition()));
    CHECK(SuperPartition({3, 1, 0}, Partition{2, 1}).to_string() == "3,1,0;2,1");
    CHECK_THROWS_AS(Partition::parse("1,3"), MathError);
}
