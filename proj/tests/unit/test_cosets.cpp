#include <doctest.h>

#include <numeric>
#include <set>

#include "lcdc/cosets.hpp"
#include "lcdc/gf.hpp"

using namespace lcdc;
using u64 = std::uint64_t;

TEST_CASE("coset orbits") {
    CHECK(coset(15, 2, 1) == std::vector<u64>{1, 2, 4, 8});
    CHECK(coset(15, 2, 0) == std::vector<u64>{0});
    CHECK(coset(9, 2, 1) == std::vector<u64>{1, 2, 4, 5, 7, 8});
    CHECK_THROWS_AS((void)coset(9, 3, 1), std::invalid_argument);
}

TEST_CASE("partitions and the reduced leader set") {
    CosetPartition p = partition(15, 2);
    CHECK(p.gamma == std::vector<u64>{0, 1, 3, 5, 7});
    CHECK(p.pi == std::vector<u64>{0, 1, 3, 5});

    CosetPartition p7 = partition(7, 2);
    CHECK(p7.gamma == std::vector<u64>{0, 1, 3});
    CHECK(p7.pi == std::vector<u64>{0, 1});

    CosetPartition p23 = partition(2, 3);
    CHECK(p23.gamma == std::vector<u64>{0, 1});
    CHECK(p23.pi == std::vector<u64>{0, 1});

    CHECK(partition(26, 3).pi == std::vector<u64>{0, 1, 2, 4, 5, 13});
}

TEST_CASE("partition invariants over a sweep") {
    for (u64 q : {2, 3, 4, 5, 7}) {
        for (u64 n = 2; n <= 200; ++n) {
            if (std::gcd(n, q) != 1) continue;
            CosetPartition p = partition(n, q);
            u64 total = 0;
            for (const auto& c : p.cosets) {
                total += c.size();
                REQUIRE(c.front() == *std::min_element(c.begin(), c.end()));
                REQUIRE(p.m % c.size() == 0);  // sizes divide ord_n(q)
            }
            REQUIRE(total == n);
            // {C_a union C_{n-a} : a in Pi} partitions Z_n
            std::set<u64> covered;
            for (u64 a : p.pi) {
                for (u64 x : p.coset_of(a)) covered.insert(x);
                for (u64 x : p.coset_of((n - a) % n)) covered.insert(x);
            }
            REQUIRE(covered.size() == n);
        }
    }
}

TEST_CASE("q-adic weights") {
    CHECK(q_weight(5, 2, 3) == 2);
    CHECK(q_weight(26, 3, 3) == 6);
    CHECK(q_weight(7, 2, 4) + q_weight(8, 2, 4) == 4);  // w(i) + w(n-i) = m(q-1)
    CHECK_THROWS_AS((void)q_weight(8, 2, 3), std::invalid_argument);

    for (u64 i = 0; i < 81; ++i)
        if (i != 0) CHECK(q_weight(i, 3, 4) + q_weight(80 - i, 3, 4) == 8);
}

TEST_CASE("index sets and their negations") {
    IndexSets I = index_sets(IndexSetKind::WeightBounded, 15, 2, 1);
    CHECK(I.set == std::vector<u64>{1, 2, 4, 8});
    CHECK(I.disjoint);

    IndexSets J3 = index_sets(IndexSetKind::WindowUnion, 40, 3, 3);
    CHECK(J3.disjoint);

    IndexSets J9 = index_sets(IndexSetKind::WindowUnion, 40, 3, 9);
    CHECK_FALSE(J9.disjoint);
    std::set<u64> expect;
    for (u64 x : coset(40, 3, 4)) expect.insert(x);
    for (u64 x : coset(40, 3, 8)) expect.insert(x);
    CHECK(J9.intersection == std::vector<u64>(expect.begin(), expect.end()));
}

TEST_CASE("leader audits pass on their stated grids") {
    AuditReport anti = audit_leader_lemma(LeaderAudit::AntiPrimitive, 2, 5);
    CHECK(anti.pass);
    CHECK(anti.n == 33);
    CHECK(anti.counterexamples.empty());

    for (u64 q : {2, 3})
        for (u64 ell = 2; ell <= 7; ++ell) CHECK(audit_leader_lemma(LeaderAudit::AntiPrimitive, q, ell).pass);

    for (u64 q : {2, 3, 4, 5})
        for (u64 m : {4, 6}) {
            AuditReport rep = audit_leader_lemma(LeaderAudit::ProjectiveEven, q, m);
            CHECK(rep.pass);
            CHECK(rep.counterexamples.empty());
        }

    CHECK(audit_leader_lemma(LeaderAudit::SmallRange, 2, 15).pass);
    CHECK_THROWS_AS((void)audit_leader_lemma(LeaderAudit::AntiPrimitive, 2, 1), std::invalid_argument);
}

TEST_CASE("projective-even audit matches the predicted exceptional values") {
    // q = 4, m = 4: the lone non-leader in the range is 11; q = 3 has none,
    // and the special odd-q leader (q^{m/2}+1)/2 has coset size m/2
    CosetPartition p85 = partition(85, 4);
    CHECK(p85.leader_of(11) != 11);
    for (u64 a = 4; a <= 16; ++a) {
        if (a % 4 == 0 || a == 11) continue;
        CHECK(p85.leader_of(a) == a);
    }
    CosetPartition p40 = partition(40, 3);
    CHECK(p40.leader_of(5) == 5);
    CHECK(p40.coset_of(5).size() == 2);

    CosetPartition p156 = partition(156, 5);
    CHECK(p156.leader_of(19) != 19);   // exceptional non-leader for q = 5
    CHECK(p156.coset_of(13).size() == 2);  // (q^{m/2}+1)/2 = 13 has |C| = m/2
}

TEST_CASE("small-range audit across applicable n <= 511") {
    for (u64 q : {2, 3}) {
        for (u64 n = 2; n <= 511; ++n) {
            if (std::gcd(n, q) != 1) continue;
            u64 m = ord_mod(n, q);
            // the regime requires q^floor(m/2) < n
            u64 qh = 1;
            for (u64 i = 0; i < m / 2; ++i) qh *= q;
            if (!(qh < n)) continue;
            AuditReport rep = audit_leader_lemma(LeaderAudit::SmallRange, q, n);
            REQUIRE(rep.pass);
        }
    }
}
