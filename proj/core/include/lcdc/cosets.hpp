#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lcdc {

/// q-cyclotomic coset of s modulo n, sorted ascending.  gcd(n, q) = 1.
std::vector<std::uint64_t> coset(std::uint64_t n, std::uint64_t q, std::uint64_t s);

/// The full q-cyclotomic coset structure mod n.  Orbits are computed once
/// and memoized here; the object is immutable afterwards.
struct CosetPartition {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    std::uint64_t m = 0;  // ord_n(q)
    std::vector<std::vector<std::uint64_t>> cosets;  // ordered by leader ascending
    std::vector<std::uint64_t> gamma;                // leader set, ascending
    std::vector<std::uint64_t> pi;                   // reduced leader set, ascending

    std::uint64_t leader_of(std::uint64_t i) const;
    const std::vector<std::uint64_t>& coset_of(std::uint64_t i) const;
    std::size_t coset_index(std::uint64_t i) const;
    /// n - a lies in C_a, i.e. the minimal polynomial of beta^a is
    /// self-reciprocal.
    bool self_paired(std::uint64_t a) const;

    std::vector<std::uint32_t> index_of;  // residue -> position in cosets
};

CosetPartition partition(std::uint64_t n, std::uint64_t q);

/// Sum of base-q digits of i, with 0 <= i < q^m.
std::uint32_t q_weight(std::uint64_t i, std::uint64_t q, std::uint32_t m);

enum class IndexSetKind {
    WeightBounded,  // {1 <= i <= n-1 : 1 <= w_q(i) <= t}, n = q^m - 1
    WindowUnion,    // union of C_1 .. C_{delta-1}
};

struct IndexSets {
    std::vector<std::uint64_t> set;      // sorted
    std::vector<std::uint64_t> negated;  // {n - a}, sorted
    bool disjoint = false;
    std::vector<std::uint64_t> intersection;  // sorted, empty iff disjoint
};

IndexSets index_sets(IndexSetKind kind, std::uint64_t n, std::uint64_t q, std::uint64_t param);

/// The three closed-form coset-leader classifications that get audited
/// against brute force over their stated parameter regimes.
enum class LeaderAudit {
    SmallRange,      // leaders s <= n*q^ceil(m/2)/(q^m-1), s != 0 mod q, |C_s| = m
    AntiPrimitive,   // n = q^ell + 1: leaders a <= q^floor((ell-1)/2)+1, |C_a| = 2 ell
    ProjectiveEven,  // n = (q^m-1)/(q-1), m >= 4 even: leader/non-leader list
};

struct AuditCounterexample {
    std::uint64_t value = 0;
    std::string detail;
};

struct AuditReport {
    LeaderAudit which;
    std::uint64_t q = 0;
    std::uint64_t param = 0;  // n, ell, or m
    std::uint64_t n = 0;
    bool pass = false;
    std::uint64_t checked = 0;
    std::vector<AuditCounterexample> counterexamples;
};

/// param is n for SmallRange, ell for AntiPrimitive, m for ProjectiveEven.
AuditReport audit_leader_lemma(LeaderAudit which, std::uint64_t q, std::uint64_t param);

}  // namespace lcdc
