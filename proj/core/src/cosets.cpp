#include "lcdc/cosets.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "lcdc/gf.hpp"

namespace lcdc {

namespace {
using u64 = std::uint64_t;

void require_coprime(u64 n, u64 q) {
    if (n < 2) throw std::invalid_argument("cosets: n must be >= 2");
    if (q < 2) throw std::invalid_argument("cosets: q must be >= 2");
    if (std::gcd(n, q) != 1) throw std::invalid_argument("cosets: gcd(n, q) must be 1");
}
}  // namespace

std::vector<std::uint64_t> coset(std::uint64_t n, std::uint64_t q, std::uint64_t s) {
    require_coprime(n, q);
    s %= n;
    std::vector<u64> out;
    u64 v = s;
    do {
        out.push_back(v);
        v = v * (q % n) % n;
    } while (v != s);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t CosetPartition::leader_of(std::uint64_t i) const { return cosets[index_of[i % n]].front(); }

const std::vector<std::uint64_t>& CosetPartition::coset_of(std::uint64_t i) const {
    return cosets[index_of[i % n]];
}

std::size_t CosetPartition::coset_index(std::uint64_t i) const { return index_of[i % n]; }

bool CosetPartition::self_paired(std::uint64_t a) const {
    return coset_index(a) == coset_index((n - a % n) % n);
}

CosetPartition partition(std::uint64_t n, std::uint64_t q) {
    require_coprime(n, q);
    CosetPartition part;
    part.n = n;
    part.q = q;
    part.m = ord_mod(n, q);
    part.index_of.assign(n, std::numeric_limits<std::uint32_t>::max());
    for (u64 s = 0; s < n; ++s) {
        if (part.index_of[s] != std::numeric_limits<std::uint32_t>::max()) continue;
        std::vector<u64> orbit;
        u64 v = s;
        do {
            orbit.push_back(v);
            v = v * (q % n) % n;
        } while (v != s);
        std::sort(orbit.begin(), orbit.end());
        auto idx = static_cast<std::uint32_t>(part.cosets.size());
        for (u64 x : orbit) part.index_of[x] = idx;
        part.gamma.push_back(orbit.front());
        part.cosets.push_back(std::move(orbit));
    }
    // Pi: drop, for each pair of distinct opposite cosets, the larger leader.
    std::vector<bool> keep(part.gamma.size(), true);
    for (std::size_t i = 0; i < part.gamma.size(); ++i) {
        u64 a = part.gamma[i];
        u64 na = (n - a) % n;
        if (part.index_of[na] == i) continue;  // self-paired: a stays
        u64 other = part.cosets[part.index_of[na]].front();
        if (a > other) keep[i] = false;
    }
    for (std::size_t i = 0; i < part.gamma.size(); ++i)
        if (keep[i]) part.pi.push_back(part.gamma[i]);
    return part;
}

std::uint32_t q_weight(std::uint64_t i, std::uint64_t q, std::uint32_t m) {
    if (q < 2) throw std::invalid_argument("q_weight: q must be >= 2");
    u64 bound = 1;
    for (std::uint32_t j = 0; j < m; ++j) {
        if (bound > (u64(1) << 62) / q) throw std::invalid_argument("q_weight: q^m out of range");
        bound *= q;
    }
    if (i >= bound) throw std::invalid_argument("q_weight: i out of range [0, q^m)");
    std::uint32_t w = 0;
    while (i) {
        w += static_cast<std::uint32_t>(i % q);
        i /= q;
    }
    return w;
}

IndexSets index_sets(IndexSetKind kind, std::uint64_t n, std::uint64_t q, std::uint64_t param) {
    require_coprime(n, q);
    if (param < 1) throw std::invalid_argument("index_sets: parameter must be >= 1");
    std::vector<u64> set;
    if (kind == IndexSetKind::WeightBounded) {
        u64 m = ord_mod(n, q);
        u64 qm = 1;
        for (u64 j = 0; j < m; ++j) qm *= q;
        if (n != qm - 1) throw std::invalid_argument("index_sets: weight-bounded sets need n = q^m - 1");
        for (u64 i = 1; i < n; ++i) {
            std::uint32_t w = q_weight(i, q, static_cast<std::uint32_t>(m));
            if (w >= 1 && w <= param) set.push_back(i);
        }
    } else {
        if (param < 2) throw std::invalid_argument("index_sets: window union needs delta >= 2");
        std::vector<bool> in(n, false);
        for (u64 i = 1; i < param && i < n; ++i)
            for (u64 x : coset(n, q, i)) in[x] = true;
        for (u64 i = 0; i < n; ++i)
            if (in[i]) set.push_back(i);
    }
    IndexSets out;
    out.set = set;
    out.negated.reserve(set.size());
    for (u64 a : set) out.negated.push_back((n - a) % n);
    std::sort(out.negated.begin(), out.negated.end());
    std::set_intersection(out.set.begin(), out.set.end(), out.negated.begin(), out.negated.end(),
                          std::back_inserter(out.intersection));
    out.disjoint = out.intersection.empty();
    return out;
}

namespace {

u64 checked_pow(u64 b, u64 k) {
    u64 r = 1;
    for (u64 i = 0; i < k; ++i) {
        if (r > (u64(1) << 62) / b) throw std::invalid_argument("parameter out of range");
        r *= b;
    }
    return r;
}

void note(AuditReport& rep, u64 value, std::string detail) {
    rep.counterexamples.push_back({value, std::move(detail)});
}

AuditReport audit_small_range(u64 q, u64 n) {
    AuditReport rep{LeaderAudit::SmallRange, q, n, n, false, 0, {}};
    require_coprime(n, q);
    u64 m = ord_mod(n, q);
    u64 qm = checked_pow(q, m);
    u64 q_half_floor = checked_pow(q, m / 2);
    if (!(q_half_floor < n && n <= qm - 1))
        throw std::invalid_argument("small-range audit needs q^floor(m/2) < n <= q^m - 1");
    CosetPartition part = partition(n, q);
    u64 bound = n * checked_pow(q, (m + 1) / 2) / (qm - 1);
    for (u64 s = 1; s <= bound; ++s) {
        ++rep.checked;
        if (part.coset_of(s).size() != m)
            note(rep, s, "coset size " + std::to_string(part.coset_of(s).size()) + ", predicted " + std::to_string(m));
        if (s % q != 0 && part.leader_of(s) != s)
            note(rep, s, "predicted leader but leader is " + std::to_string(part.leader_of(s)));
    }
    rep.pass = rep.counterexamples.empty();
    return rep;
}

AuditReport audit_anti_primitive(u64 q, u64 ell) {
    if (ell < 2) throw std::invalid_argument("anti-primitive audit needs ell >= 2");
    u64 n = checked_pow(q, ell) + 1;
    AuditReport rep{LeaderAudit::AntiPrimitive, q, ell, n, false, 0, {}};
    CosetPartition part = partition(n, q);
    u64 bound = checked_pow(q, (ell - 1) / 2) + 1;
    for (u64 a = 1; a <= bound; ++a) {
        ++rep.checked;
        bool is_leader = part.leader_of(a) == a;
        if (a % q != 0) {
            if (!is_leader)
                note(rep, a, "predicted leader but leader is " + std::to_string(part.leader_of(a)));
            else if (part.coset_of(a).size() != 2 * ell)
                note(rep, a, "coset size " + std::to_string(part.coset_of(a).size()) + ", predicted " +
                                 std::to_string(2 * ell));
        } else if (is_leader) {
            note(rep, a, "predicted non-leader but is a leader");
        }
    }
    rep.pass = rep.counterexamples.empty();
    return rep;
}

AuditReport audit_projective_even(u64 q, u64 m) {
    if (m < 4 || m % 2 != 0) throw std::invalid_argument("projective-even audit needs even m >= 4");
    u64 qm = checked_pow(q, m);
    u64 n = (qm - 1) / (q - 1);
    AuditReport rep{LeaderAudit::ProjectiveEven, q, m, n, false, 0, {}};
    CosetPartition part = partition(n, q);
    u64 half = checked_pow(q, m / 2);
    u64 lo = checked_pow(q, (m - 2) / 2), hi = half;
    // predicted non-leaders a = (i+1) + i (q^{m/2} - q)/(q - 1)
    std::vector<u64> predicted_non_leaders;
    u64 step = (half - q) / (q - 1);
    if (q % 2 == 0) {
        for (u64 i = q / 2; q > 2 && i <= q / 2 + (q - 4) / 2; ++i)
            predicted_non_leaders.push_back(i + 1 + i * step);
    } else if (q > 3) {
        for (u64 i = (q + 1) / 2; i <= (q + 1) / 2 + (q - 5) / 2; ++i)
            predicted_non_leaders.push_back(i + 1 + i * step);
    }
    u64 special = (q % 2 == 1) ? (half + 1) / 2 : 0;  // lone size-m/2 leader, odd q
    for (u64 a = lo; a <= hi; ++a) {
        if (a % q == 0) continue;
        ++rep.checked;
        bool predicted_leader =
            std::find(predicted_non_leaders.begin(), predicted_non_leaders.end(), a) ==
            predicted_non_leaders.end();
        bool is_leader = part.leader_of(a) == a;
        if (predicted_leader != is_leader) {
            note(rep, a, predicted_leader ? "predicted leader but leader is " + std::to_string(part.leader_of(a))
                                          : "predicted non-leader but is a leader");
            continue;
        }
        if (is_leader) {
            u64 expect = (q % 2 == 1 && a == special) ? m / 2 : m;
            if (part.coset_of(a).size() != expect)
                note(rep, a, "coset size " + std::to_string(part.coset_of(a).size()) + ", predicted " +
                                 std::to_string(expect));
        }
    }
    rep.pass = rep.counterexamples.empty();
    return rep;
}

}  // namespace

AuditReport audit_leader_lemma(LeaderAudit which, std::uint64_t q, std::uint64_t param) {
    switch (which) {
        case LeaderAudit::SmallRange: return audit_small_range(q, param);
        case LeaderAudit::AntiPrimitive: return audit_anti_primitive(q, param);
        case LeaderAudit::ProjectiveEven: return audit_projective_even(q, param);
    }
    throw std::logic_error("unknown audit");
}

}  // namespace lcdc
