#include "lcdc/codes.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace lcdc {

namespace {
using u64 = std::uint64_t;
using u32 = std::uint32_t;

// Flat q x q tables so the enumeration loops work on byte symbols.
struct SymbolTables {
    u32 q = 0;
    std::vector<std::uint8_t> add;  // q*q
    std::vector<std::uint8_t> mul;  // q*q
    std::vector<std::uint8_t> sub;  // q*q

    explicit SymbolTables(const Field& F) {
        u64 size = static_cast<u64>(F.size());
        if (size > 256) throw std::invalid_argument("distance engine supports q <= 256");
        q = static_cast<u32>(size);
        add.resize(q * q);
        mul.resize(q * q);
        sub.resize(q * q);
        for (u32 a = 0; a < q; ++a) {
            FieldElement ea = F.from_packed(a);
            for (u32 b = 0; b < q; ++b) {
                FieldElement eb = F.from_packed(b);
                add[a * q + b] = static_cast<std::uint8_t>(F.packed(F.add(ea, eb)));
                mul[a * q + b] = static_cast<std::uint8_t>(F.packed(F.mul(ea, eb)));
                sub[a * q + b] = static_cast<std::uint8_t>(F.packed(F.sub(ea, eb)));
            }
        }
    }
    std::uint8_t madd(std::uint8_t a, std::uint8_t b) const { return add[u32(a) * q + b]; }
};

// q^k if it fits below limit, otherwise nullopt.
std::optional<u64> pow_within(u64 q, u64 k, u64 limit) {
    u64 r = 1;
    for (u64 i = 0; i < k; ++i) {
        if (r > limit / q) return std::nullopt;
        r *= q;
    }
    return r;
}

struct EnumOutcome {
    u64 best = ~u64(0);
    u64 best_index = ~u64(0);
    std::vector<std::uint8_t> best_codeword;
};

// Odometer over message symbols [lo_prefix fixed at position k-1], with an
// incremental codeword update: stepping position i adds a delta multiple of
// x^i g.  Cost per codeword is O(deg g), not O(n k).
EnumOutcome enumerate_range(const CyclicCode& c, const SymbolTables& T, u64 top, u64 count,
                            u64 index_base) {
    const u64 n = c.n;
    const u32 q = T.q;
    const std::size_t gl = c.g.coeffs().size();
    std::vector<std::uint8_t> g(gl);
    for (std::size_t i = 0; i < gl; ++i) g[i] = static_cast<std::uint8_t>(c.g.coeffs()[i]);
    // rows[d] = d * g
    std::vector<std::vector<std::uint8_t>> rows(q, std::vector<std::uint8_t>(gl, 0));
    for (u32 d = 1; d < q; ++d)
        for (std::size_t i = 0; i < gl; ++i) rows[d][i] = T.mul[d * q + g[i]];
    // delta[v] = elem(v+1 mod q) - elem(v)
    std::vector<std::uint8_t> delta(q);
    for (u32 v = 0; v < q; ++v) delta[v] = T.sub[((v + 1) % q) * q + v];

    std::vector<std::uint8_t> cw(n, 0);
    std::vector<std::uint8_t> msg(c.k, 0);
    u64 wt = 0;
    auto apply = [&](std::size_t pos, std::uint8_t d) {
        const auto& row = rows[d];
        for (std::size_t j = 0; j < gl; ++j) {
            std::uint8_t& cell = cw[pos + j];
            std::uint8_t nv = T.madd(cell, row[j]);
            wt += (nv != 0) - (cell != 0);
            cell = nv;
        }
    };
    EnumOutcome out;
    if (top > 0) {
        msg[c.k - 1] = static_cast<std::uint8_t>(top);
        apply(c.k - 1, static_cast<std::uint8_t>(top));
        // the prefix-only message itself is a nonzero codeword
        out.best = wt;
        out.best_index = index_base;
        out.best_codeword = cw;
    }
    // positions the odometer may touch (the top digit is fixed per range)
    std::size_t lower = (top > 0) ? c.k - 1 : c.k;
    for (u64 step = 1; step < count; ++step) {
        std::size_t i = 0;
        while (true) {
            std::uint8_t v = msg[i];
            apply(i, delta[v]);
            msg[i] = static_cast<std::uint8_t>((v + 1) % q);
            if (msg[i] != 0) break;
            ++i;
            if (i >= lower) throw std::logic_error("odometer overflow");
        }
        if (wt < out.best) {
            out.best = wt;
            out.best_index = index_base + step;
            out.best_codeword = cw;
        }
    }
    return out;
}

}  // namespace

CyclicCode from_generator(std::uint64_t n, FieldPtr field, const Poly& g) {
    if (!field) throw std::invalid_argument("cyclic code needs a field");
    u64 q = static_cast<u64>(field->size());
    if (n < 2 || std::gcd(n, q) != 1)
        throw std::invalid_argument("cyclic code length must satisfy gcd(n, q) = 1, n >= 2");
    if (g.is_zero() || !g.is_monic()) throw std::invalid_argument("generator must be monic");
    if (g.field()->id() != field->id()) throw std::invalid_argument("generator over wrong field");
    Poly xn1 = Poly::x_pow_n_minus_1(field, n);
    auto [h, r] = divrem(xn1, g);
    if (!r.is_zero())
        throw std::invalid_argument("generator does not divide x^n - 1 (remainder " + to_human(r) + ")");
    CyclicCode c;
    c.n = n;
    c.field = std::move(field);
    c.g = g;
    c.h = std::move(h);
    c.k = n - static_cast<u64>(g.degree());
    return c;
}

CyclicCode dual(const CyclicCode& c) {
    // generator of the dual is the monic reciprocal of the parity-check
    return from_generator(c.n, c.field, reciprocal(c.h));
}

CyclicCode hull(const CyclicCode& c) {
    Poly dg = reciprocal(c.h);
    return from_generator(c.n, c.field, poly_lcm(c.g, dg));
}

CyclicCode even_like_subcode(const CyclicCode& c) {
    CyclicCode h = hull(c);
    const Field& F = *c.field;
    Poly xm1 = Poly::from_coeffs(c.field, {static_cast<u32>(F.packed(F.neg(F.one()))), 1});
    return from_generator(c.n, c.field, poly_lcm(h.g, xm1));
}

bool is_lcd(const CyclicCode& c, LcdMethod method, const ModulusOverrides& overrides) {
    switch (method) {
        case LcdMethod::SelfReciprocal:
            return is_self_reciprocal(c.g);
        case LcdMethod::RootInverse: {
            if (c.g.is_one()) return true;  // no roots, closure is vacuous
            RootContextPtr ctx = get_root_context(c.field, c.n, overrides);
            std::vector<u64> roots = ctx->root_exponents(c.g);
            std::vector<bool> in(c.n, false);
            for (u64 r : roots) in[r] = true;
            for (u64 r : roots)
                if (!in[(c.n - r) % c.n]) return false;
            return true;
        }
        case LcdMethod::HullRank:
            return hull(c).k == 0;
    }
    throw std::logic_error("unknown LCD method");
}

bool is_reversible(const CyclicCode& c) {
    for (u64 i = 0; i < c.k; ++i) {
        // row i is x^i g as a length-n vector; reverse it and test membership
        std::vector<u32> rev(c.n, 0);
        for (std::size_t j = 0; j < c.g.coeffs().size(); ++j)
            rev[c.n - 1 - (i + j)] = c.g.coeffs()[j];
        if (!(Poly::from_coeffs(c.field, std::move(rev)) % c.g).is_zero()) return false;
    }
    return true;
}

std::vector<std::uint32_t> encode(const CyclicCode& c, const std::vector<std::uint32_t>& message) {
    if (message.size() != c.k) throw std::invalid_argument("message length must equal k");
    const Field& F = *c.field;
    std::vector<u32> out(c.n, 0);
    for (std::size_t i = 0; i < message.size(); ++i) {
        u32 mc = message[i];
        if (mc >= static_cast<u64>(F.size())) throw std::invalid_argument("message symbol out of range");
        if (!mc) continue;
        for (std::size_t j = 0; j < c.g.coeffs().size(); ++j)
            out[i + j] = static_cast<u32>(F.add_packed(out[i + j], F.mul_packed(mc, c.g.coeffs()[j])));
    }
    return out;
}

std::uint64_t bose_distance(const CyclicCode& c, const ModulusOverrides& overrides) {
    if (c.g.is_one()) throw std::invalid_argument("Bose distance needs g != 1 (no roots)");
    RootContextPtr ctx = get_root_context(c.field, c.n, overrides);
    std::vector<bool> root(c.n, false);
    for (u64 leader : ctx->cosets().gamma)
        if (ctx->is_root(c.g, leader))
            for (u64 i : ctx->cosets().coset_of(leader)) root[i] = true;
    u64 total = static_cast<u64>(std::count(root.begin(), root.end(), true));
    if (total == c.n) return c.n + 1;  // zero code: every exponent is a root
    u64 best = 0;
    for (u64 e = 0; e < c.n; ++e) {
        if (!root[e] || root[(e + c.n - 1) % c.n]) continue;
        u64 len = 0;
        while (root[(e + len) % c.n]) ++len;
        best = std::max(best, len);
    }
    return best + 1;
}

namespace {

// Witness search: messages with support <= smax, lowest support index fixed
// at 0 and its coefficient normalized to 1 (cyclic-shift and scalar
// invariance).  Returns the minimum weight found and the first codeword
// attaining it, in enumeration order.
std::optional<Witness> witness_search(const CyclicCode& c, const SymbolTables& T, u32 smax,
                                      u64 stop_at) {
    if (c.k == 0) return std::nullopt;
    const u32 q = T.q;
    const std::size_t gl = c.g.coeffs().size();
    std::vector<std::uint8_t> g(gl);
    for (std::size_t i = 0; i < gl; ++i) g[i] = static_cast<std::uint8_t>(c.g.coeffs()[i]);
    std::vector<std::uint8_t> cw(c.n);
    std::optional<Witness> best;

    auto consider = [&]() {
        u64 w = static_cast<u64>(std::count_if(cw.begin(), cw.end(), [](std::uint8_t v) { return v != 0; }));
        if (!best || w < best->weight) {
            Witness wit;
            wit.weight = w;
            wit.codeword.assign(cw.begin(), cw.end());
            best = std::move(wit);
        }
        return best->weight <= stop_at;
    };
    auto encode_sparse = [&](const std::vector<u64>& pos, const std::vector<std::uint8_t>& coef) {
        std::fill(cw.begin(), cw.end(), 0);
        for (std::size_t t = 0; t < pos.size(); ++t) {
            std::uint8_t cc = coef[t];
            for (std::size_t j = 0; j < gl; ++j) {
                std::uint8_t& cell = cw[pos[t] + j];
                cell = T.madd(cell, T.mul[cc * q + g[j]]);
            }
        }
    };

    for (u32 s = 1; s <= std::min<u64>(smax, c.k); ++s) {
        // positions: {0} plus an ascending (s-1)-combination of [1, k-1]
        std::vector<u64> pos(s);
        pos[0] = 0;
        for (u32 i = 1; i < s; ++i) pos[i] = i;
        while (true) {
            // coefficient odometer: first coefficient pinned to 1
            std::vector<std::uint8_t> coef(s, 1);
            while (true) {
                encode_sparse(pos, coef);
                if (consider()) return best;
                std::size_t t = 1;
                for (; t < s; ++t) {
                    if (coef[t] + 1u < q) {
                        ++coef[t];
                        break;
                    }
                    coef[t] = 1;
                }
                if (t == s) break;
            }
            // advance the combination
            if (s == 1) break;
            std::size_t i = s - 1;
            while (i >= 1 && pos[i] == c.k - (s - i)) --i;
            if (i == 0) break;
            ++pos[i];
            for (std::size_t j = i + 1; j < s; ++j) pos[j] = pos[j - 1] + 1;
        }
    }
    return best;
}

}  // namespace

DistanceResult min_distance(const CyclicCode& c, const DistanceConfig& cfg,
                            const ModulusOverrides& overrides) {
    if (c.k == 0) throw std::invalid_argument("minimum distance undefined for the zero code");
    DistanceResult res;
    if (c.g.is_one()) {
        // whole space: weight-1 codewords exist
        res.bose = 1;
        res.d_lower = 1;
        res.d_exact = 1;
        res.provenance = "exhaustive";
        Witness wit;
        wit.weight = 1;
        wit.codeword.assign(c.n, 0);
        wit.codeword[0] = 1;
        res.witness = wit;
        return res;
    }
    res.bose = bose_distance(c, overrides);
    res.d_lower = res.bose;
    res.provenance = "bose_run";
    if (cfg.theorem_bound > res.d_lower) {
        res.d_lower = cfg.theorem_bound;
        res.provenance = cfg.theorem_label;
    }
    SymbolTables T(*c.field);
    u64 q = static_cast<u64>(c.field->size());
    std::optional<u64> total = pow_within(q, c.k, cfg.exhaustive_cap);
    if (total) {
        u64 messages = *total;  // includes the zero message
        u32 threads = std::max<u32>(1, cfg.threads);
        u64 per_top = messages / q;
        std::vector<EnumOutcome> outs(q);
        if (threads <= 1 || c.k < 2) {
            outs[0] = enumerate_range(c, T, 0, messages, 0);
        } else {
            std::vector<std::thread> pool;
            std::atomic<u64> next_top{0};
            auto worker = [&]() {
                while (true) {
                    u64 t = next_top.fetch_add(1);
                    if (t >= q) break;
                    outs[t] = enumerate_range(c, T, t, per_top, t * per_top);
                }
            };
            for (u32 t = 0; t < std::min<u64>(threads, q); ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        EnumOutcome best;
        for (const auto& o : outs) {
            if (o.best < best.best || (o.best == best.best && o.best_index < best.best_index)) best = o;
        }
        res.d_exact = best.best;
        res.d_lower = best.best;
        res.provenance = "exhaustive";
        Witness wit;
        wit.weight = best.best;
        wit.codeword.assign(best.best_codeword.begin(), best.best_codeword.end());
        res.witness = std::move(wit);
        return res;
    }
    std::optional<Witness> wit = witness_search(c, T, cfg.witness_support_max, res.d_lower);
    if (wit) {
        res.witness = wit;
        if (wit->weight == res.d_lower) res.d_exact = wit->weight;
    }
    return res;
}

CodeReport analyze(const CyclicCode& c, const DistanceConfig& cfg, const ModulusOverrides& overrides) {
    CodeReport rep;
    rep.n = c.n;
    rep.q = static_cast<u64>(c.field->size());
    rep.k = c.k;
    rep.generator = c.g.coeffs();
    rep.lcd = is_lcd(c, LcdMethod::SelfReciprocal);
    rep.reversible = is_reversible(c);
    if (rep.lcd != rep.reversible) throw std::logic_error("LCD and reversibility flags disagree");
    if (c.k == 0) {
        rep.bose = bose_distance(c, overrides);  // n + 1 by convention
        rep.d_lower = 0;
        rep.d_lower_provenance = "zero_code";
        return rep;
    }
    DistanceResult d = min_distance(c, cfg, overrides);
    rep.d_lower = d.d_lower;
    rep.d_lower_provenance = d.provenance;
    rep.d_exact = d.d_exact;
    rep.witness = d.witness;
    rep.bose = d.bose;
    return rep;
}

}  // namespace lcdc
