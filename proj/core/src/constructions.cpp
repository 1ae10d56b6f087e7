#include "lcdc/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lcdc {

namespace {
using u64 = std::uint64_t;
using u32 = std::uint32_t;

u64 checked_pow(u64 b, u64 k) {
    u64 r = 1;
    for (u64 i = 0; i < k; ++i) {
        if (r > (u64(1) << 62) / b) throw std::invalid_argument("q^k out of range");
        r *= b;
    }
    return r;
}

std::pair<u32, u32> prime_power(u64 q) {
    auto ps = prime_factors_u64(q);
    if (ps.size() != 1) throw std::invalid_argument("q must be a prime power");
    u32 p = static_cast<u32>(ps[0]);
    u32 e = 0;
    while (q > 1) {
        q /= p;
        ++e;
    }
    return {p, e};
}

u64 ceil_div(u64 a, u64 b) { return (a + b - 1) / b; }

void require_lcd(const CyclicCode& c, const char* what) {
    if (!is_self_reciprocal(c.g))
        throw std::logic_error(std::string(what) + ": constructed generator is not self-reciprocal");
}

}  // namespace

FieldPtr base_field_for(std::uint64_t q, const ModulusOverrides& overrides) {
    auto [p, e] = prime_power(q);
    std::optional<std::vector<u32>> mod;
    if (auto it = overrides.find({p, e}); it != overrides.end()) mod = it->second;
    return make_field(p, e, mod);
}

CyclicCode bch(const BchSpec& spec, const ModulusOverrides& overrides) {
    if (spec.delta < 2 || spec.delta > spec.n)
        throw std::invalid_argument("bch: designed distance must satisfy 2 <= delta <= n");
    FieldPtr field = base_field_for(spec.q, overrides);
    RootContextPtr ctx = get_root_context(field, spec.n, overrides);
    std::int64_t n = static_cast<std::int64_t>(spec.n);
    std::set<u64> leaders;
    for (u64 i = 0; i + 1 < spec.delta; ++i) {
        std::int64_t expo = (spec.b + static_cast<std::int64_t>(i)) % n;
        if (expo < 0) expo += n;
        leaders.insert(ctx->cosets().leader_of(static_cast<u64>(expo)));
    }
    Poly g = Poly::one(field);
    for (u64 l : leaders) g = g * ctx->minimal_polynomial(l);
    CyclicCode code = from_generator(spec.n, field, g);
    // every exponent in the defining window must be a root
    for (u64 i = 0; i + 1 < spec.delta; ++i) {
        std::int64_t expo = (spec.b + static_cast<std::int64_t>(i)) % n;
        if (expo < 0) expo += n;
        if (!leaders.count(ctx->cosets().leader_of(static_cast<u64>(expo))))
            throw std::logic_error("bch: defining window exponent lost");
    }
    return code;
}

CyclicCode reversible_bch(ReversiblePattern pattern, std::uint64_t q, std::uint64_t n,
                          std::uint64_t t, const ModulusOverrides& overrides) {
    BchSpec spec;
    spec.q = q;
    spec.n = n;
    switch (pattern) {
        case ReversiblePattern::ZeroCentered:
            spec.b = -static_cast<std::int64_t>(t);
            spec.delta = 2 * t + 2;
            break;
        case ReversiblePattern::OddMid:
            if (n % 2 == 0) throw std::invalid_argument("odd-mid pattern needs odd n");
            if (t % 2 == 0 || t < 1 || t > n - 2)
                throw std::invalid_argument("odd-mid pattern needs odd t in [1, n-2]");
            spec.b = static_cast<std::int64_t>((n - t) / 2);
            spec.delta = t + 2;
            break;
        case ReversiblePattern::EvenMid:
            if (n % 2 != 0) throw std::invalid_argument("even-mid pattern needs even n");
            if (t > n / 2) throw std::invalid_argument("even-mid pattern needs t <= n/2");
            spec.b = static_cast<std::int64_t>((n - 2 * t) / 2);
            spec.delta = 2 * t + 2;
            break;
    }
    if (spec.delta > n)
        throw std::invalid_argument("reversible pattern yields delta > n; rejected");
    CyclicCode code = bch(spec, overrides);
    require_lcd(code, "reversible_bch");
    return code;
}

AntiBchResult anti_bch(std::uint64_t q, std::uint32_t ell, std::uint64_t delta,
                       const ModulusOverrides& overrides) {
    if (ell < 2) throw std::invalid_argument("anti_bch: ell must be >= 2");
    u64 n = checked_pow(q, ell) + 1;
    AntiBchResult out{bch({q, n, delta, 0}, overrides), std::nullopt, 2 * (delta - 1)};
    require_lcd(out.code, "anti_bch");
    u64 regime_top = checked_pow(q, (ell - 1) / 2) + 3;
    if (delta >= 3 && delta <= regime_top) {
        u64 skipped = (delta - 2) / q;
        out.predicted_k = checked_pow(q, ell) - 2 * u64(ell) * (delta - 2 - skipped);
        if (*out.predicted_k != out.code.k)
            throw std::logic_error("anti_bch: predicted dimension disagrees with generator degree");
        // generator must be exactly (x-1) * prod of m_a over a <= delta-2 coprime to q
        FieldPtr field = out.code.field;
        RootContextPtr ctx = get_root_context(field, n, overrides);
        Poly expect = ctx->minimal_polynomial(0);
        for (u64 a = 1; a + 2 <= delta; ++a)
            if (a % q != 0) expect = expect * ctx->minimal_polynomial(a);
        if (!(expect == out.code.g))
            throw std::logic_error("anti_bch: generator differs from the predicted product");
    }
    return out;
}

namespace {

// binomial with the convention that any negative argument gives zero
BigInt binom(std::int64_t top, std::int64_t bottom) {
    if (bottom < 0 || top < 0 || bottom > top) return 0;
    BigInt r = 1;
    for (std::int64_t i = 0; i < bottom; ++i) {
        r *= (top - i);
        r /= (i + 1);
    }
    return r;
}

// dimension of the punctured generalized Reed-Muller code of order ell
u64 grm_dimension_formula(u64 q, u32 m, u32 ell) {
    BigInt total = 0;
    for (std::int64_t i = 0; i <= ell; ++i) {
        for (std::int64_t j = 0; j <= m; ++j) {
            std::int64_t lo = i - j * static_cast<std::int64_t>(q);
            if (lo < 0) continue;
            BigInt term = binom(static_cast<std::int64_t>(m), j) * binom(lo + m - 1, lo);
            total += (j % 2 == 0) ? term : -term;
        }
    }
    if (total < 0) throw std::logic_error("GRM dimension sum went negative");
    return static_cast<u64>(total);
}

Poly grm_root_product(const RootContextPtr& ctx, u64 q, u32 m, u32 ell, const FieldPtr& field) {
    u64 n = ctx->n();
    u64 bound = (q - 1) * m - ell;  // roots alpha^j with w_q(j) < bound
    std::set<u64> leaders;
    for (u64 j = 1; j < n; ++j)
        if (q_weight(j, q, m) < bound) leaders.insert(ctx->cosets().leader_of(j));
    Poly g = Poly::one(field);
    for (u64 l : leaders) g = g * ctx->minimal_polynomial(l);
    return g;
}

}  // namespace

GrmStarResult grm_star(const GrmSpec& spec, const ModulusOverrides& overrides) {
    u64 q = spec.q;
    u32 m = spec.m;
    if (m < 2) throw std::invalid_argument("grm_star: m must be >= 2");
    if (spec.ell >= q * (m - 1)) throw std::invalid_argument("grm_star: need ell < q(m-1)");
    u32 ell1 = static_cast<u32>(spec.ell / (q - 1));
    u32 ell0 = static_cast<u32>(spec.ell % (q - 1));
    u64 n = checked_pow(q, m) - 1;
    FieldPtr field = base_field_for(q, overrides);
    RootContextPtr ctx = get_root_context(field, n, overrides);
    GrmStarResult out;
    out.code = from_generator(n, field, grm_root_product(ctx, q, m, spec.ell, field));
    out.k_formula = grm_dimension_formula(q, m, spec.ell);
    if (out.k_formula != out.code.k)
        throw std::logic_error("grm_star: dimension formula disagrees with root count");
    out.d_claim = (q - ell0) * checked_pow(q, m - ell1 - 1) - 1;
    return out;
}

ReversibleGrmResult reversible_grm(std::uint64_t q, std::uint32_t m, std::uint32_t ell,
                                   const ModulusOverrides& overrides) {
    GrmStarResult star = grm_star({q, m, ell}, overrides);
    FieldPtr field = star.code.field;
    u64 n = star.code.n;
    const Field& F = *field;
    Poly xm1 = Poly::from_coeffs(field, {static_cast<u32>(F.packed(F.neg(F.one()))), 1});
    Poly g_r = star.code.g;
    Poly g = g_r.is_one() ? xm1 : xm1 * poly_lcm(g_r, reciprocal(g_r));
    ReversibleGrmResult out;
    out.code = from_generator(n, field, g);
    require_lcd(out.code, "reversible_grm");
    out.d_lower = 2 * star.d_claim;
    u64 wm = (q - 1) * m;
    u64 lo = 1 + wm - ceil_div(wm, 2);
    if (ell >= lo && u64(ell) + 2 <= q * (m - 1)) {
        // in the stated regime the two root sets are disjoint
        if (!poly_gcd(g_r, reciprocal(g_r)).is_one())
            throw std::logic_error("reversible_grm: expected disjoint root sets");
        if (!(g == xm1 * g_r * reciprocal(g_r)))
            throw std::logic_error("reversible_grm: generator is not (x-1) g_R g_R*");
        BigInt predicted = 2 * BigInt(grm_dimension_formula(q, m, ell)) - BigInt(checked_pow(q, m));
        if (predicted < 0 || predicted != BigInt(out.code.k))
            throw std::logic_error("reversible_grm: predicted dimension disagrees");
        out.predicted_k = out.code.k;
    }
    return out;
}

namespace {

struct ProjParams {
    u64 n = 0;
    u64 half = 0;  // q^(m/2)
};

ProjParams projective_length(u64 q, u32 m) {
    u64 qm = checked_pow(q, m);
    ProjParams pp;
    pp.n = (qm - 1) / (q - 1);
    if (m % 2 == 0) pp.half = checked_pow(q, m / 2);
    if (ord_mod(pp.n, q) != m)
        throw std::invalid_argument("projective length has ord_n(q) != m");
    return pp;
}

}  // namespace

ProjectiveResult projective_bch(std::uint64_t q, std::uint32_t m, std::uint64_t delta,
                                const ModulusOverrides& overrides) {
    if (m < 4 || m % 2 != 0) throw std::invalid_argument("projective_bch: need even m >= 4");
    ProjParams pp = projective_length(q, m);
    if (delta < 2 || delta > pp.half)
        throw std::invalid_argument("projective_bch: need 2 <= delta <= q^(m/2)");
    ProjectiveResult out;
    out.code = bch({q, pp.n, delta, 1}, overrides);
    u64 eps = (delta - 2) * (q - 1) / (pp.half - 1);
    u64 base = pp.n - m * ceil_div((delta - 1) * (q - 1), q);
    if (eps >= (q - 1) / 2)
        out.predicted_k = base + (2 * eps - (q - 2)) * m / 2;
    else
        out.predicted_k = base;
    if (*out.predicted_k != out.code.k)
        throw std::logic_error("projective_bch: predicted dimension disagrees with degree");
    out.d_lower = (delta == pp.half) ? delta + 1 : delta;  // Bose lift at the top delta
    return out;
}

ProjectiveResult reversible_projective_bch(std::uint64_t q, std::uint32_t m, std::uint64_t delta,
                                           const ModulusOverrides& overrides) {
    if (m < 2) throw std::invalid_argument("reversible_projective_bch: need m >= 2");
    ProjParams pp = projective_length(q, m);
    if (delta < 2) throw std::invalid_argument("reversible_projective_bch: need delta >= 2");
    u64 n = pp.n;
    FieldPtr field = base_field_for(q, overrides);
    RootContextPtr ctx = get_root_context(field, n, overrides);
    // g = lcm(x - 1, g_u, g_u*) where g_u generates the narrow-sense code
    CyclicCode unison = bch({q, n, delta, 1}, overrides);
    const Field& F = *field;
    Poly xm1 = Poly::from_coeffs(field, {static_cast<u32>(F.packed(F.neg(F.one()))), 1});
    Poly g = poly_lcm(xm1, poly_lcm(unison.g, reciprocal(unison.g)));
    ProjectiveResult out;
    out.code = from_generator(n, field, g);
    require_lcd(out.code, "reversible_projective_bch");
    if (2 * delta <= n) {
        CyclicCode window = bch({q, n, 2 * delta, 1 - static_cast<std::int64_t>(delta)}, overrides);
        if (!(window.g == g))
            throw std::logic_error("reversible_projective_bch: lcm route differs from the BCH window");
    }
    out.d_lower = 2 * delta + ((m % 2 == 0 && delta == pp.half) ? 2 : 0);

    u64 mid_regime = checked_pow(q, (m - 1) / 2);
    bool th_narrow = delta <= mid_regime;
    bool th_even = m >= 4 && m % 2 == 0 && delta <= pp.half;
    if (th_narrow) {
        u64 k = n - 1 - 2 * m * ceil_div((delta - 1) * (q - 1), q);
        out.predicted_k = k;
    }
    if (th_even) {
        u64 eps = (delta - 2) * (q - 1) / (pp.half - 1);
        u64 epsb = (delta - 1) * (q - 1) / (pp.half - 1);
        std::int64_t k = static_cast<std::int64_t>(n) - 1 -
                         2 * static_cast<std::int64_t>(m * ceil_div((delta - 1) * (q - 1), q)) +
                         static_cast<std::int64_t>(epsb * m);
        if (eps >= (q - 1) / 2) k += static_cast<std::int64_t>((2 * eps - (q - 2)) * m);
        if (out.predicted_k && *out.predicted_k != static_cast<u64>(k))
            throw std::logic_error("reversible_projective_bch: the two dimension formulas disagree");
        out.predicted_k = static_cast<u64>(k);
    }
    if (out.predicted_k && *out.predicted_k != out.code.k)
        throw std::logic_error("reversible_projective_bch: predicted dimension disagrees with degree");
    return out;
}

ReversibleEnumerator::ReversibleEnumerator(std::uint64_t n, std::uint64_t q,
                                           const ModulusOverrides& overrides) {
    field_ = base_field_for(q, overrides);
    ctx_ = get_root_context(field_, n, overrides);
    const auto& part = ctx_->cosets();
    for (u64 a : part.pi) {
        Poly ma = ctx_->minimal_polynomial(a);
        Poly pair = part.self_paired(a) ? ma : ma * ctx_->minimal_polynomial((n - a) % n);
        pair_lcm_.push_back(std::move(pair));
    }
    total_ = (BigInt(1) << part.pi.size()) - 1;
}

const std::vector<std::uint64_t>& ReversibleEnumerator::pi() const { return ctx_->cosets().pi; }

std::optional<CyclicCode> ReversibleEnumerator::next() {
    if (rank_ > total_) return std::nullopt;
    Poly g = Poly::one(field_);
    for (std::size_t i = 0; i < pair_lcm_.size(); ++i)
        if (bit_test(rank_, static_cast<unsigned>(i))) g = g * pair_lcm_[i];
    ++rank_;
    CyclicCode code = from_generator(ctx_->n(), field_, g);
    require_lcd(code, "enumerate_reversible");
    return code;
}

CountResult count_reversible(std::uint64_t n, std::uint64_t q) {
    prime_power(q);  // validates q
    CosetPartition part = partition(n, q);
    CountResult out;
    out.n = n;
    out.q = q;
    out.pi_size = static_cast<u32>(part.pi.size());
    out.count = (BigInt(1) << part.pi.size()) - 1;

    // closed forms apply to n = q^m - 1 with m an odd prime
    u64 qm = q, mm = 1;
    while (qm - 1 < n) {
        if (qm > (u64(1) << 62) / q) break;
        qm *= q;
        ++mm;
    }
    if (qm - 1 == n && mm >= 3 && mm % 2 == 1 && is_prime_u64(mm)) {
        // census: the self-paired cosets are exactly {0} (even q) or
        // {0, n/2} (odd q)
        for (u64 a : part.gamma) {
            bool sp = part.self_paired(a);
            bool expected = (a == 0) || (q % 2 == 1 && a == n / 2);
            if (sp != expected)
                throw std::logic_error("count_reversible: self-reciprocal factor census failed");
        }
        u64 exponent;
        if (q % 2 == 0)
            exponent = (qm + (mm - 1) * q) / (2 * mm);
        else
            exponent = (qm + (mm - 1) * q + mm) / (2 * mm);
        out.closed_form = (BigInt(1) << exponent) - 1;
        out.m = static_cast<u32>(mm);
        if (*out.closed_form != out.count)
            throw std::logic_error("count_reversible: closed form disagrees with 2^|Pi| - 1");
    }
    return out;
}

}  // namespace lcdc
