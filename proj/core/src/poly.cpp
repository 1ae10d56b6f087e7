#include "lcdc/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lcdc {

namespace {
using u64 = std::uint64_t;
using u32 = std::uint32_t;

void require_same_field(const Poly& a, const Poly& b) {
    if (!a.field() || !b.field()) throw std::invalid_argument("uninitialized polynomial");
    if (a.field()->id() != b.field()->id())
        throw std::invalid_argument("polynomials over different fields");
}

void require_poly_field(const FieldPtr& f) {
    if (!f) throw std::invalid_argument("polynomial needs a coefficient field");
    if (!f->has_tables())
        throw std::invalid_argument("polynomial coefficient fields are limited to p^e <= 2^20");
}
}  // namespace

void Poly::canonize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::zero(FieldPtr field) {
    require_poly_field(field);
    Poly f;
    f.field_ = std::move(field);
    return f;
}

Poly Poly::one(FieldPtr field) { return monomial(std::move(field), 0); }

Poly Poly::from_coeffs(FieldPtr field, std::vector<std::uint32_t> packed) {
    require_poly_field(field);
    u64 q = static_cast<u64>(field->size());
    for (u32 c : packed)
        if (c >= q) throw std::invalid_argument("coefficient out of field range");
    Poly f;
    f.field_ = std::move(field);
    f.c_ = std::move(packed);
    f.canonize();
    return f;
}

Poly Poly::monomial(FieldPtr field, std::uint64_t degree, std::uint32_t coeff) {
    require_poly_field(field);
    std::vector<u32> c(degree + 1, 0);
    c[degree] = coeff;
    return from_coeffs(std::move(field), std::move(c));
}

Poly Poly::x_pow_n_minus_1(FieldPtr field, std::uint64_t n) {
    require_poly_field(field);
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<u32> c(n + 1, 0);
    c[0] = static_cast<u32>(field->packed(field->neg(field->one())));
    c[n] = 1;
    return from_coeffs(std::move(field), std::move(c));
}

std::uint32_t Poly::leading() const {
    if (c_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return c_.back();
}

std::uint64_t Poly::weight() const {
    return static_cast<u64>(std::count_if(c_.begin(), c_.end(), [](u32 c) { return c != 0; }));
}

Poly Poly::monic() const {
    if (is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
    if (is_monic()) return *this;
    const Field& F = *field_;
    u64 inv = F.packed(F.inv(F.from_packed(c_.back())));
    Poly out = *this;
    for (auto& c : out.c_) c = static_cast<u32>(F.mul_packed(c, inv));
    return out;
}

std::uint32_t Poly::eval(std::uint32_t x) const {
    const Field& F = *field_;
    u64 acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = F.add_packed(F.mul_packed(acc, x), c_[i]);
    return static_cast<u32>(acc);
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& F = *a.field();
    std::vector<u32> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<u32>(F.add_packed(a.coeff(i), b.coeff(i)));
    return Poly::from_coeffs(a.field(), std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& F = *a.field();
    std::vector<u32> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        u64 nb = F.packed(F.neg(F.from_packed(b.coeff(i))));
        c[i] = static_cast<u32>(F.add_packed(a.coeff(i), nb));
    }
    return Poly::from_coeffs(a.field(), std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
    const Field& F = *a.field();
    std::vector<u32> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        u32 ai = a.coeffs()[i];
        if (!ai) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            if (!b.coeffs()[j]) continue;
            c[i + j] = static_cast<u32>(F.add_packed(c[i + j], F.mul_packed(ai, b.coeffs()[j])));
        }
    }
    return Poly::from_coeffs(a.field(), std::move(c));
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    const Field& F = *a.field();
    std::vector<u32> rem(a.coeffs());
    if (a.degree() < b.degree()) return {Poly::zero(a.field()), a};
    std::vector<u32> quot(a.coeffs().size() - b.coeffs().size() + 1, 0);
    u64 lead_inv = F.packed(F.inv(F.from_packed(b.leading())));
    std::size_t bs = b.coeffs().size();
    for (std::size_t i = rem.size(); i-- + 1 > bs;) {
        if (!rem[i]) continue;
        u64 c = F.mul_packed(rem[i], lead_inv);
        std::size_t s = i - (bs - 1);
        quot[s] = static_cast<u32>(c);
        for (std::size_t j = 0; j < bs; ++j) {
            u64 sub = F.mul_packed(c, b.coeffs()[j]);
            u64 nsub = F.packed(F.neg(F.from_packed(sub)));
            rem[s + j] = static_cast<u32>(F.add_packed(rem[s + j], nsub));
        }
    }
    return {Poly::from_coeffs(a.field(), std::move(quot)), Poly::from_coeffs(a.field(), std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

bool divides(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero();
    return (b % a).is_zero();
}

Poly poly_gcd(Poly a, Poly b) {
    require_same_field(a, b);
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("lcm of zero polynomial");
    Poly g = poly_gcd(a, b);
    return ((a * b) / g).monic();
}

Poly poly_lcm(FieldPtr field, const std::vector<Poly>& fs) {
    Poly acc = Poly::one(std::move(field));
    for (const Poly& f : fs) acc = poly_lcm(acc, f);
    return acc;
}

Poly reciprocal(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("reciprocal of the zero polynomial");
    if (f.constant_term() == 0)
        throw std::invalid_argument("reciprocal undefined: constant term is zero");
    const Field& F = *f.field();
    u64 inv0 = F.packed(F.inv(F.from_packed(f.constant_term())));
    std::vector<u32> c(f.coeffs().rbegin(), f.coeffs().rend());
    for (auto& x : c) x = static_cast<u32>(F.mul_packed(x, inv0));
    return Poly::from_coeffs(f.field(), std::move(c));
}

bool is_self_reciprocal(const Poly& f) { return f == reciprocal(f); }

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    if (f.constant_term() == 0) return false;
    const FieldPtr& field = f.field();
    u64 q = static_cast<u64>(field->size());
    u64 d = static_cast<u64>(f.degree());
    Poly fm = f.monic();
    Poly x = Poly::monomial(field, 1);
    auto pow_q = [&](const Poly& t) {
        // t^q mod fm
        Poly acc = Poly::one(field), base = t;
        u64 k = q;
        while (k) {
            if (k & 1) acc = (acc * base) % fm;
            base = (base * base) % fm;
            k >>= 1;
        }
        return acc;
    };
    std::vector<u64> primes = prime_factors_u64(d);
    Poly t = x;
    for (u64 k = 1; k <= d; ++k) {
        t = pow_q(t);
        for (u64 r : primes) {
            if (k != d / r) continue;
            if (!poly_gcd(t - x, fm).is_one()) return false;
        }
    }
    return t == x;
}

std::string to_coeff_list(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f.coeffs()[i]);
    }
    return s;
}

std::string to_human(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        u32 c = f.coeffs()[i];
        if (!c) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c);
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

Poly parse_poly(FieldPtr field, const std::string& text) {
    require_poly_field(field);
    std::string t;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw std::invalid_argument("empty polynomial text");
    const Field& F = *field;
    u64 q = static_cast<u64>(F.size());
    if (t.find('x') == std::string::npos && t.find(',') != std::string::npos) {
        // coefficient list
        std::vector<u32> coeffs;
        std::stringstream ss(t);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw std::invalid_argument("bad coefficient list: " + text);
            u64 v = std::stoull(item);
            if (v >= q) throw std::invalid_argument("coefficient " + item + " out of field range");
            coeffs.push_back(static_cast<u32>(v));
        }
        return Poly::from_coeffs(std::move(field), std::move(coeffs));
    }
    if (t.find('x') == std::string::npos) {
        u64 v = std::stoull(t);
        if (v >= q) throw std::invalid_argument("coefficient out of field range");
        return Poly::from_coeffs(std::move(field), {static_cast<u32>(v)});
    }
    // human form: terms split on +/-
    std::map<u64, FieldElement> acc;
    std::size_t pos = 0;
    bool neg = false;
    if (t[0] == '-') {
        neg = true;
        pos = 1;
    } else if (t[0] == '+') {
        pos = 1;
    }
    while (pos < t.size()) {
        std::size_t end = pos;
        while (end < t.size() && t[end] != '+' && t[end] != '-') ++end;
        std::string term = t.substr(pos, end - pos);
        if (term.empty()) throw std::invalid_argument("bad polynomial text: " + text);
        u64 coeff = 1, expo = 0;
        std::size_t xp = term.find('x');
        if (xp == std::string::npos) {
            coeff = std::stoull(term);
        } else {
            std::string cs = term.substr(0, xp);
            if (!cs.empty() && cs.back() == '*') cs.pop_back();
            if (!cs.empty()) coeff = std::stoull(cs);
            std::string es = term.substr(xp + 1);
            if (es.empty())
                expo = 1;
            else if (es[0] == '^')
                expo = std::stoull(es.substr(1));
            else
                throw std::invalid_argument("bad polynomial term: " + term);
        }
        if (coeff >= q) throw std::invalid_argument("coefficient out of field range in: " + term);
        FieldElement v = F.from_packed(coeff);
        if (neg) v = F.neg(v);
        auto [it, inserted] = acc.emplace(expo, v);
        if (!inserted) it->second = F.add(it->second, v);
        if (end < t.size()) neg = (t[end] == '-');
        pos = end + 1;
    }
    std::vector<u32> coeffs(acc.empty() ? 0 : acc.rbegin()->first + 1, 0);
    for (const auto& [e, v] : acc) coeffs[e] = static_cast<u32>(F.packed(v));
    return Poly::from_coeffs(std::move(field), std::move(coeffs));
}

// ---------------------------------------------------------------------------

RootContext::RootContext(FieldPtr base, std::uint64_t n, const ModulusOverrides& overrides)
    : base_(std::move(base)), n_(n) {
    require_poly_field(base_);
    u64 q = static_cast<u64>(base_->size());
    if (std::gcd(n, q) != 1)
        throw std::invalid_argument("x^n - 1 has repeated factors: gcd(n, q) must be 1");
    m_ = ord_mod(n, q);
    u64 ext_e = base_->e() * m_;
    std::optional<std::vector<u32>> ext_mod;
    if (auto it = overrides.find({base_->p(), static_cast<u32>(ext_e)}); it != overrides.end())
        ext_mod = it->second;
    BigInt ext_size = 1;
    for (u64 i = 0; i < ext_e; ++i) ext_size *= base_->p();
    if (ext_size - 1 <= BigInt(std::numeric_limits<std::int64_t>::max()))
        ext_ = make_field(base_->p(), static_cast<u32>(ext_e), ext_mod);
    else
        ext_ = make_extension_context(base_->p(), static_cast<u32>(ext_e), ext_mod);
    // beta = alpha^((q^m - 1)/n); for unverified generators walk candidates
    // x + c until one yields an order-n root
    BigInt cofactor = (ext_->group_order()) / n_;
    FieldElement cand = ext_->generator();
    FieldElement betac = ext_->pow(cand, cofactor);
    if (!ext_->has_order(betac, n_)) {
        if (ext_->generator_verified())
            throw std::logic_error("generator power does not have order n");
        FieldElement step = ext_->one();
        while (!ext_->has_order(betac, n_)) {
            cand = ext_->add(cand, step);
            if (ext_->is_zero(cand)) throw std::logic_error("no order-n root of unity found");
            betac = ext_->pow(cand, cofactor);
        }
    }
    beta_ = betac;
    init();
}

RootContext::RootContext(FieldPtr base, FieldPtr extension, FieldElement beta)
    : base_(std::move(base)), ext_(std::move(extension)), beta_(std::move(beta)) {
    require_poly_field(base_);
    if (!ext_) throw std::invalid_argument("extension field required");
    if (ext_->p() != base_->p()) throw std::invalid_argument("extension has different characteristic");
    if (ext_->e() % base_->e() != 0)
        throw std::invalid_argument("extension degree is not a multiple of the base degree");
    BigInt order = ext_->order_of(beta_);
    if (order > BigInt(std::numeric_limits<std::int64_t>::max()))
        throw std::invalid_argument("beta order out of range");
    n_ = static_cast<u64>(order);
    u64 q = static_cast<u64>(base_->size());
    if (std::gcd(n_, q) != 1) throw std::invalid_argument("beta order shares a factor with q");
    m_ = ord_mod(n_, q);
    if (base_->e() * m_ != ext_->e())
        throw std::invalid_argument("extension degree does not match ord_n(q)");
    init();
}

void RootContext::init() {
    part_ = partition(n_, static_cast<u64>(base_->size()));
    u64 q = static_cast<u64>(base_->size());
    embed_.reserve(q);
    if (base_->prime_field()) {
        for (u64 v = 0; v < q; ++v) {
            std::vector<std::uint8_t> d(ext_->e(), 0);
            d[0] = static_cast<std::uint8_t>(v);
            embed_.push_back(ext_->from_digits(d));
        }
    } else {
        // find a root of the base modulus inside the subfield of order q
        BigInt cof = ext_->group_order() / (q - 1);
        FieldElement w = ext_->zero();
        FieldElement cand = ext_->generator();
        FieldElement step = ext_->one();
        while (true) {
            w = ext_->pow(cand, cof);
            if (ext_->has_order(w, q - 1)) break;
            cand = ext_->add(cand, step);
            if (ext_->is_zero(cand)) throw std::logic_error("no subfield generator found");
        }
        const auto& mod = base_->modulus();
        FieldElement u = ext_->zero();
        bool found = false;
        FieldElement pw = ext_->one();
        for (u64 i = 0; i + 1 < q && !found; ++i) {  // walk w^i over the subfield units
            // evaluate base modulus (prime coefficients) at pw
            FieldElement acc = ext_->zero();
            for (std::size_t j = mod.size(); j-- > 0;) {
                acc = ext_->mul(acc, pw);
                std::vector<std::uint8_t> d(ext_->e(), 0);
                d[0] = mod[j];
                acc = ext_->add(acc, ext_->from_digits(d));
            }
            if (ext_->is_zero(acc)) {
                u = pw;
                found = true;
            }
            pw = ext_->mul(pw, w);
        }
        if (!found) throw std::logic_error("base modulus has no root in the extension subfield");
        for (u64 v = 0; v < q; ++v) {
            FieldElement img = ext_->zero();
            FieldElement up = ext_->one();
            u64 rest = v;
            for (u32 i = 0; i < base_->e(); ++i) {
                std::uint8_t digit = static_cast<std::uint8_t>(rest % base_->p());
                rest /= base_->p();
                if (digit) {
                    FieldElement term = ext_->zero();
                    std::vector<std::uint8_t> d(ext_->e(), 0);
                    d[0] = digit;
                    term = ext_->mul(ext_->from_digits(d), up);
                    img = ext_->add(img, term);
                }
                up = ext_->mul(up, u);
            }
            embed_.push_back(img);
        }
    }
    project_.reserve(q);
    for (u64 v = 0; v < q; ++v) project_.emplace_back(embed_[v], static_cast<u32>(v));
    std::sort(project_.begin(), project_.end(),
              [](const auto& a, const auto& b) { return a.first.digits < b.first.digits; });
}

FieldElement RootContext::beta_pow(std::uint64_t i) const { return ext_->pow(beta_, BigInt(i % n_)); }

FieldElement RootContext::embed(std::uint32_t packed_base) const {
    if (packed_base >= embed_.size()) throw std::invalid_argument("base value out of range");
    return embed_[packed_base];
}

std::uint32_t RootContext::project(const FieldElement& v) const {
    auto it = std::lower_bound(project_.begin(), project_.end(), v.digits,
                               [](const auto& a, const auto& d) { return a.first.digits < d; });
    if (it == project_.end() || it->first.digits != v.digits)
        throw std::domain_error("coefficient falls outside the base field (inconsistent inputs)");
    return it->second;
}

Poly RootContext::minimal_polynomial(std::uint64_t s) const {
    s %= n_;
    u64 leader = part_.leader_of(s);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = minpoly_cache_.find(leader);
        if (it != minpoly_cache_.end()) return it->second;
    }
    const auto& orbit = part_.coset_of(leader);
    // product of (x - beta^i) over the coset, in the extension field
    std::vector<FieldElement> coeffs{ext_->one()};
    for (u64 i : orbit) {
        FieldElement r = beta_pow(i);
        std::vector<FieldElement> next(coeffs.size() + 1, ext_->zero());
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            next[j + 1] = ext_->add(next[j + 1], coeffs[j]);
            next[j] = ext_->sub(next[j], ext_->mul(coeffs[j], r));
        }
        coeffs = std::move(next);
    }
    std::vector<u32> packed(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j) packed[j] = project(coeffs[j]);
    Poly out = Poly::from_coeffs(base_, std::move(packed));
    if (out.degree() != static_cast<std::int64_t>(orbit.size()))
        throw std::logic_error("minimal polynomial degree != coset size");
    std::lock_guard<std::mutex> lock(mu_);
    minpoly_cache_.emplace(leader, out);
    return out;
}

bool RootContext::is_root(const Poly& f, std::uint64_t i) const {
    FieldElement x = beta_pow(i);
    FieldElement acc = ext_->zero();
    for (std::size_t j = f.coeffs().size(); j-- > 0;) {
        acc = ext_->mul(acc, x);
        u32 c = f.coeffs()[j];
        if (c) acc = ext_->add(acc, embed_[c]);
    }
    return ext_->is_zero(acc);
}

std::vector<std::uint64_t> RootContext::root_exponents(const Poly& f) const {
    std::vector<u64> out;
    // root sets of divisors of x^n - 1 are unions of cosets: test leaders only
    for (u64 leader : part_.gamma)
        if (is_root(f, leader))
            for (u64 i : part_.coset_of(leader)) out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
struct CtxKey {
    u64 field_id;
    u64 n;
    std::vector<u32> ext_mod;
    bool operator<(const CtxKey& o) const {
        return std::tie(field_id, n, ext_mod) < std::tie(o.field_id, o.n, o.ext_mod);
    }
};
std::mutex g_ctx_mu;
std::map<CtxKey, RootContextPtr> g_ctx_cache;
}  // namespace

RootContextPtr get_root_context(FieldPtr base, std::uint64_t n, const ModulusOverrides& overrides) {
    require_poly_field(base);
    u64 q = static_cast<u64>(base->size());
    if (n < 2 || std::gcd(n, q) != 1) throw std::invalid_argument("need n >= 2 with gcd(n, q) = 1");
    u64 ext_e = base->e() * ord_mod(n, q);
    CtxKey key{base->id(), n, {}};
    if (auto it = overrides.find({base->p(), static_cast<u32>(ext_e)}); it != overrides.end())
        key.ext_mod = it->second;
    {
        std::lock_guard<std::mutex> lock(g_ctx_mu);
        auto it = g_ctx_cache.find(key);
        if (it != g_ctx_cache.end()) return it->second;
    }
    auto ctx = std::make_shared<const RootContext>(base, n, overrides);
    std::lock_guard<std::mutex> lock(g_ctx_mu);
    auto [it, _] = g_ctx_cache.emplace(std::move(key), std::move(ctx));
    return it->second;
}

std::vector<std::pair<std::uint64_t, Poly>> factor_xn_minus_1(FieldPtr base, std::uint64_t n,
                                                              const ModulusOverrides& overrides) {
    RootContextPtr ctx = get_root_context(base, n, overrides);
    std::vector<std::pair<u64, Poly>> out;
    Poly prod = Poly::one(base);
    for (u64 leader : ctx->cosets().gamma) {
        Poly f = ctx->minimal_polynomial(leader);
        prod = prod * f;
        out.emplace_back(leader, std::move(f));
    }
    if (prod != Poly::x_pow_n_minus_1(base, n))
        throw std::logic_error("factor product does not reproduce x^n - 1");
    return out;
}

}  // namespace lcdc
