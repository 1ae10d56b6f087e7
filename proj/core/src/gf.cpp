#include "lcdc/gf.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>

namespace lcdc {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod_u64(u64 a, u64 k, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (k) {
        if (k & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        k >>= 1;
    }
    return r;
}

bool miller_rabin(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    u64 c = 1;
    while (true) {
        u64 x = 2, y = 2, d = 1;
        auto f = [&](u64 v) { return (mulmod_u64(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
        ++c;
    }
}

void factorize_u64(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factorize_u64(d, out);
    factorize_u64(n / d, out);
}

// ---- dense polynomial arithmetic over GF(p), digit vectors ascending ----

using Digits = std::vector<std::uint8_t>;

void strip(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits gfp_mul(const Digits& a, const Digits& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += u64(a[i]) * b[j];
    }
    Digits out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint8_t>(acc[i] % p);
    strip(out);
    return out;
}

// remainder of a by monic b
Digits gfp_mod(Digits a, const Digits& b, std::uint32_t p) {
    strip(a);
    while (a.size() >= b.size()) {
        std::uint32_t c = a.back();
        std::size_t s = a.size() - b.size();
        if (c) {
            for (std::size_t i = 0; i < b.size(); ++i)
                a[s + i] = static_cast<std::uint8_t>((a[s + i] + u64(p - c) * b[i]) % p);
        }
        a.pop_back();
        strip(a);
    }
    return a;
}

Digits gfp_mulmod(const Digits& a, const Digits& b, const Digits& mod, std::uint32_t p) {
    return gfp_mod(gfp_mul(a, b, p), mod, p);
}

Digits gfp_gcd(Digits a, Digits b, std::uint32_t p) {
    strip(a);
    strip(b);
    while (!b.empty()) {
        Digits r = gfp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// t^p mod f
Digits gfp_frobenius(const Digits& t, const Digits& f, std::uint32_t p) {
    Digits r{1};
    Digits base = t;
    std::uint32_t k = p;
    while (k) {
        if (k & 1) r = gfp_mulmod(r, base, f, p);
        base = gfp_mulmod(base, base, f, p);
        k >>= 1;
    }
    return r;
}

// Irreducibility over GF(p): x^(p^e) == x mod f and gcd(x^(p^(e/r)) - x, f) = 1
// for every prime r | e.
bool gfp_is_irreducible(const Digits& f, std::uint32_t p) {
    std::size_t e = f.size() - 1;
    if (e == 0) return false;
    if (e == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    Digits x{0, 1};
    // frob[k] = x^(p^k) mod f, computed incrementally
    Digits t = x;
    std::vector<u64> primes = prime_factors_u64(e);
    std::vector<std::size_t> checkpoints;
    for (u64 r : primes) checkpoints.push_back(e / r);
    std::sort(checkpoints.begin(), checkpoints.end());
    std::size_t ci = 0;
    for (std::size_t k = 1; k <= e; ++k) {
        t = gfp_frobenius(t, f, p);
        while (ci < checkpoints.size() && checkpoints[ci] == k) {
            // gcd(t - x, f) must be 1
            Digits diff = t;
            if (diff.size() < 2) diff.resize(2, 0);
            diff[1] = static_cast<std::uint8_t>((diff[1] + p - 1) % p);
            strip(diff);
            Digits g = gfp_gcd(f, diff, p);
            if (g.size() != 1) return false;
            ++ci;
        }
    }
    return t == x;
}

// order of (class of x) in GF(p)[x]/(f) equals p^e - 1?  Needs p^e - 1 < 2^63.
bool gfp_x_is_primitive(const Digits& f, std::uint32_t p, u64 group_order) {
    Digits x{0, 1};
    for (u64 r : prime_factors_u64(group_order)) {
        u64 k = group_order / r;
        // x^k mod f
        Digits acc{1}, base = x;
        while (k) {
            if (k & 1) acc = gfp_mulmod(acc, base, f, p);
            base = gfp_mulmod(base, base, f, p);
            k >>= 1;
        }
        if (acc.size() == 1 && acc[0] == 1) return false;
    }
    return true;
}

// Ascending-coefficient-vector lexicographic iteration over monic degree-e
// polynomials: (c0, c1, ..., c_{e-1}) with c0 most significant.
struct LexCoeffIter {
    std::uint32_t p;
    Digits c;  // length e, the non-leading coefficients
    bool done = false;
    explicit LexCoeffIter(std::uint32_t p_, std::uint32_t e) : p(p_), c(e, 0) { c[0] = 1; }
    Digits poly() const {
        Digits f = c;
        f.push_back(1);
        return f;
    }
    void next() {
        // last index varies fastest
        for (std::size_t i = c.size(); i-- > 0;) {
            if (++c[i] < p) return;
            c[i] = 0;
        }
        done = true;
    }
};

std::uint32_t smallest_primitive_root(std::uint32_t p) {
    if (p == 2) return 1;
    std::vector<u64> primes = prime_factors_u64(p - 1);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 r : primes)
            if (powmod_u64(g, (p - 1) / r, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

std::atomic<std::uint32_t> g_field_ids{1};

BigInt pow_big(std::uint32_t base, std::uint32_t exp) {
    BigInt r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (!miller_rabin(n, a)) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
    std::vector<u64> fs;
    factorize_u64(n, fs);
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    return fs;
}

std::uint64_t euler_phi_u64(std::uint64_t n) {
    u64 r = n;
    for (u64 p : prime_factors_u64(n)) r -= r / p;
    return r;
}

std::uint64_t ord_mod(std::uint64_t n, std::uint64_t q) {
    if (n < 2) throw std::invalid_argument("ord_mod: n must be >= 2");
    if (std::gcd(n, q) != 1) throw std::invalid_argument("ord_mod: gcd(n, q) must be 1");
    u64 m = 1, v = q % n;
    while (v != 1) {
        v = mulmod_u64(v, q % n, n);
        ++m;
    }
    return m;
}

std::uint64_t gcd_power_pair(std::uint64_t a, std::uint32_t ell, std::uint32_t h) {
    if (a < 2 || ell < 1 || h < 1) throw std::invalid_argument("gcd_power_pair: need a >= 2, ell >= 1, h >= 1");
    auto checked_pow = [](u64 base, std::uint32_t k) {
        u128 r = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
            r *= base;
            if (r > (u128(1) << 62)) throw std::invalid_argument("gcd_power_pair: a^k out of 64-bit range");
        }
        return static_cast<u64>(r);
    };
    u64 direct = std::gcd(checked_pow(a, ell) + 1, checked_pow(a, h) - 1);
    u64 g = std::gcd<u64>(ell, h);
    u64 formula;
    if ((h / g) % 2 == 1)
        formula = (a % 2 == 0) ? 1 : 2;
    else
        formula = checked_pow(a, static_cast<std::uint32_t>(g)) + 1;
    if (formula != direct) throw std::logic_error("gcd_power_pair: case formula disagrees with direct gcd");
    return direct;
}

// ---------------------------------------------------------------------------

Field::~Field() = default;

void Field::check(const FieldElement& a) const {
    if (a.field_id != id_) throw std::invalid_argument("element belongs to a different field");
    if (a.digits.size() != e_) throw std::invalid_argument("element has wrong digit count");
}

FieldElement Field::zero() const { return FieldElement{id_, Digits(e_, 0)}; }

FieldElement Field::one() const {
    Digits d(e_, 0);
    d[0] = 1;
    return FieldElement{id_, d};
}

FieldElement Field::from_digits(const std::vector<std::uint8_t>& digits) const {
    if (digits.size() != e_) throw std::invalid_argument("digit vector must have length e");
    for (auto d : digits)
        if (d >= p_) throw std::invalid_argument("digit out of range [0, p)");
    return FieldElement{id_, digits};
}

FieldElement Field::from_packed(std::uint64_t value) const {
    Digits d(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
        d[i] = static_cast<std::uint8_t>(value % p_);
        value /= p_;
    }
    if (value != 0) throw std::invalid_argument("packed value out of range");
    return FieldElement{id_, d};
}

std::uint64_t Field::packed(const FieldElement& a) const {
    check(a);
    if (!packable_) throw std::logic_error("field too large for packed representation");
    u64 v = 0;
    for (std::size_t i = a.digits.size(); i-- > 0;) v = v * p_ + a.digits[i];
    return v;
}

bool Field::is_zero(const FieldElement& a) const {
    check(a);
    return std::all_of(a.digits.begin(), a.digits.end(), [](std::uint8_t d) { return d == 0; });
}

bool Field::is_one(const FieldElement& a) const {
    check(a);
    if (a.digits[0] != 1) return false;
    return std::all_of(a.digits.begin() + 1, a.digits.end(), [](std::uint8_t d) { return d == 0; });
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    Digits d(e_);
    for (std::uint32_t i = 0; i < e_; ++i) d[i] = static_cast<std::uint8_t>((a.digits[i] + b.digits[i]) % p_);
    return FieldElement{id_, d};
}

FieldElement Field::neg(const FieldElement& a) const {
    check(a);
    Digits d(e_);
    for (std::uint32_t i = 0; i < e_; ++i) d[i] = static_cast<std::uint8_t>((p_ - a.digits[i]) % p_);
    return FieldElement{id_, d};
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

std::vector<std::uint8_t> Field::mul_digits(const Digits& a, const Digits& b) const {
    if (p_ == 2 && !modulus_words_.empty()) {
        // word-packed carryless product and reduction
        std::size_t words = (2 * e_ + 63) / 64;
        std::vector<u64> aw((e_ + 63) / 64, 0), acc(words, 0);
        for (std::uint32_t i = 0; i < e_; ++i)
            if (a[i]) aw[i / 64] |= u64(1) << (i % 64);
        for (std::uint32_t j = 0; j < e_; ++j) {
            if (!b[j]) continue;
            std::size_t w = j / 64, s = j % 64;
            for (std::size_t i = 0; i < aw.size(); ++i) {
                acc[i + w] ^= aw[i] << s;
                if (s && i + w + 1 < words) acc[i + w + 1] ^= aw[i] >> (64 - s);
            }
        }
        // reduce bits 2e-2 .. e
        for (std::size_t bit = 2 * e_ - 2 + 1; bit-- > e_;) {
            if (!(acc[bit / 64] >> (bit % 64) & 1)) continue;
            std::size_t off = bit - e_;
            std::size_t w = off / 64, s = off % 64;
            for (std::size_t i = 0; i < modulus_words_.size(); ++i) {
                acc[i + w] ^= modulus_words_[i] << s;
                if (s && i + w + 1 < words) acc[i + w + 1] ^= modulus_words_[i] >> (64 - s);
            }
        }
        Digits out(e_);
        for (std::uint32_t i = 0; i < e_; ++i) out[i] = static_cast<std::uint8_t>(acc[i / 64] >> (i % 64) & 1);
        return out;
    }
    std::vector<u64> acc(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (!a[i]) continue;
        for (std::uint32_t j = 0; j < e_; ++j) acc[i + j] += u64(a[i]) * b[j];
    }
    for (auto& v : acc) v %= p_;
    for (std::size_t i = acc.size(); i-- > e_;) {
        u64 c = acc[i];
        if (!c) continue;
        acc[i] = 0;
        for (std::uint32_t j = 0; j < e_; ++j) acc[i - e_ + j] = (acc[i - e_ + j] + (p_ - c) * modulus_[j]) % p_;
    }
    Digits out(e_);
    for (std::uint32_t i = 0; i < e_; ++i) out[i] = static_cast<std::uint8_t>(acc[i]);
    return out;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    if (has_tables()) {
        u64 pa = packed(a), pb = packed(b);
        return from_packed(mul_packed(pa, pb));
    }
    if (e_ == 1) return FieldElement{id_, {static_cast<std::uint8_t>(u64(a.digits[0]) * b.digits[0] % p_)}};
    return FieldElement{id_, mul_digits(a.digits, b.digits)};
}

std::uint64_t Field::mul_packed(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    u64 ord = static_cast<u64>(order_);
    return exp_[(u64(log_[a]) + log_[b]) % ord];
}

std::uint64_t Field::add_packed(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2) return a ^ b;
    u64 out = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        out += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

FieldElement Field::inv(const FieldElement& a) const {
    check(a);
    if (is_zero(a)) throw std::invalid_argument("division by zero field element");
    if (has_tables()) {
        u64 ord = static_cast<u64>(order_);
        return from_packed(exp_[(ord - log_[packed(a)]) % ord]);
    }
    return pow(a, order_ - 1);
}

FieldElement Field::div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

FieldElement Field::pow(const FieldElement& a, std::int64_t k) const { return pow(a, BigInt(k)); }

FieldElement Field::pow(const FieldElement& a, const BigInt& k) const {
    check(a);
    if (is_zero(a)) {
        if (k == 0) return one();
        if (k < 0) throw std::invalid_argument("negative power of zero");
        return zero();
    }
    BigInt r = k % order_;
    if (r < 0) r += order_;
    if (has_tables()) {
        BigInt l = (r * log_[packed(a)]) % static_cast<u64>(order_);
        return from_packed(exp_[static_cast<u64>(l)]);
    }
    FieldElement acc = one(), base = a;
    while (r > 0) {
        if ((r & 1) != 0) acc = mul(acc, base);
        base = mul(base, base);
        r >>= 1;
    }
    return acc;
}

BigInt Field::order_of(const FieldElement& a) const {
    check(a);
    if (is_zero(a)) throw std::invalid_argument("zero has no multiplicative order");
    if (order_ > BigInt(std::numeric_limits<std::int64_t>::max()))
        throw std::logic_error("group order too large to factor");
    u64 ord = static_cast<u64>(order_);
    if (has_tables()) {
        u64 l = log_[packed(a)];
        return BigInt(ord / std::gcd(ord, l == 0 ? ord : l));
    }
    u64 o = ord;
    for (u64 r : prime_factors_u64(ord)) {
        while (o % r == 0 && is_one(pow(a, BigInt(o / r)))) o /= r;
    }
    return BigInt(o);
}

bool Field::has_order(const FieldElement& a, std::uint64_t n) const {
    check(a);
    if (is_zero(a)) return false;
    if (!is_one(pow(a, BigInt(n)))) return false;
    for (u64 r : prime_factors_u64(n))
        if (is_one(pow(a, BigInt(n / r)))) return false;
    return true;
}

std::string Field::to_string(const FieldElement& a) const {
    check(a);
    std::string s = "[";
    for (std::size_t i = 0; i < a.digits.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.digits[i]);
    }
    return s + "]";
}

void Field::build_tables() {
    u64 q = static_cast<u64>(size_);
    u64 ord = q - 1;
    exp_.assign(ord, 0);
    log_.assign(q, 0);
    std::vector<bool> seen(q, false);
    // walk powers of the generator; multiply by x via shift+reduce when the
    // generator is the class of x, otherwise via the generic product
    Digits gen = generator_.digits;
    bool gen_is_x = (e_ > 1) && gen == [&] {
        Digits d(e_, 0);
        d[1] = 1;
        return d;
    }();
    Digits cur(e_, 0);
    cur[0] = 1;
    auto pack = [&](const Digits& d) {
        u64 v = 0;
        for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
        return v;
    };
    for (u64 i = 0; i < ord; ++i) {
        u64 v = pack(cur);
        if (v == 1 && i > 0) throw std::invalid_argument("generator order is smaller than p^e - 1");
        if (seen[v]) throw std::invalid_argument("generator order is smaller than p^e - 1");
        seen[v] = true;
        exp_[i] = static_cast<std::uint32_t>(v);
        log_[v] = static_cast<std::uint32_t>(i);
        if (gen_is_x) {
            // multiply by x: shift digits up, reduce once by the monic modulus
            std::uint8_t carry = cur[e_ - 1];
            for (std::size_t j = e_ - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            if (carry)
                for (std::uint32_t j = 0; j < e_; ++j)
                    cur[j] = static_cast<std::uint8_t>((cur[j] + u64(p_ - carry) * modulus_[j]) % p_);
        } else if (e_ == 1) {
            cur[0] = static_cast<std::uint8_t>(u64(cur[0]) * gen[0] % p_);
        } else {
            cur = mul_digits(cur, gen);
        }
    }
}

FieldPtr Field::build(std::uint32_t p, std::uint32_t e,
                      std::optional<std::vector<std::uint32_t>> modulus,
                      std::optional<std::vector<std::uint8_t>> generator, bool require_verified) {
    if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
    if (p > 251) throw std::invalid_argument("p too large (digits are bytes)");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->e_ = e;
    f->id_ = g_field_ids.fetch_add(1);
    f->size_ = pow_big(p, e);
    f->order_ = f->size_ - 1;
    f->packable_ = f->size_ <= BigInt(1) << 62;
    bool order_factorable = f->order_ <= BigInt(std::numeric_limits<std::int64_t>::max());

    Digits mod;
    if (e == 1) {
        if (modulus && !modulus->empty()) throw std::invalid_argument("prime fields take no modulus");
    } else if (modulus) {
        if (modulus->size() != e + 1) throw std::invalid_argument("modulus must have degree e");
        mod.resize(e + 1);
        for (std::size_t i = 0; i <= e; ++i) {
            if ((*modulus)[i] >= p) throw std::invalid_argument("modulus coefficient out of range");
            mod[i] = static_cast<std::uint8_t>((*modulus)[i]);
        }
        if (mod[e] != 1) throw std::invalid_argument("modulus must be monic");
        if (!gfp_is_irreducible(mod, p)) throw std::invalid_argument("modulus is reducible over GF(p)");
    } else {
        // lexicographically smallest primitive (or, unverified, irreducible)
        // monic polynomial by ascending coefficient vector
        if (require_verified && !order_factorable)
            throw std::invalid_argument("field too large to verify a primitive modulus; pass one explicitly");
        // primitivity forces the constant term: the norm of a root is
        // (-1)^e c0 and must be a primitive root of GF(p)
        std::vector<bool> c0_ok(p, !order_factorable);
        if (order_factorable) {
            for (std::uint32_t g = 1; g < p; ++g) {
                u64 norm = (e % 2 == 0) ? g : (p - g) % p;
                if (norm == 0) continue;
                u64 o = p - 1;
                for (u64 r : prime_factors_u64(p - 1))
                    while (o % r == 0 && powmod_u64(norm, o / r, p) == 1) o /= r;
                if (o == p - 1) c0_ok[g] = true;
            }
            c0_ok[0] = false;
        }
        for (LexCoeffIter it(p, e); !it.done; it.next()) {
            if (!c0_ok[it.c[0]]) continue;
            Digits cand = it.poly();
            if (!gfp_is_irreducible(cand, p)) continue;
            if (order_factorable && !gfp_x_is_primitive(cand, p, static_cast<u64>(f->order_))) continue;
            mod = cand;
            break;
        }
        if (mod.empty()) throw std::logic_error("no primitive polynomial found");
    }
    f->modulus_ = mod;
    if (p == 2 && e > 1) {
        f->modulus_words_.assign((e + 64) / 64, 0);
        for (std::uint32_t i = 0; i <= e; ++i)
            if (mod[i]) f->modulus_words_[i / 64] |= u64(1) << (i % 64);
    }

    bool tables = f->size_ <= BigInt(Field::kTableLimit);
    bool x_primitive = false;
    if (e > 1 && order_factorable) x_primitive = gfp_x_is_primitive(mod, p, static_cast<u64>(f->order_));

    if (generator) {
        f->generator_ = f->from_digits(*generator);
        if (f->is_zero(f->generator_)) throw std::invalid_argument("generator cannot be zero");
        if (order_factorable) {
            if (!f->has_order(f->generator_, static_cast<u64>(f->order_)))
                throw std::invalid_argument("proposed generator has order smaller than p^e - 1");
        } else if (require_verified) {
            throw std::invalid_argument("field too large to verify the generator order");
        } else {
            f->generator_verified_ = false;
        }
    } else if (e == 1) {
        f->generator_ = FieldElement{f->id_, {static_cast<std::uint8_t>(smallest_primitive_root(p))}};
    } else if (x_primitive) {
        Digits d(e, 0);
        d[1] = 1;
        f->generator_ = FieldElement{f->id_, d};
    } else if (order_factorable) {
        // search in digit-vector lexicographic order (d0 most significant)
        Digits d(e, 0);
        bool found = false;
        while (true) {
            // advance: last digit fastest
            std::size_t i = e;
            while (i-- > 0) {
                if (++d[i] < p) break;
                d[i] = 0;
                if (i == 0) throw std::logic_error("no generator found");
            }
            FieldElement cand{f->id_, d};
            if (!f->is_zero(cand) && f->has_order(cand, static_cast<u64>(f->order_))) {
                f->generator_ = cand;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no generator found");
    } else {
        // unverified context: class of x, order unknown
        Digits d(e, 0);
        d[1] = 1;
        f->generator_ = FieldElement{f->id_, d};
        f->generator_verified_ = false;
        if (require_verified) throw std::invalid_argument("field too large to verify a generator");
    }

    if (tables) f->build_tables();
    return f;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t e,
                    std::optional<std::vector<std::uint32_t>> modulus,
                    std::optional<std::vector<std::uint8_t>> generator) {
    return Field::build(p, e, std::move(modulus), std::move(generator), true);
}

FieldPtr make_extension_context(std::uint32_t p, std::uint32_t e,
                                std::optional<std::vector<std::uint32_t>> modulus) {
    return Field::build(p, e, std::move(modulus), std::nullopt, false);
}

}  // namespace lcdc
