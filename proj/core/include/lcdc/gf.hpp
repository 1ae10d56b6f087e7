#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lcdc {

using BigInt = boost::multiprecision::cpp_int;

/// Element of GF(p^e): base-p digits, least significant first, length e.
/// The field_id ties the element to the Field instance that created it;
/// arithmetic between elements of different fields is rejected.
struct FieldElement {
    std::uint32_t field_id = 0;
    std::vector<std::uint8_t> digits;

    bool operator==(const FieldElement&) const = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Explicit modulus choices keyed by (p, e), ascending coefficient lists.
using ModulusOverrides =
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>;

/// GF(p^e) with an explicit monic irreducible modulus of degree e (absent for
/// e = 1) and a verified multiplicative generator.  Immutable after
/// construction and safe to share across threads.
///
/// Multiplication runs off log/antilog tables whenever p^e <= 2^20; larger
/// fields fall back to digit-vector arithmetic (schoolbook product plus
/// modular reduction, with a word-packed path for p = 2).
class Field {
  public:
    static constexpr std::uint64_t kTableLimit = 1u << 20;

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t id() const { return id_; }
    bool prime_field() const { return e_ == 1; }
    bool has_tables() const { return !exp_.empty(); }

    /// p^e as a big integer (can exceed 64 bits).
    const BigInt& size() const { return size_; }
    /// p^e - 1.
    const BigInt& group_order() const { return order_; }
    /// True when p^e fits in 63 bits, i.e. elements have a packed form.
    bool packable() const { return packable_; }

    /// Modulus as an ascending coefficient list of length e+1 (monic).
    /// Empty for prime fields.
    const std::vector<std::uint8_t>& modulus() const { return modulus_; }
    const FieldElement& generator() const { return generator_; }
    /// False only for internal extension contexts that skipped the
    /// generator-order verification (fields too large to factor p^e - 1).
    bool generator_verified() const { return generator_verified_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_digits(const std::vector<std::uint8_t>& digits) const;
    FieldElement from_packed(std::uint64_t value) const;
    /// Digit-packed value sum d_i p^i.  Requires packable().
    std::uint64_t packed(const FieldElement& a) const;

    bool is_zero(const FieldElement& a) const;
    bool is_one(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement div(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;
    /// Any integer exponent; reduced mod p^e - 1 for nonzero bases.
    /// 0^0 = 1, 0^k = 0 for k > 0, 0^k rejected for k < 0.
    FieldElement pow(const FieldElement& a, std::int64_t k) const;
    FieldElement pow(const FieldElement& a, const BigInt& k) const;

    /// Multiplicative order.  Needs the factorization of p^e - 1, so it is
    /// only available when p^e - 1 fits in 64 bits.
    BigInt order_of(const FieldElement& a) const;
    /// Checks ord(a) == n for n | p^e - 1 without factoring p^e - 1.
    bool has_order(const FieldElement& a, std::uint64_t n) const;

    std::string to_string(const FieldElement& a) const;

    // Packed-value arithmetic shortcuts for table-mode fields.
    std::uint64_t mul_packed(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t add_packed(std::uint64_t a, std::uint64_t b) const;

    ~Field();

  private:
    Field() = default;
    static FieldPtr build(std::uint32_t p, std::uint32_t e,
                          std::optional<std::vector<std::uint32_t>> modulus,
                          std::optional<std::vector<std::uint8_t>> generator, bool require_verified);
    friend FieldPtr make_field(std::uint32_t, std::uint32_t,
                               std::optional<std::vector<std::uint32_t>>,
                               std::optional<std::vector<std::uint8_t>>);
    friend FieldPtr make_extension_context(std::uint32_t, std::uint32_t,
                                           std::optional<std::vector<std::uint32_t>>);

    void check(const FieldElement& a) const;
    std::vector<std::uint8_t> mul_digits(const std::vector<std::uint8_t>& a,
                                         const std::vector<std::uint8_t>& b) const;
    void build_tables();

    std::uint32_t p_ = 0, e_ = 0, id_ = 0;
    BigInt size_, order_;
    bool packable_ = false;
    bool generator_verified_ = true;
    std::vector<std::uint8_t> modulus_;
    FieldElement generator_;
    // log/antilog tables over packed values, indexed by powers of generator_.
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    // word-packed modulus for the p = 2 wide path
    std::vector<std::uint64_t> modulus_words_;
};

/// Builds GF(p^e).  If no modulus is given, the lexicographically smallest
/// primitive monic polynomial of degree e (by ascending coefficient vector)
/// is chosen and the generator defaults to the residue class of x.  A given
/// modulus must be monic irreducible of degree e; if it is primitive the
/// generator again defaults to the class of x, otherwise a generator is
/// found by search in digit-vector lexicographic order.  A proposed
/// generator is rejected unless its order is exactly p^e - 1.
FieldPtr make_field(std::uint32_t p, std::uint32_t e,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                    std::optional<std::vector<std::uint8_t>> generator = std::nullopt);

/// Internal-use construction for extension fields whose group order cannot
/// be factored (p^e - 1 beyond 64 bits): picks the lexicographically
/// smallest irreducible modulus and leaves the generator unverified.
FieldPtr make_extension_context(std::uint32_t p, std::uint32_t e,
                                std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

/// Smallest m >= 1 with q^m = 1 (mod n).  Requires gcd(n, q) = 1, n >= 2.
std::uint64_t ord_mod(std::uint64_t n, std::uint64_t q);

/// gcd(a^ell + 1, a^h - 1), computed both by the closed-form case split and
/// by direct 64-bit gcd; the two routes are asserted to agree.
std::uint64_t gcd_power_pair(std::uint64_t a, std::uint32_t ell, std::uint32_t h);

// Shared number-theory helpers.
bool is_prime_u64(std::uint64_t n);
std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n);  // distinct, sorted
std::uint64_t euler_phi_u64(std::uint64_t n);

}  // namespace lcdc
