#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lcdc/cosets.hpp"
#include "lcdc/gf.hpp"

namespace lcdc {

/// Dense polynomial over a (small, table-mode) coefficient field.
/// Coefficients are digit-packed field values, ascending by exponent, with
/// no trailing zeros; the zero polynomial is the empty vector.
class Poly {
  public:
    Poly() = default;

    static Poly zero(FieldPtr field);
    static Poly one(FieldPtr field);
    static Poly from_coeffs(FieldPtr field, std::vector<std::uint32_t> packed);
    static Poly monomial(FieldPtr field, std::uint64_t degree, std::uint32_t coeff = 1);
    static Poly x_pow_n_minus_1(FieldPtr field, std::uint64_t n);

    const FieldPtr& field() const { return field_; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    /// -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    std::uint32_t coeff(std::uint64_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t constant_term() const { return coeff(0); }
    std::uint32_t leading() const;
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    std::uint64_t weight() const;
    Poly monic() const;
    std::uint32_t eval(std::uint32_t packed_point) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }

  private:
    FieldPtr field_;
    std::vector<std::uint32_t> c_;
    void canonize();
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
/// (quotient, remainder) with deg r < deg b.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
bool divides(const Poly& a, const Poly& b);  // a | b

Poly poly_gcd(Poly a, Poly b);                       // monic
Poly poly_lcm(const Poly& a, const Poly& b);         // monic
Poly poly_lcm(FieldPtr field, const std::vector<Poly>& fs);  // monic; empty set -> 1

/// f*(x) = f(0)^{-1} x^{deg f} f(1/x).  Requires f != 0 and f(0) != 0.
Poly reciprocal(const Poly& f);
bool is_self_reciprocal(const Poly& f);

bool is_irreducible(const Poly& f);

std::string to_coeff_list(const Poly& f);  // "1,1,0,0,1"
std::string to_human(const Poly& f);       // "x^4+x+1"
/// Accepts either form; integers are digit-packed field values.
Poly parse_poly(FieldPtr field, const std::string& text);

/// A primitive n-th root of unity beta = alpha^((q^m-1)/n) in GF(q^m),
/// m = ord_n(q), together with the base-field embedding needed to project
/// minimal-polynomial coefficients back to GF(q).  Immutable and safe to
/// share; minimal polynomials are memoized per coset leader.
class RootContext {
  public:
    RootContext(FieldPtr base, std::uint64_t n, const ModulusOverrides& overrides = {});
    /// Explicit extension and root; beta must have multiplicative order n.
    RootContext(FieldPtr base, FieldPtr extension, FieldElement beta);

    const FieldPtr& base() const { return base_; }
    const FieldPtr& extension() const { return ext_; }
    std::uint64_t n() const { return n_; }
    std::uint64_t m() const { return m_; }
    const FieldElement& beta() const { return beta_; }
    const CosetPartition& cosets() const { return part_; }

    FieldElement beta_pow(std::uint64_t i) const;
    FieldElement embed(std::uint32_t packed_base) const;
    /// Throws if the element does not lie in the embedded base field.
    std::uint32_t project(const FieldElement& v) const;

    /// Minimal polynomial of beta^s over the base field: monic, irreducible,
    /// degree |C_s|.
    Poly minimal_polynomial(std::uint64_t s) const;
    /// f(beta^i) == 0.
    bool is_root(const Poly& f, std::uint64_t i) const;
    /// All i in Z_n with f(beta^i) = 0, sorted.
    std::vector<std::uint64_t> root_exponents(const Poly& f) const;

  private:
    void init();
    FieldPtr base_;
    FieldPtr ext_;
    std::uint64_t n_ = 0, m_ = 0;
    FieldElement beta_;
    CosetPartition part_;
    std::vector<FieldElement> embed_;                 // packed base value -> ext element
    std::vector<std::pair<FieldElement, std::uint32_t>> project_;  // ext element -> packed base
    mutable std::mutex mu_;
    mutable std::unordered_map<std::uint64_t, Poly> minpoly_cache_;
};

using RootContextPtr = std::shared_ptr<const RootContext>;

/// Process-wide cache: one context per (base field, n, extension modulus).
RootContextPtr get_root_context(FieldPtr base, std::uint64_t n,
                                const ModulusOverrides& overrides = {});

/// Canonical factorization of x^n - 1 over the base field: one monic
/// irreducible factor per coset leader, ordered by leader.  The product of
/// the factors is asserted to equal x^n - 1.
std::vector<std::pair<std::uint64_t, Poly>> factor_xn_minus_1(
    FieldPtr base, std::uint64_t n, const ModulusOverrides& overrides = {});

}  // namespace lcdc
