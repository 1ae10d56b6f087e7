#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lcdc/codes.hpp"

namespace lcdc {

/// BCH code C_(q,n,delta,b): generator is the lcm of the minimal polynomials
/// of beta^b, ..., beta^(b+delta-2), subscripts mod n.
struct BchSpec {
    std::uint64_t q = 0;
    std::uint64_t n = 0;
    std::uint64_t delta = 0;  // 2 <= delta <= n
    std::int64_t b = 0;       // any integer, reduced mod n
};

/// Punctured generalized Reed-Muller order ell = ell1 (q-1) + ell0 with
/// 0 <= ell0 < q - 1 and ell < q(m-1).
struct GrmSpec {
    std::uint64_t q = 0;
    std::uint32_t m = 0;
    std::uint32_t ell = 0;
};

struct ProjSpec {
    std::uint64_t q = 0;
    std::uint32_t m = 0;       // even, >= 4 for the dimension formulas
    std::uint64_t delta = 0;
};

/// GF(q) for a prime power q, honoring any (p, e) modulus override.
FieldPtr base_field_for(std::uint64_t q, const ModulusOverrides& overrides = {});

CyclicCode bch(const BchSpec& spec, const ModulusOverrides& overrides = {});

enum class ReversiblePattern {
    ZeroCentered,  // b = -t, delta = 2t + 2
    OddMid,        // n odd, t odd: b = (n-t)/2, delta = t + 2
    EvenMid,       // n even: b = (n-2t)/2, delta = 2t + 2
};

CyclicCode reversible_bch(ReversiblePattern pattern, std::uint64_t q, std::uint64_t n,
                          std::uint64_t t, const ModulusOverrides& overrides = {});

struct AntiBchResult {
    CyclicCode code;                         // C_(q, q^ell+1, delta, 0)
    std::optional<std::uint64_t> predicted_k;  // set inside the stated regime
    std::uint64_t d_lower = 0;               // 2(delta - 1), from reversibility
};

AntiBchResult anti_bch(std::uint64_t q, std::uint32_t ell, std::uint64_t delta,
                       const ModulusOverrides& overrides = {});

struct GrmStarResult {
    CyclicCode code;
    std::uint64_t k_formula = 0;  // alternating binomial sum; asserted == n - deg g
    std::uint64_t d_claim = 0;    // (q - ell0) q^(m - ell1 - 1) - 1
};

GrmStarResult grm_star(const GrmSpec& spec, const ModulusOverrides& overrides = {});

struct ReversibleGrmResult {
    CyclicCode code;  // generator (x-1) lcm(g_R, g_R*)
    std::optional<std::uint64_t> predicted_k;
    std::uint64_t d_lower = 0;  // 2((q - ell0) q^(m - ell1 - 1) - 1)
};

ReversibleGrmResult reversible_grm(std::uint64_t q, std::uint32_t m, std::uint32_t ell,
                                   const ModulusOverrides& overrides = {});

struct ProjectiveResult {
    CyclicCode code;
    std::optional<std::uint64_t> predicted_k;
    std::uint64_t d_lower = 0;
};

/// Narrow-sense C_(q,n,delta,1) of projective length n = (q^m-1)/(q-1),
/// m >= 4 even, 2 <= delta <= q^(m/2).
ProjectiveResult projective_bch(std::uint64_t q, std::uint32_t m, std::uint64_t delta,
                                const ModulusOverrides& overrides = {});

/// Reversible C_(q,n,2 delta,1-delta), built as lcm(x-1, g_u, g_u*).
ProjectiveResult reversible_projective_bch(std::uint64_t q, std::uint32_t m, std::uint64_t delta,
                                           const ModulusOverrides& overrides = {});

/// Streams every reversible cyclic code of length n over GF(q) exactly once,
/// ordered by the binary rank of the generating subset of Pi (Pi ascending).
class ReversibleEnumerator {
  public:
    ReversibleEnumerator(std::uint64_t n, std::uint64_t q, const ModulusOverrides& overrides = {});

    std::optional<CyclicCode> next();
    const BigInt& total() const { return total_; }
    const std::vector<std::uint64_t>& pi() const;

  private:
    RootContextPtr ctx_;
    FieldPtr field_;
    std::vector<Poly> pair_lcm_;  // lcm(m_a, m_{n-a}) per Pi element
    BigInt total_;
    BigInt rank_ = 1;
};

struct CountResult {
    std::uint64_t n = 0, q = 0;
    std::uint32_t pi_size = 0;
    BigInt count;                        // 2^|Pi| - 1
    std::optional<BigInt> closed_form;   // n = q^m - 1, m an odd prime
    std::optional<std::uint32_t> m;      // the m above, when applicable
};

/// Count via |Pi|.  When n = q^m - 1 with m an odd prime, the closed-form
/// count is evaluated and asserted equal, and the self-reciprocal
/// irreducible-factor census (x - 1 alone for even q, x -+ 1 for odd q) is
/// verified through the coset pairing.
CountResult count_reversible(std::uint64_t n, std::uint64_t q);

}  // namespace lcdc
