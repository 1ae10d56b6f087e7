#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcdc/poly.hpp"

namespace lcdc {

/// Cyclic code of length n over GF(q) with monic generator g | x^n - 1.
struct CyclicCode {
    std::uint64_t n = 0;
    FieldPtr field;
    Poly g;            // monic generator
    Poly h;            // parity-check polynomial (x^n - 1) / g
    std::uint64_t k = 0;  // dimension n - deg g
};

/// Requires gcd(n, q) = 1, g monic, g | x^n - 1.  k = 0 (g = x^n - 1) is
/// accepted as the valid zero code.
CyclicCode from_generator(std::uint64_t n, FieldPtr field, const Poly& g);

CyclicCode dual(const CyclicCode& c);
/// C intersect C-dual; generator is the monic lcm of g and the dual
/// generator.  LCD holds iff the hull is zero-dimensional.
CyclicCode hull(const CyclicCode& c);
/// Codewords of the hull vanishing at 1.
CyclicCode even_like_subcode(const CyclicCode& c);

enum class LcdMethod { SelfReciprocal, RootInverse, HullRank };

bool is_lcd(const CyclicCode& c, LcdMethod method = LcdMethod::SelfReciprocal,
            const ModulusOverrides& overrides = {});
/// Coordinate reversal of every generator-matrix row stays in the code
/// (membership via remainder mod g).
bool is_reversible(const CyclicCode& c);

/// coefficients of message(x) * g(x), as a length-n vector.
std::vector<std::uint32_t> encode(const CyclicCode& c, const std::vector<std::uint32_t>& message);

/// Largest designed distance: longest cyclic run of consecutive root
/// exponents of g, plus one.  Requires g != 1.
std::uint64_t bose_distance(const CyclicCode& c, const ModulusOverrides& overrides = {});

struct Witness {
    std::uint64_t weight = 0;
    std::vector<std::uint32_t> codeword;
    bool operator==(const Witness&) const = default;
};

struct DistanceConfig {
    std::uint64_t exhaustive_cap = std::uint64_t(1) << 22;
    std::uint32_t witness_support_max = 4;
    std::uint32_t threads = 1;
    std::uint64_t theorem_bound = 0;  // optional caller-supplied lower bound
    std::string theorem_label = "theorem_bound";
};

struct DistanceResult {
    std::uint64_t d_lower = 0;
    std::string provenance;  // "exhaustive", "bose_run", or the theorem label
    std::optional<std::uint64_t> d_exact;
    std::optional<Witness> witness;
    std::uint64_t bose = 0;
};

/// Exhaustive enumeration when q^k <= exhaustive_cap, else bound plus
/// witness search over low-support messages.  Deterministic for any thread
/// count.  Requires k >= 1.
DistanceResult min_distance(const CyclicCode& c, const DistanceConfig& cfg = {},
                            const ModulusOverrides& overrides = {});

struct CodeReport {
    std::uint64_t n = 0, q = 0, k = 0;
    std::uint64_t d_lower = 0;
    std::string d_lower_provenance;
    std::optional<std::uint64_t> d_exact;
    std::optional<Witness> witness;
    bool lcd = false;
    bool reversible = false;
    std::uint64_t bose = 0;
    std::vector<std::uint32_t> generator;

    bool operator==(const CodeReport&) const = default;
};

CodeReport analyze(const CyclicCode& c, const DistanceConfig& cfg = {},
                   const ModulusOverrides& overrides = {});

}  // namespace lcdc
