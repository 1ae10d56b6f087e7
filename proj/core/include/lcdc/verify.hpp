#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcdc/report.hpp"

namespace lcdc {

enum class Verdict { ExactMatch, BoundConsistent, Mismatch };

const char* verdict_name(Verdict v);

/// One reproduction entry: a published code (or count) re-derived from its
/// construction and checked against the reported parameters.
struct ReproductionRecord {
    std::string label;
    std::string inputs;  // human-readable construction parameters

    // expectations
    std::uint64_t expect_n = 0;
    std::uint64_t expect_k = 0;
    std::optional<std::uint64_t> expect_d;      // reported minimum distance
    std::optional<std::uint64_t> expect_count;  // for counting entries
    std::vector<std::uint32_t> expect_generator;  // optional bit-exact check

    // measured
    std::optional<CodeReport> measured;
    std::optional<std::string> measured_count;
    std::string note;
    Verdict verdict = Verdict::Mismatch;
};

enum class Suite { Fast, All };

struct VerifySummary {
    std::vector<ReproductionRecord> records;  // ordered by label
    bool all_ok = false;
};

/// Runs the reproduction table.  `Fast` keeps every distance check inside
/// cfg.exhaustive_cap (falling back to bound-plus-witness); `All` raises the
/// cap per entry so the slow exhaustions run.  Records run concurrently up
/// to cfg.threads; mismatches are data, not exceptions.
VerifySummary verify_paper(Suite suite, const RunConfig& cfg = {});

std::string verify_to_text(const VerifySummary& s);
std::string verify_to_json(const VerifySummary& s);
std::string verify_to_csv(const VerifySummary& s);

}  // namespace lcdc
