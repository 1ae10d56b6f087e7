#pragma once

#include <cstdint>
#include <string>

#include "lcdc/codes.hpp"
#include "lcdc/cosets.hpp"

namespace lcdc {

enum class OutputFormat { Text, Json, Csv };

/// Engine configuration shared by the CLI and the reproduction suite.
struct RunConfig {
    std::uint64_t exhaustive_cap = std::uint64_t(1) << 22;
    std::uint32_t witness_support_max = 4;
    OutputFormat output = OutputFormat::Text;
    std::uint32_t threads = 1;
    ModulusOverrides field_modulus_overrides;

    DistanceConfig distance_config() const;
    /// Caps positive, overrides monic irreducible.
    void validate() const;
};

OutputFormat parse_output_format(const std::string& s);

std::string field_to_json(const Field& f);
std::string element_to_json(const Field& f, const FieldElement& a);

std::string report_to_json(const CodeReport& rep);
CodeReport report_from_json(const std::string& text);
std::string report_to_text(const CodeReport& rep);

inline const char* kCsvHeader = "label,n,q,k,d_lower,d_exact,lcd,reversible,verdict";
std::string report_to_csv_row(const std::string& label, const CodeReport& rep,
                              const std::string& verdict = "");

std::string partition_to_json(const CosetPartition& part);
std::string partition_to_text(const CosetPartition& part);
std::string audit_to_json(const AuditReport& rep);
std::string audit_to_text(const AuditReport& rep);

}  // namespace lcdc
