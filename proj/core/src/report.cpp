#include "lcdc/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "lcdc/poly.hpp"

namespace lcdc {

using nlohmann::json;

DistanceConfig RunConfig::distance_config() const {
    DistanceConfig d;
    d.exhaustive_cap = exhaustive_cap;
    d.witness_support_max = witness_support_max;
    d.threads = threads;
    return d;
}

void RunConfig::validate() const {
    if (exhaustive_cap == 0) throw std::invalid_argument("exhaustive cap must be positive");
    if (witness_support_max == 0) throw std::invalid_argument("witness support must be positive");
    if (threads == 0) throw std::invalid_argument("thread count must be positive");
    for (const auto& [key, coeffs] : field_modulus_overrides) {
        auto [p, e] = key;
        FieldPtr gfp = make_field(p, 1);
        std::vector<std::uint32_t> c(coeffs.begin(), coeffs.end());
        Poly f = Poly::from_coeffs(gfp, c);
        if (f.degree() != static_cast<std::int64_t>(e) || !f.is_monic())
            throw std::invalid_argument("modulus override must be monic of degree e");
        if (!is_irreducible(f))
            throw std::invalid_argument("modulus override is reducible: " + to_human(f));
    }
}

OutputFormat parse_output_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "text") return OutputFormat::Text;
    throw std::invalid_argument("unknown output format: " + s);
}

std::string field_to_json(const Field& f) {
    json j;
    j["p"] = f.p();
    j["e"] = f.e();
    if (!f.prime_field()) j["modulus"] = f.modulus();
    return j.dump();
}

std::string element_to_json(const Field& f, const FieldElement& a) {
    (void)f;
    return json(a.digits).dump();
}

std::string report_to_json(const CodeReport& rep) {
    json j;
    j["n"] = rep.n;
    j["q"] = rep.q;
    j["k"] = rep.k;
    j["d_lower"] = rep.d_lower;
    j["d_lower_provenance"] = rep.d_lower_provenance;
    if (rep.d_exact) j["d_exact"] = *rep.d_exact;
    if (rep.witness) {
        j["witness"] =
            json{{"weight", rep.witness->weight}, {"codeword", rep.witness->codeword}};
    }
    j["lcd"] = rep.lcd;
    j["reversible"] = rep.reversible;
    j["bose"] = rep.bose;
    j["generator"] = rep.generator;
    return j.dump();
}

CodeReport report_from_json(const std::string& text) {
    json j = json::parse(text);
    CodeReport rep;
    rep.n = j.at("n").get<std::uint64_t>();
    rep.q = j.at("q").get<std::uint64_t>();
    rep.k = j.at("k").get<std::uint64_t>();
    rep.d_lower = j.at("d_lower").get<std::uint64_t>();
    rep.d_lower_provenance = j.at("d_lower_provenance").get<std::string>();
    if (j.contains("d_exact")) rep.d_exact = j["d_exact"].get<std::uint64_t>();
    if (j.contains("witness")) {
        Witness w;
        w.weight = j["witness"].at("weight").get<std::uint64_t>();
        w.codeword = j["witness"].at("codeword").get<std::vector<std::uint32_t>>();
        rep.witness = std::move(w);
    }
    rep.lcd = j.at("lcd").get<bool>();
    rep.reversible = j.at("reversible").get<bool>();
    rep.bose = j.at("bose").get<std::uint64_t>();
    rep.generator = j.at("generator").get<std::vector<std::uint32_t>>();
    return rep;
}

std::string report_to_text(const CodeReport& rep) {
    std::ostringstream os;
    os << "[" << rep.n << "," << rep.k;
    if (rep.d_exact)
        os << "," << *rep.d_exact;
    else
        os << ",d>=" << rep.d_lower;
    os << "] over GF(" << rep.q << ")\n";
    os << "  generator: ";
    for (std::size_t i = 0; i < rep.generator.size(); ++i)
        os << (i ? "," : "") << rep.generator[i];
    os << "\n  d_lower " << rep.d_lower << " (" << rep.d_lower_provenance << ")";
    if (rep.witness) os << ", witness weight " << rep.witness->weight;
    os << "\n  bose " << rep.bose << ", lcd " << (rep.lcd ? "yes" : "no") << ", reversible "
       << (rep.reversible ? "yes" : "no") << "\n";
    return os.str();
}

std::string report_to_csv_row(const std::string& label, const CodeReport& rep,
                              const std::string& verdict) {
    std::ostringstream os;
    os << label << "," << rep.n << "," << rep.q << "," << rep.k << "," << rep.d_lower << ",";
    if (rep.d_exact) os << *rep.d_exact;
    os << "," << (rep.lcd ? "true" : "false") << "," << (rep.reversible ? "true" : "false") << ","
       << verdict;
    return os.str();
}

std::string partition_to_json(const CosetPartition& part) {
    json j;
    j["n"] = part.n;
    j["q"] = part.q;
    j["m"] = part.m;
    json cosets = json::object();
    for (const auto& c : part.cosets) cosets[std::to_string(c.front())] = c;
    j["cosets"] = std::move(cosets);
    j["gamma"] = part.gamma;
    j["pi"] = part.pi;
    return j.dump();
}

std::string partition_to_text(const CosetPartition& part) {
    std::ostringstream os;
    os << "n=" << part.n << " q=" << part.q << " ord=" << part.m << "\n";
    for (const auto& c : part.cosets) {
        os << "C_" << c.front() << " = {";
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
        os << "}\n";
    }
    auto print_set = [&](const char* name, const std::vector<std::uint64_t>& v) {
        os << name << " = {";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << "}\n";
    };
    print_set("Gamma", part.gamma);
    print_set("Pi", part.pi);
    return os.str();
}

namespace {
const char* audit_name(LeaderAudit a) {
    switch (a) {
        case LeaderAudit::SmallRange: return "small-range";
        case LeaderAudit::AntiPrimitive: return "anti-primitive";
        case LeaderAudit::ProjectiveEven: return "projective-even";
    }
    return "?";
}
}  // namespace

std::string audit_to_json(const AuditReport& rep) {
    json j;
    j["audit"] = audit_name(rep.which);
    j["q"] = rep.q;
    j["param"] = rep.param;
    j["n"] = rep.n;
    j["pass"] = rep.pass;
    j["checked"] = rep.checked;
    json ces = json::array();
    for (const auto& ce : rep.counterexamples) ces.push_back({{"value", ce.value}, {"detail", ce.detail}});
    j["counterexamples"] = std::move(ces);
    return j.dump();
}

std::string audit_to_text(const AuditReport& rep) {
    std::ostringstream os;
    os << audit_name(rep.which) << " q=" << rep.q << " param=" << rep.param << " n=" << rep.n << ": "
       << (rep.pass ? "pass" : "FAIL") << " (" << rep.checked << " values checked)\n";
    for (const auto& ce : rep.counterexamples)
        os << "  counterexample " << ce.value << ": " << ce.detail << "\n";
    return os.str();
}

}  // namespace lcdc
