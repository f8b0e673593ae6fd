#pragma once

#include "skolab/superalgebra.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skolab {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class ReportFormat { json, csv, text };

struct RunConfig {
    std::uint32_t p = 5;
    std::uint32_t n = 3;
    std::vector<std::uint32_t> t{1, 1, 1};
    std::vector<std::uint32_t> lambdas{2};
    bool all_lambdas = false;
    std::uint64_t seed = 1;
    std::vector<std::string> suites;  // empty means all
    bool parallel = false;
    bool timings = false;
    // 0: exhaustive superderivation checks, else sampled pairs per map
    std::size_t derivation_samples = 0;
};

const std::vector<std::string>& suite_names();

// Parsers for the textual flags. All throw ConfigError.
std::vector<std::uint32_t> parse_t(const std::string& s);
// "all" or an integer in 0..p-1
std::vector<std::uint32_t> parse_lambda(const std::string& s, std::uint32_t p, bool* all = nullptr);
std::vector<std::string> parse_suites(const std::string& s);
ReportFormat parse_format(const std::string& s);

// Throws ConfigError with a usage message.
void validate(const RunConfig& cfg);

struct CheckRecord {
    std::string claim;
    std::string anchor;
    std::string expected;
    std::string computed;
    bool pass = false;
    double millis = 0;
};

struct SuiteResult {
    std::string name;
    std::optional<std::uint32_t> lambda;
    std::vector<CheckRecord> checks;

    bool pass() const;
};

struct Report {
    RunConfig config;
    std::vector<SuiteResult> suites;

    bool all_pass() const;
};

Report run_suites(const RunConfig& cfg);

std::string report_json(const Report& r, bool timings = false);
std::string report_csv(const Report& r, bool timings = false);
std::string report_text(const Report& r, bool timings = false);
std::string render_report(const Report& r, ReportFormat f, bool timings = false);

// S1..S5 and the unit with labels, as JSON.
std::string spanning_json(const AlgebraContext& ctx);

} // namespace skolab
