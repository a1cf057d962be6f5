#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shadowlab/qseries.hpp"

namespace shadowlab {

/// One comparison between a closed-form expectation and a computed value.
/// `source` says where the expected value comes from: "closed-form" for a
/// formula evaluated independently of the object under test, "enumeration"
/// for a second brute-force computation, "table" for a tabulated constant.
struct CheckRecord {
    std::string name;
    std::string anchor;
    std::string expected;
    std::string source;
    std::string computed;
    bool pass = false;
    double runtime_ms = 0.0;
};

struct Report {
    std::string command;
    std::vector<CheckRecord> records;

    bool pass() const;
    /// Records sorted by name; keys sorted; runtime only when requested.
    std::string to_json(bool with_timing = false) const;
    std::string to_text(bool with_timing = false) const;
};

struct VerifyOptions {
    /// Series precision (quarter-exponent) for theta and shadow comparisons.
    /// Unset: 100, except Construction A theta identities, which use 40.
    std::optional<QSeries::Exponent> prec;
    /// Largest lattice norm enumerated for theta comparisons (default 4).
    std::optional<std::int64_t> max_norm;
};

/// "theorem1", "theorem1a", "construction-a", "congruence" or "all".
const std::vector<std::string>& suite_names();

/// Runs a verification suite. Throws std::invalid_argument for an unknown
/// suite name.
Report run_suite(std::string_view suite, const VerifyOptions& options = {});

}  // namespace shadowlab
