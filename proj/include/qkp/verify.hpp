#pragma once

#include "qkp/json_io.hpp"
#include "qkp/qcalc.hpp"
#include "qkp/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qkp {

enum class OutputMode { text, json };

/// Shared configuration for the verification suites and the CLI. Everything
/// is parsed exactly; identical config + seed reproduces identical output.
struct RunConfig {
    QValue q{Rational(3, 2)};
    Rational kappa{Rational(1, 2)};
    int depth = 6;
    int lambda_order = 8;
    std::uint64_t seed = 1;
    OutputMode output = OutputMode::text;

    void validate() const {
        if (depth < 1 || depth > 10) throw std::invalid_argument("config: depth must be in [1,10]");
        if (lambda_order < 2 || lambda_order > 12 || lambda_order % 2 != 0)
            throw std::invalid_argument("config: lambda order must be even and in [2,12]");
        if (kappa.is_zero()) throw std::invalid_argument("config: kappa must be nonzero");
    }
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass;
    std::string detail;  // empty when passing, diagnostic otherwise
};

/// Names accepted by run_suite, excluding "all".
const std::vector<std::string>& suite_names();

/// Runs one named suite ("all" runs every suite). Throws
/// std::invalid_argument for unknown names.
std::vector<CheckResult> run_suite(const std::string& name, const RunConfig& cfg);

std::string render_text(const std::vector<CheckResult>& results);
Json render_json(const std::vector<CheckResult>& results);

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace qkp
