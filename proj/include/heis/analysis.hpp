#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "heis/derivation.hpp"
#include "heis/observability.hpp"
#include "heis/subgroups.hpp"

namespace heis {

struct Options {
    double tol = 1e-9;
    double t_max = 4.0;
    int samples = 64;
    int steps = 1000;
    std::uint64_t seed = 0;

    void validate() const;  // throws std::invalid_argument
};

// One analysis problem: a derivation, a homomorphism descriptor and numeric
// options.  The homomorphism is optional for trajectory-only commands.
struct ProblemSpec {
    Derivation derivation;
    bool has_homomorphism = false;
    SubgroupId target;
    std::vector<double> coefficients;
    Options options;

    Homomorphism build() const;  // throws if no homomorphism present
};

// A disagreement between the rank oracle and the case analysis on an input
// the case analysis claims to cover.
struct DiscrepancyFinding {
    Derivation derivation;
    std::string target;
    Status oracle_status = Status::Observable;
    Status case_status = Status::Observable;
    std::string rationale;
};

struct Report {
    ProblemSpec spec;
    FixedPointReport fixed;
    KernelReport kernel;
    Verdict oracle;
    CaseVerdict cases;
    // When a witness pair is attached: outputs stayed identical over
    // options.samples times in [0, options.t_max].
    bool witness_verified = false;
    std::vector<DiscrepancyFinding> findings;

    bool operator==(const Report& other) const;
};

// Runs the full pipeline: fixed points, kernel, unobservable subspace, both
// decision procedures, and the discrepancy comparison.
Report analyze(const ProblemSpec& spec);

// JSON wire formats.
ProblemSpec problem_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ProblemSpec& spec);
nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

// Human rendering, 6 significant digits.
void print_report(std::ostream& os, const Report& report);

}  // namespace heis
