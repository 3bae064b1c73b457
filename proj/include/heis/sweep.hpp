#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "heis/analysis.hpp"

namespace heis {

// Cartesian sweep over the six derivation entries with a fixed homomorphism
// descriptor.  Each axis is a fixed value, an explicit list, or a linspace.
struct SweepSpec {
    std::array<std::vector<double>, 6> axes;  // a, b, c, d, e, f
    bool has_homomorphism = false;
    SubgroupId target;
    std::vector<double> coefficients;
    Options options;
    static constexpr std::size_t kMaxPoints = 1000000;

    std::size_t point_count() const;
};

SweepSpec sweep_spec_from_json(const nlohmann::json& j);

struct SweepRow {
    Derivation derivation;
    Status oracle_status = Status::Observable;
    CaseVerdict cases;
    int dim_unobservable = 0;
    int dim_fix_cap_kernel = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::map<std::string, std::size_t> verdict_counts;
    std::vector<DiscrepancyFinding> findings;
};

// Deterministic iteration order: a outermost, f innermost.  Throws
// std::invalid_argument when the grid exceeds kMaxPoints.
SweepResult run_sweep(const SweepSpec& spec);

// CSV with the fixed header
// a,b,c,d,e,f,target,verdict_oracle,verdict_paper,covered,dim_I,dim_fix_cap_K
void write_sweep_csv(std::ostream& os, const SweepSpec& spec, const SweepResult& result);

// Aggregate counts and the discrepancy list with full parameter echo.
void print_sweep_summary(std::ostream& os, const SweepResult& result);

}  // namespace heis
