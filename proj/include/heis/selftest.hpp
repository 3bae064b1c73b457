#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heis/group.hpp"

namespace heis {

using ProductFn = GroupElement (*)(const GroupElement&, const GroupElement&);

struct SelftestOptions {
    std::uint64_t seed = 0;
    int trials = 200;
    // Test hook: replaces the group product inside the product-law suites so
    // a deliberately broken product is caught.  Null means mul().
    ProductFn product = nullptr;
};

struct SelftestResult {
    int suites_passed = 0;
    int suites_failed = 0;
    std::vector<std::string> lines;

    bool ok() const { return suites_failed == 0; }
};

// Runs the built-in invariant suites at reduced trial counts.  Deterministic
// for a fixed seed.
SelftestResult run_selftest(const SelftestOptions& opts = {});

}  // namespace heis
