#pragma once

#include <cstdint>
#include <random>

#include "heis/group.hpp"

namespace heis {

// Deterministic uniform doubles on top of mt19937_64.  Distributions are
// hand-rolled so that streams are identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    GroupElement element(double bound) {
        return {uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound)};
    }

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace heis
