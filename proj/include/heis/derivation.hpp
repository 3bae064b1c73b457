#pragma once

#include <Eigen/Core>
#include <cmath>

namespace heis {

// The six real parameters of a derivation of the Heisenberg algebra in the
// basis (X, Y, Z).  Its matrix acts on (x, y, z) with rows
// (a, b, 0), (c, d, 0), (e, f, a+d); the upper-left 2x2 block is A.
struct Derivation {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double e = 0.0;
    double f = 0.0;

    Eigen::Matrix3d matrix() const {
        Eigen::Matrix3d m;
        m << a, b, 0.0,
             c, d, 0.0,
             e, f, a + d;
        return m;
    }

    Eigen::Matrix2d block() const {
        Eigen::Matrix2d m;
        m << a, b,
             c, d;
        return m;
    }

    // The (e, f) pair driving the z-equation.
    Eigen::Vector2d shear() const { return {e, f}; }

    double trace_block() const { return a + d; }

    bool is_finite() const {
        return std::isfinite(a) && std::isfinite(b) && std::isfinite(c) &&
               std::isfinite(d) && std::isfinite(e) && std::isfinite(f);
    }
};

}  // namespace heis
