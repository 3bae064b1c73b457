#pragma once

#include <Eigen/Core>
#include <cmath>

namespace heis {

// A point of the 3-dimensional Heisenberg group in the global chart.
// The product carries the twist in the first coordinate:
//   (x,y,z) * (w,s,t) = (x + w + y*t, y + s, z + t).
struct GroupElement {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Eigen::Vector3d vec() const { return {x, y, z}; }
    static GroupElement from_vec(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

    bool is_finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline GroupElement identity() { return {0.0, 0.0, 0.0}; }

inline GroupElement mul(const GroupElement& g, const GroupElement& h) {
    return {g.x + h.x + g.y * h.z, g.y + h.y, g.z + h.z};
}

inline GroupElement inverse(const GroupElement& g) {
    return {g.y * g.z - g.x, -g.y, -g.z};
}

// Unipotent matrix embedding consistent with the product above; debug helper
// only, not a core representation.
inline Eigen::Matrix3d to_matrix(const GroupElement& g) {
    Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
    m(0, 1) = g.y;
    m(0, 2) = g.x;
    m(1, 2) = g.z;
    return m;
}

// An element of the Lie algebra in the basis (X, Y, Z).
struct AlgebraElement {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Eigen::Vector3d vec() const { return {x, y, z}; }
};

// [(x,y,z),(a,b,c)] = (0, 0, ya - bx): the bracket lands in the center
// direction Z.
inline AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v) {
    return {0.0, 0.0, u.y * v.x - v.y * u.x};
}

}  // namespace heis
