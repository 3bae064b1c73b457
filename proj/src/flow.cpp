#include "heis/flow.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace heis {

SylvesterCoeffs sylvester_coeffs(const Derivation& deriv, double t) {
    const double tr = deriv.a + deriv.d;
    const double det = deriv.a * deriv.d - deriv.b * deriv.c;
    const double mean = 0.5 * tr;
    const double disc = tr * tr - 4.0 * det;  // (alpha - beta)^2
    const double gap = std::sqrt(std::abs(disc));

    SylvesterCoeffs sc;
    sc.t = t;

    double scale = 1.0;
    if (disc >= 0.0) {
        sc.alpha = mean + 0.5 * gap;
        sc.beta = mean - 0.5 * gap;
        scale = std::max({1.0, std::abs(sc.alpha.real()), std::abs(sc.beta.real())});
    } else {
        sc.alpha = {mean, 0.5 * gap};
        sc.beta = {mean, -0.5 * gap};
        scale = std::max(1.0, std::hypot(mean, 0.5 * gap));
    }

    const double growth = std::exp(mean * t);
    if (gap < 1e-8 * scale) {
        // Near-confluent: the divided differences below would cancel.
        sc.alpha = sc.beta = mean;
        sc.s1 = t * growth;
        sc.s0 = (1.0 - mean * t) * growth;
    } else if (disc > 0.0) {
        const double half = 0.5 * gap;
        const double ratio = std::sinh(half * t) / half;
        sc.s1 = growth * ratio;
        sc.s0 = growth * std::cosh(half * t) - mean * sc.s1;
    } else {
        const double freq = 0.5 * gap;
        sc.s1 = growth * std::sin(freq * t) / freq;
        sc.s0 = growth * std::cos(freq * t) - mean * sc.s1;
    }
    return sc;
}

Eigen::Matrix2d exp2(const Derivation& deriv, double t) {
    const SylvesterCoeffs sc = sylvester_coeffs(deriv, t);
    return sc.s0 * Eigen::Matrix2d::Identity() + sc.s1 * deriv.block();
}

Eigen::Vector2d integral_term(const Derivation& deriv, double t) {
    // M = (A - (a+d) I)^T = [[-d, c], [b, -a]].
    Eigen::Matrix3d blk = Eigen::Matrix3d::Zero();
    blk(0, 0) = -deriv.d;
    blk(0, 1) = deriv.c;
    blk(1, 0) = deriv.b;
    blk(1, 1) = -deriv.a;
    blk(0, 2) = deriv.e;
    blk(1, 2) = deriv.f;
    if (t == 0.0) return Eigen::Vector2d::Zero();
    const Eigen::Matrix3d e = (t * blk).exp();
    return e.block<2, 1>(0, 2);
}

GroupElement flow(const Derivation& deriv, double t, const GroupElement& g) {
    const Eigen::Vector2d xy = exp2(deriv, t) * Eigen::Vector2d(g.x, g.y);
    const Eigen::Vector2d w = integral_term(deriv, t);
    const double growth = std::exp(deriv.trace_block() * t);
    const double z = growth * (w.x() * g.x + w.y() * g.y) + growth * g.z;
    return {xy.x(), xy.y(), z};
}

Eigen::Matrix3d flow_matrix(const Derivation& deriv, double t) {
    const Eigen::Matrix2d e = exp2(deriv, t);
    const Eigen::Vector2d w = integral_term(deriv, t);
    const double growth = std::exp(deriv.trace_block() * t);
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    m.block<2, 2>(0, 0) = e;
    m(2, 0) = growth * w.x();
    m(2, 1) = growth * w.y();
    m(2, 2) = growth;
    return m;
}

GroupElement rk4_flow(const Derivation& deriv, double t, const GroupElement& g, int steps) {
    if (steps < 1) throw std::invalid_argument("rk4_flow: steps must be >= 1");
    const Eigen::Matrix3d d = deriv.matrix();
    Eigen::Vector3d s = g.vec();
    const double h = t / steps;
    for (int i = 0; i < steps; ++i) {
        const Eigen::Vector3d k1 = d * s;
        const Eigen::Vector3d k2 = d * (s + 0.5 * h * k1);
        const Eigen::Vector3d k3 = d * (s + 0.5 * h * k2);
        const Eigen::Vector3d k4 = d * (s + h * k3);
        s += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return GroupElement::from_vec(s);
}

}  // namespace heis
