#pragma once

#include <Eigen/Core>
#include <complex>

#include "heis/derivation.hpp"
#include "heis/group.hpp"

namespace heis {

// Coefficients of the 2x2 exponential written as exp(tA) = s0 * I + s1 * A,
// together with the eigenvalues of A that determined them.  s0 and s1 are
// real even for a complex-conjugate spectrum.
struct SylvesterCoeffs {
    double s0 = 1.0;
    double s1 = 0.0;
    double t = 0.0;
    std::complex<double> alpha;
    std::complex<double> beta;
};

// Evaluates s0(t), s1(t) from the eigenvalues of the block A.  Distinct real
// pairs use hyperbolic form, conjugate pairs trigonometric form; pairs with
// |alpha - beta| < 1e-8 * max(1, |alpha|, |beta|) take the confluent branch
// s0 = (1 - alpha t) e^{t alpha}, s1 = t e^{t alpha}.
SylvesterCoeffs sylvester_coeffs(const Derivation& deriv, double t);

// exp(t A) for the 2x2 block, assembled as s0 * I + s1 * A.
Eigen::Matrix2d exp2(const Derivation& deriv, double t);

// The pair (f1(t), f2(t)) = integral over [0, t] of e^{s M} (e, f) ds with
// M = (A - (a+d) I)^T, evaluated in closed form through the exponential of
// the augmented block [[M, (e,f)], [0, 0]].  Uniformly valid when M is
// singular.
Eigen::Vector2d integral_term(const Derivation& deriv, double t);

// Closed-form flow of the linear vector field:
//   ( exp(tA)(x,y),  e^{t(a+d)} (f1(t) x + f2(t) y) + e^{t(a+d)} z ).
GroupElement flow(const Derivation& deriv, double t, const GroupElement& g);

// The 3x3 matrix L(t) with flow(t, g) = L(t) (x, y, z); equals exp(t D).
Eigen::Matrix3d flow_matrix(const Derivation& deriv, double t);

// Classical fixed-step Runge-Kutta integration of the system
//   x' = ax + by, y' = cx + dy, z' = ex + fy + (a+d) z
// from 0 to t.  Independent oracle for flow().  Throws std::invalid_argument
// if steps < 1.
GroupElement rk4_flow(const Derivation& deriv, double t, const GroupElement& g, int steps);

struct FlowSample {
    double t = 0.0;
    GroupElement point;
};

}  // namespace heis
