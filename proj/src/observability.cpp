#include "heis/observability.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace heis {

std::string to_string(FixCase c) {
    switch (c) {
        case FixCase::InvertibleTraceNonzero: return "A invertible, a+d != 0";
        case FixCase::InvertibleTraceZero: return "A invertible, a+d = 0";
        case FixCase::SingularTraceNonzero: return "A singular, a+d != 0";
        case FixCase::SingularTraceZero: return "A singular, a+d = 0";
        case FixCase::SingularTraceNonzeroAligned: return "A singular, a+d != 0, aligned shear";
        case FixCase::SingularTraceZeroAligned: return "A singular, a+d = 0, aligned shear";
        case FixCase::SingularDegenerate: return "A singular, a = d = 0";
    }
    return "?";
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Observable: return "Observable";
        case Status::NotLocallyObservable: return "NotLocallyObservable";
        case Status::LocallyObservableOnly: return "LocallyObservableOnly";
    }
    return "?";
}

FixedPointReport fixed_points(const Derivation& deriv, double tol) {
    FixedPointReport rep;
    rep.subspace = Subspace::kernel_of(deriv.matrix(), tol);

    // Branch predicates at 1e-12, relative to the entry scale.
    const double eps = 1e-12;
    const double mag = std::max({1.0, std::abs(deriv.a), std::abs(deriv.b),
                                 std::abs(deriv.c), std::abs(deriv.d)});
    const double det = deriv.a * deriv.d - deriv.b * deriv.c;
    const bool invertible = std::abs(det) > eps * mag * mag;
    const bool trace_zero = std::abs(deriv.a + deriv.d) <= eps * mag;

    if (invertible) {
        rep.case_label =
            trace_zero ? FixCase::InvertibleTraceZero : FixCase::InvertibleTraceNonzero;
        return rep;
    }

    bool aligned;
    if (std::abs(deriv.a) > eps * mag) {
        aligned = std::abs(deriv.f * deriv.a - deriv.b * deriv.e) <= eps * mag * mag;
    } else if (std::abs(deriv.d) > eps * mag) {
        aligned = std::abs(deriv.e * deriv.d - deriv.c * deriv.f) <= eps * mag * mag;
    } else {
        rep.case_label = FixCase::SingularDegenerate;
        return rep;
    }
    if (aligned) {
        rep.case_label = trace_zero ? FixCase::SingularTraceZeroAligned
                                    : FixCase::SingularTraceNonzeroAligned;
    } else {
        rep.case_label =
            trace_zero ? FixCase::SingularTraceZero : FixCase::SingularTraceNonzero;
    }
    return rep;
}

Subspace unobservable_subspace(const Derivation& deriv, const Homomorphism& h, double tol) {
    const Eigen::Matrix3d c = h.output_map();
    const Eigen::Matrix3d d = deriv.matrix();
    Eigen::Matrix<double, 9, 3> stacked;
    stacked.block<3, 3>(0, 0) = c;
    stacked.block<3, 3>(3, 0) = c * d;
    stacked.block<3, 3>(6, 0) = c * d * d;

    // Tolerance relative to the largest row norm.
    const double row_scale = stacked.rowwise().norm().maxCoeff();
    Subspace ker = row_scale == 0.0 ? Subspace::full()
                                    : Subspace::kernel_of(stacked, tol);

    // Cross-check: basis vectors must stay in ker(h) under the flow.
    for (double t : {0.5, -0.5, 1.0, -1.0, 2.0, -2.0}) {
        const Eigen::Matrix3d ct = c * flow_matrix(deriv, t);
        const double sc = std::max(1.0, ct.cwiseAbs().maxCoeff());
        for (Eigen::Index j = 0; j < ker.basis().cols(); ++j) {
            if ((ct * ker.basis().col(j)).cwiseAbs().maxCoeff() > 1e-8 * sc)
                throw std::logic_error(
                    "unobservable_subspace: computed kernel is not flow-invariant");
        }
    }
    return ker;
}

Verdict decide_oracle(const Derivation& deriv, const Homomorphism& h, double tol) {
    Verdict v;
    v.unobservable = unobservable_subspace(deriv, h, tol);
    const FixedPointReport fix = fixed_points(deriv, tol);
    const KernelReport ker = kernel(h);
    v.fix_cap_kernel = fix.subspace.intersect(ker.subspace, tol);
    v.fragile = v.unobservable.fragile() || fix.subspace.fragile();

    if (v.unobservable.dim() >= 1) {
        v.status = Status::NotLocallyObservable;
        // Base point with zero y-coordinate, so q = p * k equals p + k and
        // the outputs of p and q coincide for every t by linearity of the
        // flow and invariance of k's direction.
        const GroupElement p{1.0, 0.0, 1.0};
        const GroupElement k = GroupElement::from_vec(v.unobservable.basis().col(0));
        v.witness = WitnessPair{p, mul(p, k)};
    } else if (v.fix_cap_kernel.dim() == 0) {
        v.status = Status::Observable;
    } else {
        v.status = Status::LocallyObservableOnly;
    }
    return v;
}

IntegralOverlapReport integral_overlap_report(const Derivation& deriv, const TimeGrid& grid) {
    if (!(grid.t_max > 0.0) || grid.half_count < 1)
        throw std::invalid_argument("integral_overlap_report: grid must be nonempty and symmetric");

    IntegralOverlapReport rep;
    const int n = 2 * grid.half_count + 1;
    rep.times.reserve(n);
    rep.f1.reserve(n);
    rep.f2.reserve(n);
    for (int i = -grid.half_count; i <= grid.half_count; ++i) {
        const double t = grid.t_max * static_cast<double>(i) / grid.half_count;
        const Eigen::Vector2d w = integral_term(deriv, t);
        rep.times.push_back(t);
        rep.f1.push_back(w.x());
        rep.f2.push_back(w.y());
    }

    double max1 = 0.0, max2 = 0.0;
    for (int i = 0; i < n; ++i) {
        max1 = std::max(max1, std::abs(rep.f1[i]));
        max2 = std::max(max2, std::abs(rep.f2[i]));
    }
    const double cut = 1e-10 * std::max({1.0, max1, max2});
    rep.f1_identically_zero = max1 <= cut;
    rep.f2_identically_zero = max2 <= cut;
    rep.overlap_nonempty = false;
    for (int i = 0; i < n; ++i) {
        if (std::abs(rep.f1[i]) > cut && std::abs(rep.f2[i]) > cut) {
            rep.overlap_nonempty = true;
            break;
        }
    }
    rep.claim = (!rep.f1_identically_zero && !rep.f2_identically_zero && !rep.overlap_nonempty)
                    ? UnobservableClaim::Discrete
                    : UnobservableClaim::ContainsLine;
    return rep;
}

CaseVerdict decide_cases(const Derivation& deriv, const Homomorphism& h, double tol,
                         const TimeGrid& grid) {
    CaseVerdict cv;
    if (h.is_trivial()) {
        cv.status = Status::NotLocallyObservable;
        cv.covered = true;
        cv.rationale = "trivial output map: every trajectory stays in the kernel";
        return cv;
    }
    const KernelReport ker = kernel(h);
    switch (ker.label) {
        case KernelCase::FullGroup:
            cv.status = Status::NotLocallyObservable;
            cv.covered = true;
            cv.rationale = "kernel is the whole group";
            return cv;
        case KernelCase::PlaneYZero:
            cv.status = Status::NotLocallyObservable;
            cv.covered = true;
            cv.rationale = "kernel is the plane y = 0; the unobservable set is not discrete";
            return cv;
        case KernelCase::PlaneZZero: {
            const IntegralOverlapReport rep = integral_overlap_report(deriv, grid);
            if (rep.claim == UnobservableClaim::ContainsLine) {
                cv.status = Status::NotLocallyObservable;
                cv.covered = true;
                cv.rationale =
                    "kernel is the plane z = 0; the integral pair (f1, f2) forces a "
                    "non-discrete unobservable set";
                return cv;
            }
            const Subspace cap =
                fixed_points(deriv, tol).subspace.intersect(ker.subspace, tol);
            cv.covered = true;
            if (cap.dim() == 0) {
                cv.status = Status::Observable;
                cv.rationale =
                    "kernel is the plane z = 0; f1 and f2 never vanish together and the "
                    "fixed points meet the kernel trivially";
            } else {
                cv.status = Status::LocallyObservableOnly;
                cv.rationale =
                    "kernel is the plane z = 0; the unobservable set is discrete but fixed "
                    "points meet the kernel";
            }
            return cv;
        }
        case KernelCase::XAxis:
            if (deriv.a + deriv.d != 0.0 && deriv.e != 0.0) {
                cv.status = Status::Observable;
                cv.covered = true;
                cv.rationale = "kernel is the x-axis with a+d != 0 and e != 0";
            } else {
                cv.covered = false;
                cv.rationale =
                    "kernel is the x-axis but the sufficient condition (a+d != 0 and "
                    "e != 0) fails; rank oracle decides";
            }
            return cv;
        case KernelCase::TiltedPlane:
            cv.covered = false;
            cv.rationale = "kernel is a tilted plane; no published condition applies";
            return cv;
    }
    return cv;
}

std::optional<double> distinguish(const Derivation& deriv, const Homomorphism& h,
                                  const GroupElement& p, const GroupElement& q,
                                  double t_max, int samples, double tol) {
    if (samples < 2) throw std::invalid_argument("distinguish: samples must be >= 2");
    if (!(t_max > 0.0)) throw std::invalid_argument("distinguish: t_max must be > 0");
    for (int i = 0; i < samples; ++i) {
        const double t = t_max * static_cast<double>(i) / (samples - 1);
        const GroupElement op = h.apply(flow(deriv, t, p));
        const GroupElement oq = h.apply(flow(deriv, t, q));
        if ((op.vec() - oq.vec()).cwiseAbs().maxCoeff() > tol) return t;
    }
    return std::nullopt;
}

int kalman_rank(const Eigen::MatrixXd& a, const Eigen::MatrixXd& c, double tol) {
    const Eigen::Index n = a.rows();
    if (n < 1 || a.cols() != n) throw std::invalid_argument("kalman_rank: A must be square");
    if (c.rows() < 1 || c.cols() != n)
        throw std::invalid_argument("kalman_rank: C must have as many columns as A");

    Eigen::MatrixXd obs(c.rows() * n, n);
    Eigen::MatrixXd block = c;
    for (Eigen::Index k = 0; k < n; ++k) {
        obs.middleRows(k * c.rows(), c.rows()) = block;
        block = block * a;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(obs);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > tol * smax) ++rank;
    }
    return rank;
}

}  // namespace heis
