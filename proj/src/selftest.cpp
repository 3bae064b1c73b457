#include "heis/selftest.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "heis/derivation.hpp"
#include "heis/flow.hpp"
#include "heis/observability.hpp"
#include "heis/random.hpp"
#include "heis/subgroups.hpp"

namespace heis {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

Derivation random_derivation(Rng& rng, double bound) {
    return {rng.uniform(-bound, bound), rng.uniform(-bound, bound), rng.uniform(-bound, bound),
            rng.uniform(-bound, bound), rng.uniform(-bound, bound), rng.uniform(-bound, bound)};
}

double rel_gap(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        worst = std::max(worst, std::abs(a(i) - b(i)) / std::max(1.0, std::abs(b(i))));
    }
    return worst;
}

std::optional<std::string> suite_group_axioms(Rng& rng, int trials, ProductFn prod) {
    for (int i = 0; i < trials; ++i) {
        const GroupElement g = rng.element(10.0);
        const GroupElement h = rng.element(10.0);
        const GroupElement k = rng.element(10.0);
        if ((prod(identity(), g).vec() - g.vec()).cwiseAbs().maxCoeff() > 1e-12)
            return "left identity violated";
        if (prod(g, inverse(g)).vec().cwiseAbs().maxCoeff() > 1e-12)
            return "right inverse violated";
        if (prod(inverse(g), g).vec().cwiseAbs().maxCoeff() > 1e-12)
            return "left inverse violated";
        const Eigen::Vector3d lhs = prod(prod(g, h), k).vec();
        const Eigen::Vector3d rhs = prod(g, prod(h, k)).vec();
        if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, lhs.cwiseAbs().maxCoeff()))
            return "associativity violated";
    }
    return std::nullopt;
}

std::optional<std::string> suite_bracket(Rng& rng, int trials) {
    for (int i = 0; i < trials; ++i) {
        const AlgebraElement u{rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)};
        const AlgebraElement v{rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)};
        const AlgebraElement w{rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)};
        if (bracket(u, u).vec().cwiseAbs().maxCoeff() != 0.0) return "bracket not alternating";
        if ((bracket(u, v).vec() + bracket(v, u).vec()).cwiseAbs().maxCoeff() > 1e-12)
            return "bracket not antisymmetric";
        const AlgebraElement center{0.0, 0.0, rng.uniform(-10, 10)};
        if (bracket(center, u).vec().cwiseAbs().maxCoeff() != 0.0)
            return "center direction does not bracket to zero";
        if (bracket(u, bracket(v, w)).vec().cwiseAbs().maxCoeff() != 0.0)
            return "double bracket does not vanish";
    }
    return std::nullopt;
}

std::optional<std::string> suite_flow_vs_rk4(Rng& rng, int trials) {
    for (int i = 0; i < trials; ++i) {
        const Derivation dv = random_derivation(rng, 2.0);
        const GroupElement g = rng.element(5.0);
        const double t = rng.uniform(-2.0, 2.0);
        const Eigen::Vector3d closed = flow(dv, t, g).vec();
        const Eigen::Vector3d stepped = rk4_flow(dv, t, g, 400).vec();
        const double gap = rel_gap(closed, stepped);
        if (gap > 1e-6)
            return "closed form vs integrator gap " + fmt(gap) + " at trial " + std::to_string(i);
    }
    return std::nullopt;
}

std::optional<std::string> suite_flow_one_parameter(Rng& rng, int trials) {
    for (int i = 0; i < trials; ++i) {
        const Derivation dv = random_derivation(rng, 2.0);
        const GroupElement g = rng.element(5.0);
        const double t = rng.uniform(-2.0, 2.0);
        const double s = rng.uniform(-2.0, 2.0);
        const Eigen::Vector3d once = flow(dv, t + s, g).vec();
        const Eigen::Vector3d twice = flow(dv, t, flow(dv, s, g)).vec();
        const double scale = std::max({1.0, once.cwiseAbs().maxCoeff(),
                                       twice.cwiseAbs().maxCoeff()});
        if ((once - twice).cwiseAbs().maxCoeff() > 1e-9 * scale)
            return "one-parameter property violated at trial " + std::to_string(i);
    }
    return std::nullopt;
}

std::optional<std::string> suite_z_derivative(Rng& rng, int trials) {
    const double h = 1e-5;
    for (int i = 0; i < trials; ++i) {
        const Derivation dv = random_derivation(rng, 2.0);
        const GroupElement g = rng.element(2.0);
        const double t = rng.uniform(-1.5, 1.5);
        const GroupElement at = flow(dv, t, g);
        const double zdot = (flow(dv, t + h, g).z - flow(dv, t - h, g).z) / (2.0 * h);
        const double expected = dv.e * at.x + dv.f * at.y + dv.trace_block() * at.z;
        if (std::abs(zdot - expected) > 1e-6 * std::max(1.0, std::abs(expected)))
            return "z-equation derivative identity violated at trial " + std::to_string(i);
    }
    return std::nullopt;
}

std::optional<std::string> suite_homomorphisms(Rng& rng, int trials, ProductFn prod) {
    for (int i = 0; i < trials / 8 + 1; ++i) {
        for (SubgroupTag tag : {SubgroupTag::H1, SubgroupTag::H2, SubgroupTag::H3,
                                SubgroupTag::H4, SubgroupTag::H5, SubgroupTag::H6,
                                SubgroupTag::H7, SubgroupTag::H8, SubgroupTag::H9}) {
            SubgroupId id;
            std::vector<double> coeffs;
            if (tag == SubgroupTag::H8 || tag == SubgroupTag::H9) {
                id = SubgroupId::line(tag, rng.uniform(0.2, 2.0), rng.uniform(0.2, 2.0));
                coeffs = {rng.uniform(-2, 2), rng.uniform(-2, 2)};
            } else {
                id = SubgroupId::plain(tag);
                const std::size_t want =
                    (tag == SubgroupTag::H1 || tag == SubgroupTag::H2) ? 4 : 2;
                for (std::size_t k = 0; k < want; ++k) coeffs.push_back(rng.uniform(-2, 2));
            }
            const Homomorphism hom = build_homomorphism(id, coeffs);
            for (int n = 0; n < 8; ++n) {
                const GroupElement g = rng.element(2.0);
                const GroupElement k = rng.element(2.0);
                const Eigen::Vector3d lhs = hom.apply(prod(g, k)).vec();
                const Eigen::Vector3d rhs = prod(hom.apply(g), hom.apply(k)).vec();
                if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-12)
                    return "homomorphism law violated for " + to_string(tag);
                const GroupElement img = hom.apply(g);
                if (!subgroup_contains(id, img, 1e-9))
                    return "image leaves target " + to_string(tag);
            }
            // Kernel membership matches h(g) = identity.
            const KernelReport ker = kernel(hom);
            for (int n = 0; n < 8; ++n) {
                const GroupElement g = rng.element(2.0);
                const bool in_kernel = ker.subspace.contains(g.vec(), 1e-9);
                const bool maps_to_identity =
                    hom.apply(g).vec().cwiseAbs().maxCoeff() <=
                    1e-9 * std::max(1.0, g.vec().norm());
                if (in_kernel != maps_to_identity)
                    return "kernel membership mismatch for " + to_string(tag);
            }
            if (!ker.subspace.contains(Eigen::Vector3d::UnitX(), 1e-12))
                return "kernel misses the x-axis for " + to_string(tag);
        }
    }
    return std::nullopt;
}

std::optional<std::string> suite_fixed_points(Rng& rng, int trials) {
    for (int i = 0; i < trials; ++i) {
        const Derivation dv = random_derivation(rng, 2.0);
        const FixedPointReport rep = fixed_points(dv);
        const Eigen::Matrix3d d = dv.matrix();
        const double scale = std::max(1.0, d.norm());
        for (Eigen::Index j = 0; j < rep.subspace.basis().cols(); ++j) {
            if ((d * rep.subspace.basis().col(j)).norm() > 1e-9 * scale)
                return "fixed-point basis vector not annihilated";
        }
    }
    return std::nullopt;
}

std::optional<std::string> suite_oracle(Rng& rng, int trials) {
    const SubgroupId h1 = SubgroupId::plain(SubgroupTag::H1);
    const SubgroupId h4 = SubgroupId::plain(SubgroupTag::H4);
    for (int i = 0; i < trials / 4 + 1; ++i) {
        const Derivation dv = random_derivation(rng, 1.5);
        for (const Homomorphism& hom :
             {build_homomorphism(h1, {1.0, 0.0, 0.0, 1.0}),
              build_homomorphism(h4, {rng.uniform(-2, 2), rng.uniform(-2, 2)})}) {
            const Verdict v = decide_oracle(dv, hom);
            if ((v.unobservable.dim() == 0 && v.fix_cap_kernel.dim() == 0) !=
                (v.status == Status::Observable))
                return "oracle status inconsistent with subspace dimensions";
            if (!v.unobservable.contains(v.fix_cap_kernel, 1e-9))
                return "fixed points within the kernel escape the unobservable set";
            if (v.status == Status::NotLocallyObservable) {
                if (!v.witness.has_value()) return "missing witness";
                if (distinguish(dv, hom, v.witness->p, v.witness->q, 4.0, 64).has_value())
                    return "witness pair distinguished";
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> suite_kalman(Rng&, int) {
    Eigen::MatrixXd a(2, 2);
    a << 0, 1, 0, 0;
    Eigen::MatrixXd c_pos(1, 2), c_vel(1, 2), c_zero(1, 2);
    c_pos << 1, 0;
    c_vel << 0, 1;
    c_zero << 0, 0;
    if (kalman_rank(a, c_pos) != 2) return "position output should give full rank";
    if (kalman_rank(a, c_vel) != 1) return "velocity output should give rank 1";
    if (kalman_rank(a, c_zero) != 0) return "zero output should give rank 0";
    return std::nullopt;
}

}  // namespace

SelftestResult run_selftest(const SelftestOptions& opts) {
    const ProductFn prod = opts.product ? opts.product
                                        : +[](const GroupElement& g, const GroupElement& h) {
                                              return mul(g, h);
                                          };
    SelftestResult result;
    Rng rng(opts.seed);

    using Suite = std::function<std::optional<std::string>(Rng&)>;
    const std::pair<const char*, Suite> suites[] = {
        {"group axioms", [&](Rng& r) { return suite_group_axioms(r, opts.trials, prod); }},
        {"algebra bracket", [&](Rng& r) { return suite_bracket(r, opts.trials); }},
        {"flow vs integrator", [&](Rng& r) { return suite_flow_vs_rk4(r, opts.trials / 4 + 1); }},
        {"flow one-parameter property",
         [&](Rng& r) { return suite_flow_one_parameter(r, opts.trials); }},
        {"z-equation derivative identity",
         [&](Rng& r) { return suite_z_derivative(r, opts.trials / 4 + 1); }},
        {"homomorphism families", [&](Rng& r) { return suite_homomorphisms(r, opts.trials, prod); }},
        {"fixed points", [&](Rng& r) { return suite_fixed_points(r, opts.trials); }},
        {"oracle verdicts", [&](Rng& r) { return suite_oracle(r, opts.trials / 8 + 1); }},
        {"rank criterion baseline", [&](Rng& r) { return suite_kalman(r, opts.trials); }},
    };

    for (const auto& [name, suite] : suites) {
        std::optional<std::string> failure;
        try {
            failure = suite(rng);
        } catch (const std::exception& ex) {
            failure = std::string("exception: ") + ex.what();
        }
        if (failure.has_value()) {
            ++result.suites_failed;
            result.lines.push_back(std::string("[FAIL] ") + name + ": " + *failure);
        } else {
            ++result.suites_passed;
            result.lines.push_back(std::string("[PASS] ") + name);
        }
    }
    return result;
}

}  // namespace heis
