#include "heis/subgroups.hpp"

#include <cmath>
#include <stdexcept>

#include "heis/random.hpp"

namespace heis {

std::string to_string(SubgroupTag tag) {
    switch (tag) {
        case SubgroupTag::H1: return "H1";
        case SubgroupTag::H2: return "H2";
        case SubgroupTag::H3: return "H3";
        case SubgroupTag::H4: return "H4";
        case SubgroupTag::H5: return "H5";
        case SubgroupTag::H6: return "H6";
        case SubgroupTag::H7: return "H7";
        case SubgroupTag::H8: return "H8";
        case SubgroupTag::H9: return "H9";
    }
    return "?";
}

bool subgroup_tag_from_string(const std::string& s, SubgroupTag* out) {
    static constexpr SubgroupTag kTags[] = {
        SubgroupTag::H1, SubgroupTag::H2, SubgroupTag::H3, SubgroupTag::H4, SubgroupTag::H5,
        SubgroupTag::H6, SubgroupTag::H7, SubgroupTag::H8, SubgroupTag::H9};
    for (SubgroupTag t : kTags) {
        if (to_string(t) == s) {
            *out = t;
            return true;
        }
    }
    return false;
}

SubgroupId SubgroupId::plain(SubgroupTag tag) {
    if (tag == SubgroupTag::H8 || tag == SubgroupTag::H9)
        throw std::invalid_argument("H8/H9 require direction coefficients a_hat, b_hat");
    SubgroupId id;
    id.tag = tag;
    return id;
}

SubgroupId SubgroupId::line(SubgroupTag tag, double a_hat, double b_hat) {
    if (tag != SubgroupTag::H8 && tag != SubgroupTag::H9)
        throw std::invalid_argument("direction coefficients only apply to H8/H9");
    if (a_hat * b_hat == 0.0)
        throw std::invalid_argument("H8/H9 require a_hat * b_hat != 0");
    SubgroupId id;
    id.tag = tag;
    id.a_hat = a_hat;
    id.b_hat = b_hat;
    return id;
}

bool subgroup_contains(const SubgroupId& id, const GroupElement& g, double tol) {
    const double scale =
        tol * std::max({1.0, std::abs(g.x), std::abs(g.y), std::abs(g.z)});
    switch (id.tag) {
        case SubgroupTag::H1: return std::abs(g.z) <= scale;
        case SubgroupTag::H2: return std::abs(g.y) <= scale;
        case SubgroupTag::H3: return std::abs(g.x) <= scale && std::abs(g.z) <= scale;
        case SubgroupTag::H4: return std::abs(g.x) <= scale && std::abs(g.y) <= scale;
        case SubgroupTag::H5: return std::abs(g.y) <= scale && std::abs(g.z) <= scale;
        case SubgroupTag::H6: return std::abs(g.x - g.y) <= scale && std::abs(g.z) <= scale;
        case SubgroupTag::H7: return std::abs(g.x - g.z) <= scale && std::abs(g.y) <= scale;
        case SubgroupTag::H8: {
            const double cross = id.b_hat * g.x - id.a_hat * g.y;
            const double cscale = scale * std::max(std::abs(id.a_hat), std::abs(id.b_hat));
            return std::abs(g.z) <= scale && std::abs(cross) <= cscale;
        }
        case SubgroupTag::H9: {
            const double cross = id.b_hat * g.x - id.a_hat * g.z;
            const double cscale = scale * std::max(std::abs(id.a_hat), std::abs(id.b_hat));
            return std::abs(g.y) <= scale && std::abs(cross) <= cscale;
        }
    }
    return false;
}

namespace {

bool law_holds_impl(const Eigen::Matrix3d& map, int trials, std::uint64_t seed, double tol) {
    Rng rng(seed);
    for (int i = 0; i < trials; ++i) {
        const GroupElement g = rng.element(2.0);
        const GroupElement h = rng.element(2.0);
        const GroupElement lhs = GroupElement::from_vec(map * mul(g, h).vec());
        const GroupElement rhs =
            mul(GroupElement::from_vec(map * g.vec()), GroupElement::from_vec(map * h.vec()));
        if ((lhs.vec() - rhs.vec()).cwiseAbs().maxCoeff() > tol) return false;
    }
    return true;
}

void validate(const Homomorphism& h) {
    if (!homomorphism_check(h, 64, 0x5eedu))
        throw std::invalid_argument("map fails the homomorphism law");
    Rng rng(0x5eedu + 1);
    for (int i = 0; i < 64; ++i) {
        const GroupElement img = h.apply(rng.element(2.0));
        if (!subgroup_contains(h.target(), img, 1e-9))
            throw std::invalid_argument("image leaves the target subgroup");
    }
}

}  // namespace

Homomorphism build_homomorphism(const SubgroupId& target, std::span<const double> coeffs) {
    const bool pair_family = target.tag == SubgroupTag::H1 || target.tag == SubgroupTag::H2;
    const std::size_t want = pair_family ? 4 : 2;
    if (coeffs.size() != want)
        throw std::invalid_argument("expected " + std::to_string(want) +
                                    " coefficients for target " + to_string(target.tag));
    if (target.needs_direction() && target.a_hat * target.b_hat == 0.0)
        throw std::invalid_argument("H8/H9 require a_hat * b_hat != 0");

    Homomorphism h;
    h.target_ = target;
    h.n_coeffs_ = want;
    for (std::size_t i = 0; i < want; ++i) h.coeffs_[i] = coeffs[i];

    auto set_row = [&h](int out_slot, double beta, double gamma) {
        h.map_(out_slot, 1) += beta;
        h.map_(out_slot, 2) += gamma;
    };

    switch (target.tag) {
        case SubgroupTag::H1:
            set_row(0, coeffs[0], coeffs[1]);
            set_row(1, coeffs[2], coeffs[3]);
            h.rows_ = {Eigen::Vector2d(coeffs[0], coeffs[1]), Eigen::Vector2d(coeffs[2], coeffs[3])};
            break;
        case SubgroupTag::H2:
            set_row(0, coeffs[0], coeffs[1]);
            set_row(2, coeffs[2], coeffs[3]);
            h.rows_ = {Eigen::Vector2d(coeffs[0], coeffs[1]), Eigen::Vector2d(coeffs[2], coeffs[3])};
            break;
        case SubgroupTag::H3:
            set_row(1, coeffs[0], coeffs[1]);
            h.rows_[0] = {coeffs[0], coeffs[1]};
            break;
        case SubgroupTag::H4:
            set_row(2, coeffs[0], coeffs[1]);
            h.rows_[0] = {coeffs[0], coeffs[1]};
            break;
        case SubgroupTag::H5:
            set_row(0, coeffs[0], coeffs[1]);
            h.rows_[0] = {coeffs[0], coeffs[1]};
            break;
        case SubgroupTag::H6:
            set_row(0, coeffs[0], coeffs[1]);
            set_row(1, coeffs[0], coeffs[1]);
            h.rows_[0] = {coeffs[0], coeffs[1]};
            break;
        case SubgroupTag::H7:
            set_row(0, coeffs[0], coeffs[1]);
            set_row(2, coeffs[0], coeffs[1]);
            h.rows_[0] = {coeffs[0], coeffs[1]};
            break;
        case SubgroupTag::H8:
            set_row(0, target.a_hat * coeffs[0], target.a_hat * coeffs[1]);
            set_row(1, target.b_hat * coeffs[0], target.b_hat * coeffs[1]);
            // The kernel is cut out by alpha y + beta z = 0 alone, so the
            // labeling functional is the raw pair.
            h.rows_[0] = {coeffs[0], coeffs[1]};
            break;
        case SubgroupTag::H9:
            set_row(0, target.a_hat * coeffs[0], target.a_hat * coeffs[1]);
            set_row(2, target.b_hat * coeffs[0], target.b_hat * coeffs[1]);
            h.rows_[0] = {coeffs[0], coeffs[1]};
            break;
    }
    validate(h);
    return h;
}

Homomorphism homomorphism_from_output_map(const SubgroupId& target, const Eigen::Matrix3d& map) {
    if (map.col(0).cwiseAbs().maxCoeff() != 0.0)
        throw std::invalid_argument(
            "output map has a nonzero x-coefficient; the homomorphism law forces it to vanish");
    if (!homomorphism_law_holds(map, 64, 0x5eedu))
        throw std::invalid_argument("map fails the homomorphism law");

    Homomorphism h;
    h.target_ = target;
    h.map_ = map;
    // The law forbids simultaneously nonzero y- and z-output rows, so the
    // map carries at most two functionals: the x-output row plus whichever
    // of the others is active.
    h.rows_[0] = {map(0, 1), map(0, 2)};
    Eigen::Vector2d second(map(1, 1), map(1, 2));
    if (second.isZero(0.0)) second = {map(2, 1), map(2, 2)};
    h.rows_[1] = second;
    validate(h);
    return h;
}

bool homomorphism_check(const Homomorphism& h, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("homomorphism_check: trials must be >= 1");
    return law_holds_impl(h.output_map(), trials, seed, 1e-12);
}

bool homomorphism_law_holds(const Eigen::Matrix3d& map, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("homomorphism_law_holds: trials must be >= 1");
    return law_holds_impl(map, trials, seed, 1e-12);
}

std::string to_string(KernelCase c) {
    switch (c) {
        case KernelCase::FullGroup: return "full group";
        case KernelCase::PlaneYZero: return "plane y = 0";
        case KernelCase::PlaneZZero: return "plane z = 0";
        case KernelCase::TiltedPlane: return "tilted plane";
        case KernelCase::XAxis: return "x-axis";
    }
    return "?";
}

KernelReport kernel(const Homomorphism& h) {
    KernelReport rep;
    rep.subspace = Subspace::kernel_of(h.output_map(), 1e-9);

    // Case labels come from exact zero tests on the coefficient rows; the
    // coefficients are inputs, not computed quantities.
    const Eigen::Vector2d r0 = h.functional_rows()[0];
    const Eigen::Vector2d r1 = h.functional_rows()[1];
    const double det = r0.x() * r1.y() - r0.y() * r1.x();
    if (det != 0.0) {
        rep.label = KernelCase::XAxis;
        rep.b_invertible = true;
        return rep;
    }
    Eigen::Vector2d lead = r0;
    if (lead.x() == 0.0 && lead.y() == 0.0) lead = r1;
    if (lead.x() == 0.0 && lead.y() == 0.0) {
        rep.label = KernelCase::FullGroup;
    } else if (lead.y() == 0.0) {
        rep.label = KernelCase::PlaneYZero;
    } else if (lead.x() == 0.0) {
        rep.label = KernelCase::PlaneZZero;
    } else {
        rep.label = KernelCase::TiltedPlane;
    }
    return rep;
}

}  // namespace heis
