#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "heis/group.hpp"
#include "heis/subspace.hpp"

namespace heis {

// The nine closed simply connected subgroups, up to isomorphism:
//   H1 {z=0}, H2 {y=0}, H3 {x=z=0}, H4 {x=y=0}, H5 {y=z=0},
//   H6 {x=y, z=0}, H7 {x=z, y=0},
//   H8 {(a_hat t, b_hat t, 0)}, H9 {(a_hat s, 0, b_hat s)} with a_hat*b_hat != 0.
enum class SubgroupTag { H1, H2, H3, H4, H5, H6, H7, H8, H9 };

std::string to_string(SubgroupTag tag);
bool subgroup_tag_from_string(const std::string& s, SubgroupTag* out);

struct SubgroupId {
    SubgroupTag tag = SubgroupTag::H1;
    double a_hat = 0.0;  // H8/H9 only
    double b_hat = 0.0;

    static SubgroupId plain(SubgroupTag tag);
    // Throws std::invalid_argument when a_hat * b_hat == 0.
    static SubgroupId line(SubgroupTag tag, double a_hat, double b_hat);

    bool needs_direction() const { return tag == SubgroupTag::H8 || tag == SubgroupTag::H9; }
};

// True iff g satisfies the defining equations of the subgroup, residuals
// measured against tol * max(1, |g|_inf).
bool subgroup_contains(const SubgroupId& id, const GroupElement& g, double tol = 1e-9);

// A validated group homomorphism onto one of the subgroups, stored as its
// linear output map C in coordinates (x, y, z).  Every row of C has zero
// x-coefficient, so ker(h) always contains the x-axis.
class Homomorphism {
  public:
    const SubgroupId& target() const { return target_; }
    const Eigen::Matrix3d& output_map() const { return map_; }
    GroupElement apply(const GroupElement& g) const {
        return GroupElement::from_vec(map_ * g.vec());
    }
    bool is_trivial() const { return map_.isZero(0.0); }

    // The raw coefficient rows (beta_i, gamma_i) acting on (y, z), used for
    // the kernel case labels; row 1 is zero for the single-functional
    // families H3..H9 (their kernel equation does not see a_hat, b_hat).
    const std::array<Eigen::Vector2d, 2>& functional_rows() const { return rows_; }
    // Raw family coefficients as supplied to the builder.
    std::span<const double> coefficients() const { return {coeffs_.data(), n_coeffs_}; }

    friend Homomorphism build_homomorphism(const SubgroupId& target,
                                           std::span<const double> coeffs);
    friend Homomorphism homomorphism_from_output_map(const SubgroupId& target,
                                                     const Eigen::Matrix3d& map);

  private:
    Homomorphism() = default;

    SubgroupId target_;
    Eigen::Matrix3d map_ = Eigen::Matrix3d::Zero();
    std::array<Eigen::Vector2d, 2> rows_ = {Eigen::Vector2d::Zero(), Eigen::Vector2d::Zero()};
    std::array<double, 4> coeffs_ = {0.0, 0.0, 0.0, 0.0};
    std::size_t n_coeffs_ = 0;
};

// Builds the homomorphism family for the target:
//   H1: (b1 y + g1 z, b2 y + g2 z, 0)         coeffs (b1, g1, b2, g2)
//   H2: (b1 y + g1 z, 0, b2 y + g2 z)         coeffs (b1, g1, b2, g2)
//   H3..H7: single functional beta y + gamma z placed in the target's slots,
//           coeffs (beta, gamma)
//   H8: ((alpha y + beta z) a_hat, (alpha y + beta z) b_hat, 0), coeffs (alpha, beta)
//   H9: ((alpha y + beta z) a_hat, 0, (alpha y + beta z) b_hat), coeffs (alpha, beta)
// Throws std::invalid_argument on a wrong coefficient count or a_hat*b_hat == 0.
Homomorphism build_homomorphism(const SubgroupId& target, std::span<const double> coeffs);

inline Homomorphism build_homomorphism(const SubgroupId& target,
                                       std::initializer_list<double> coeffs) {
    return build_homomorphism(target, std::span<const double>(coeffs.begin(), coeffs.size()));
}

// Builds from an explicit linear output map.  Rejects any nonzero
// x-coefficient (the homomorphism law forces them to vanish) and maps that
// fail the law or whose image leaves the target.
Homomorphism homomorphism_from_output_map(const SubgroupId& target, const Eigen::Matrix3d& map);

// h(g g') = h(g) h(g') on `trials` seeded random pairs, to 1e-12.
bool homomorphism_check(const Homomorphism& h, int trials, std::uint64_t seed = 0);

// Same law check for a raw linear output map (no validation applied).
bool homomorphism_law_holds(const Eigen::Matrix3d& map, int trials, std::uint64_t seed = 0);

// Kernel shape per the coefficient matrix B = [[b1, g1], [b2, g2]]:
// the whole group, one of the coordinate planes, a tilted plane
// beta y = -gamma z, or just the x-axis when B is invertible.
enum class KernelCase { FullGroup, PlaneYZero, PlaneZZero, TiltedPlane, XAxis };

std::string to_string(KernelCase c);

struct KernelReport {
    Subspace subspace;
    KernelCase label = KernelCase::FullGroup;
    bool b_invertible = false;
};

KernelReport kernel(const Homomorphism& h);

}  // namespace heis
