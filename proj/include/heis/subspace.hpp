#pragma once

#include <Eigen/Core>

namespace heis {

// A linear subspace of 3-space held as an orthonormal basis (dim 0..3).
// Rank decisions are made against singular values relative to the largest
// one; a computed subspace is flagged fragile when some singular value lands
// within a factor of 10 of the rank threshold.
class Subspace {
  public:
    Subspace() : basis_(3, 0) {}

    // Column span of `vectors` (3 x k), orthonormalized.
    static Subspace span_of(const Eigen::Matrix<double, 3, Eigen::Dynamic>& vectors,
                            double tol = 1e-9);

    // Nullspace of an m x 3 matrix, rank revealed at tol * sigma_max.
    static Subspace kernel_of(const Eigen::MatrixXd& m, double tol = 1e-9);

    // Wraps an already-orthonormal basis without renormalizing (used when
    // deserializing reports).
    static Subspace from_orthonormal(const Eigen::Matrix<double, 3, Eigen::Dynamic>& basis,
                                     bool fragile = false);

    static Subspace zero() { return Subspace(); }
    static Subspace full();

    int dim() const { return static_cast<int>(basis_.cols()); }
    const Eigen::Matrix<double, 3, Eigen::Dynamic>& basis() const { return basis_; }
    bool fragile() const { return fragile_; }

    // v belongs iff || v - proj(v) || <= tol * max(1, ||v||).
    bool contains(const Eigen::Vector3d& v, double tol = 1e-9) const;
    bool contains(const Subspace& other, double tol = 1e-9) const;
    bool same_as(const Subspace& other, double tol = 1e-9) const;

    Subspace intersect(const Subspace& other, double tol = 1e-9) const;

    // Orthogonal projector onto the subspace.
    Eigen::Matrix3d projector() const { return basis_ * basis_.transpose(); }

  private:
    Eigen::Matrix<double, 3, Eigen::Dynamic> basis_;
    bool fragile_ = false;
};

}  // namespace heis
