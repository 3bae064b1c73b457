#include "heis/subspace.hpp"

#include <Eigen/SVD>

namespace heis {

namespace {

// Rank at tol * sigma_max, plus a fragility flag for singular values within
// a factor of 10 of the threshold.
int rank_of(const Eigen::VectorXd& sv, double tol, bool* fragile) {
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    const double cut = tol * smax;
    int rank = 0;
    bool frag = false;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cut) ++rank;
        if (smax > 0.0 && sv(i) >= 0.1 * cut && sv(i) <= 10.0 * cut) frag = true;
    }
    if (fragile) *fragile = frag;
    return rank;
}

}  // namespace

Subspace Subspace::full() {
    Subspace s;
    s.basis_ = Eigen::Matrix3d::Identity();
    return s;
}

Subspace Subspace::from_orthonormal(const Eigen::Matrix<double, 3, Eigen::Dynamic>& basis,
                                    bool fragile) {
    Subspace s;
    s.basis_ = basis;
    s.fragile_ = fragile;
    return s;
}

Subspace Subspace::span_of(const Eigen::Matrix<double, 3, Eigen::Dynamic>& vectors,
                           double tol) {
    Subspace s;
    if (vectors.cols() == 0) return s;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(vectors, Eigen::ComputeThinU);
    bool frag = false;
    const int rank = rank_of(svd.singularValues(), tol, &frag);
    s.basis_ = svd.matrixU().leftCols(rank);
    s.fragile_ = frag;
    return s;
}

Subspace Subspace::kernel_of(const Eigen::MatrixXd& m, double tol) {
    Subspace s;
    if (m.rows() == 0) return full();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    bool frag = false;
    const int rank = rank_of(svd.singularValues(), tol, &frag);
    s.basis_ = svd.matrixV().rightCols(3 - rank);
    s.fragile_ = frag;
    return s;
}

bool Subspace::contains(const Eigen::Vector3d& v, double tol) const {
    const Eigen::Vector3d residual = v - basis_ * (basis_.transpose() * v);
    return residual.norm() <= tol * std::max(1.0, v.norm());
}

bool Subspace::contains(const Subspace& other, double tol) const {
    for (Eigen::Index j = 0; j < other.basis_.cols(); ++j) {
        if (!contains(other.basis_.col(j), tol)) return false;
    }
    return true;
}

bool Subspace::same_as(const Subspace& other, double tol) const {
    return dim() == other.dim() && contains(other, tol) && other.contains(*this, tol);
}

Subspace Subspace::intersect(const Subspace& other, double tol) const {
    Eigen::MatrixXd stacked(6, 3);
    stacked.topRows(3) = Eigen::Matrix3d::Identity() - projector();
    stacked.bottomRows(3) = Eigen::Matrix3d::Identity() - other.projector();
    if (stacked.norm() == 0.0) return full();
    return kernel_of(stacked, tol);
}

}  // namespace heis
