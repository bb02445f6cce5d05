#pragma once

#include <complex>
#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace hodgeheat {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using SpMat = Eigen::SparseMatrix<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Pinned tolerance bands.  Theorem-style bounds are checked to 1e-12,
/// algebraic identities to 1e-10, resolvent identities to 1e-9.
namespace tol {
inline constexpr double bound = 1e-12;
inline constexpr double identity = 1e-10;
inline constexpr double resolvent = 1e-9;
inline constexpr double rank = 1e-8;       // kernel-dimension threshold (relative)
inline constexpr double rank_form = 1e-9;  // form-kernel deflation threshold (relative)
}  // namespace tol

}  // namespace hodgeheat
