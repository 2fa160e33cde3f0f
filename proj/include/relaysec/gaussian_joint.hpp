#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

namespace relaysec {

/// Zero-mean jointly Gaussian vector, described by its covariance.
///
/// The covariance must be symmetric to 1e-10 and positive semidefinite up to
/// an eigenvalue tolerance of -1e-9; negative eigenvalues inside the
/// tolerance are clipped to zero on construction.
class GaussianJoint {
 public:
  explicit GaussianJoint(Eigen::MatrixXd covariance,
                         std::vector<std::string> names = {});

  std::size_t dim() const { return static_cast<std::size_t>(cov_.rows()); }
  const Eigen::MatrixXd& covariance() const { return cov_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t index_of(const std::string& name) const;

 private:
  Eigen::MatrixXd cov_;
  std::vector<std::string> names_;
};

/// Shannon capacity of a scalar Gaussian channel at the given SNR, in bits:
/// (1/2) log2(1 + snr).
double gaussian_capacity(double snr);

/// I(A;B|C) in bits for a jointly Gaussian vector, evaluated as half the
/// log-determinant combination of covariance blocks. The log-determinant of
/// an empty block is zero. Singular blocks (determinant below 1e-300) are
/// regularized with a 1e-12 ridge so that deterministic linear dependences
/// yield finite, consistent differences.
double gaussian_mutual_information(const GaussianJoint& joint,
                                   std::span<const std::size_t> a,
                                   std::span<const std::size_t> b,
                                   std::span<const std::size_t> c = {});

/// log2 det of the covariance block indexed by `subset` (ridge rule above).
double gaussian_log_det_block(const Eigen::MatrixXd& covariance,
                              std::span<const std::size_t> subset);

}  // namespace relaysec
