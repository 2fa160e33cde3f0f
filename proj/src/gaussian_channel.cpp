#include "relaysec/gaussian_channel.hpp"

#include <string>

#include "relaysec/errors.hpp"

namespace relaysec {

namespace {
constexpr double kPsdTolerance = 1e-9;
constexpr double kPowerTolerance = 1e-9;
}  // namespace

void GaussianOrthogonalChannel::validate() const {
  if (power_r < 0.0 || power_d < 0.0 || power_2 < 0.0) {
    throw argument_error("power limits must be non-negative");
  }
}

InputCovariance::InputCovariance(const Eigen::Matrix3d& k,
                                 const GaussianOrthogonalChannel& channel)
    : k_((k + k.transpose()) / 2.0) {
  channel.validate();
  if ((k - k.transpose()).cwiseAbs().maxCoeff() > 1e-9) {
    throw argument_error("input covariance must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(k_);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -kPsdTolerance) {
    throw infeasible_error("input covariance not positive semidefinite",
                           min_eig);
  }
  if (min_eig < 0.0) {
    // Clip the tolerated negative part here, before channel gains can blow
    // it up into a visibly indefinite output covariance.
    const Eigen::Vector3d clipped = es.eigenvalues().cwiseMax(0.0);
    k_ = es.eigenvectors() * clipped.asDiagonal() *
         es.eigenvectors().transpose();
  }
  const double caps[3] = {channel.power_r, channel.power_d, channel.power_2};
  for (int i = 0; i < 3; ++i) {
    if (k_(i, i) > caps[i] + kPowerTolerance) {
      throw argument_error("input covariance exceeds power limit on entry " +
                           std::to_string(i));
    }
    if (k_(i, i) < 0.0) {
      throw argument_error("input covariance has a negative variance");
    }
  }
}

InputCovariance InputCovariance::with_zero_relay_input(
    const GaussianOrthogonalChannel& channel) const {
  Eigen::Matrix3d k = k_;
  k.row(0).setZero();
  k.col(0).setZero();
  return InputCovariance(k, channel);
}

GaussianJoint joint_output_covariance(const GaussianOrthogonalChannel& ch,
                                      const InputCovariance& k) {
  ch.validate();
  const double e1 = ch.eave_channel1 ? 1.0 : 0.0;
  const double e2 = ch.eave_channel2 ? 1.0 : 0.0;
  // Rows: inputs pass through unchanged, then the four noisy outputs.
  Eigen::Matrix<double, 7, 3> a = Eigen::Matrix<double, 7, 3>::Zero();
  a(gvar::x_r, 0) = 1.0;
  a(gvar::x_d, 1) = 1.0;
  a(gvar::x_2, 2) = 1.0;
  a(gvar::y_1, 0) = ch.h_sr;
  a(gvar::y, 1) = ch.h_sd;
  a(gvar::y, 2) = ch.h_rd;
  a(gvar::y_21, 0) = e1 * ch.h_se1;
  a(gvar::y_22, 1) = e2 * ch.h_se2;
  a(gvar::y_22, 2) = e2 * ch.h_re;

  Eigen::MatrixXd cov = a * k.matrix() * a.transpose();
  for (std::size_t out : {gvar::y_1, gvar::y, gvar::y_21, gvar::y_22}) {
    cov(out, out) += 1.0;
  }
  return GaussianJoint(cov,
                       {"x_r", "x_d", "x_2", "y_1", "y", "y_21", "y_22"});
}

}  // namespace relaysec
