#pragma once

#include <Eigen/Dense>
#include <optional>

#include "relaysec/dmc_channel.hpp"
#include "relaysec/gaussian_joint.hpp"

namespace relaysec {

/// Gaussian orthogonal relay-eavesdropper channel: six amplitude gains,
/// three average power limits and the two eavesdropper-presence flags. The
/// eavesdropper case is derived from the flags.
struct GaussianOrthogonalChannel {
  double h_sr = 0.0;   // source -> relay (orthogonal channel 1)
  double h_sd = 0.0;   // source -> destination (channel 2)
  double h_rd = 0.0;   // relay -> destination (channel 2)
  double h_se1 = 0.0;  // source -> eavesdropper tap on channel 1
  double h_se2 = 0.0;  // source -> eavesdropper tap on channel 2
  double h_re = 0.0;   // relay -> eavesdropper tap on channel 2
  double power_r = 0.0;
  double power_d = 0.0;
  double power_2 = 0.0;
  bool eave_channel1 = false;
  bool eave_channel2 = false;

  void validate() const;  // powers >= 0

  /// nullopt when neither flag is set (no active eavesdropper).
  std::optional<EavesdropperCase> eavesdropper_case() const {
    if (eave_channel1 && eave_channel2) return EavesdropperCase::case3;
    if (eave_channel1) return EavesdropperCase::case1;
    if (eave_channel2) return EavesdropperCase::case2;
    return std::nullopt;
  }
  GaussianOrthogonalChannel with_case(EavesdropperCase c) const {
    GaussianOrthogonalChannel ch = *this;
    ch.eave_channel1 = c != EavesdropperCase::case2;
    ch.eave_channel2 = c != EavesdropperCase::case1;
    return ch;
  }
};

/// Second-moment matrix of (X_R, X_D, X_2). Positive semidefinite within
/// 1e-9 and diagonal entries within 1e-9 of the channel's power limits.
class InputCovariance {
 public:
  InputCovariance(const Eigen::Matrix3d& k,
                  const GaussianOrthogonalChannel& channel);

  const Eigen::Matrix3d& matrix() const { return k_; }
  double operator()(int i, int j) const { return k_(i, j); }

  /// Same covariance with the X_R row and column set to zero (stays PSD).
  InputCovariance with_zero_relay_input(
      const GaussianOrthogonalChannel& channel) const;

 private:
  Eigen::Matrix3d k_;
};

/// Indices of the variables in the 7-dimensional output joint.
namespace gvar {
inline constexpr std::size_t x_r = 0;
inline constexpr std::size_t x_d = 1;
inline constexpr std::size_t x_2 = 2;
inline constexpr std::size_t y_1 = 3;
inline constexpr std::size_t y = 4;
inline constexpr std::size_t y_21 = 5;
inline constexpr std::size_t y_22 = 6;
}  // namespace gvar

/// Joint Gaussian law of (X_R, X_D, X_2, Y_1, Y, Y_21, Y_22) with
/// unit-variance independent noise on each output and the eavesdropper rows
/// scaled by their presence flags.
GaussianJoint joint_output_covariance(const GaussianOrthogonalChannel& ch,
                                      const InputCovariance& k);

}  // namespace relaysec
