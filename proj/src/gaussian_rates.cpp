#include "relaysec/gaussian_rates.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "relaysec/errors.hpp"

namespace relaysec {

namespace {

using Idx = std::vector<std::size_t>;
using gvar::x_2;
using gvar::x_d;
using gvar::x_r;
using gvar::y;
using gvar::y_1;
using gvar::y_21;
using gvar::y_22;

double positive_part(double x) { return x > 0.0 ? x : 0.0; }

// Eavesdropper output set for the channel's active taps.
Idx active_eavesdropper_outputs(const GaussianOrthogonalChannel& ch) {
  Idx out;
  if (ch.eave_channel1) out.push_back(y_21);
  if (ch.eave_channel2) out.push_back(y_22);
  return out;
}

EavesdropperCase required_case(const GaussianOrthogonalChannel& ch,
                               const char* what) {
  const auto c = ch.eavesdropper_case();
  if (!c) {
    throw argument_error(std::string(what) +
                         " needs at least one eavesdropper flag set");
  }
  return *c;
}

}  // namespace

double pdf_inner_rate(const GaussianOrthogonalChannel& ch,
                      const InputCovariance& k) {
  const GaussianJoint j = joint_output_covariance(ch, k);
  const double i_relay =
      gaussian_mutual_information(j, Idx{x_d, x_r}, Idx{y, y_1}, Idx{x_2});
  const double i_dest = gaussian_mutual_information(j, Idx{x_d, x_2}, Idx{y});
  const double bound = std::min(i_relay, i_dest);

  double leak = 0.0;
  const auto ecase = ch.eavesdropper_case();
  if (ecase) {
    const Idx eav = active_eavesdropper_outputs(ch);
    switch (*ecase) {
      case EavesdropperCase::case1:
        leak = gaussian_mutual_information(j, Idx{x_r}, eav);
        break;
      case EavesdropperCase::case2:
        leak = gaussian_mutual_information(j, Idx{x_d, x_2}, eav);
        break;
      case EavesdropperCase::case3:
        leak = gaussian_mutual_information(j, Idx{x_r}, eav, Idx{x_2}) +
               gaussian_mutual_information(j, Idx{x_d, x_2}, eav);
        break;
    }
  }
  return positive_part(bound - leak);
}

double nf_inner_rate(const GaussianOrthogonalChannel& ch, double p_d,
                     double p_2) {
  ch.validate();
  if (p_d < 0.0 || p_d > ch.power_d + 1e-12 || p_2 < 0.0 ||
      p_2 > ch.power_2 + 1e-12) {
    throw argument_error("noise-forwarding powers out of range");
  }
  const double direct = ch.h_sd * ch.h_sd * p_d;
  const double relay_boost = ch.h_rd * ch.h_rd * p_2;
  if (!ch.eave_channel2) {
    // No tap on the destination channel: nothing to hide from there. The
    // min template collapses to the direct-link capacity.
    return gaussian_capacity(direct);
  }
  const double tap_d = ch.h_se2 * ch.h_se2 * p_d;
  const double tap_2 = ch.h_re * ch.h_re * p_2;
  const double first =
      gaussian_capacity(direct + relay_boost) - gaussian_capacity(tap_d + tap_2);
  const double second = gaussian_capacity(direct) -
                        gaussian_capacity(tap_d / (1.0 + tap_2));
  return positive_part(std::min(first, second));
}

double genie_outer_rate(const GaussianOrthogonalChannel& ch,
                        const InputCovariance& k) {
  const EavesdropperCase ecase = required_case(ch, "genie outer bound");
  const GaussianJoint j = joint_output_covariance(ch, k);
  const double i_dest = gaussian_mutual_information(j, Idx{x_d, x_2}, Idx{y});
  const Idx eav = active_eavesdropper_outputs(ch);
  double leak = 0.0;
  switch (ecase) {
    case EavesdropperCase::case1:
      leak = gaussian_mutual_information(j, Idx{x_r}, eav);
      break;
    case EavesdropperCase::case2:
      leak = gaussian_mutual_information(j, Idx{x_d, x_2}, eav);
      break;
    case EavesdropperCase::case3:
      leak = gaussian_mutual_information(j, Idx{x_r, x_d, x_2}, eav);
      break;
  }
  return positive_part(i_dest - leak);
}

double wiretap_baseline(const GaussianOrthogonalChannel& ch) {
  ch.validate();
  const double direct = gaussian_capacity(ch.h_sd * ch.h_sd * ch.power_d);
  if (!ch.eave_channel2) return direct;
  const double tapped = gaussian_capacity(ch.h_se2 * ch.h_se2 * ch.power_d);
  return positive_part(direct - tapped);
}

double relay_capacity_rate(const GaussianOrthogonalChannel& ch,
                           const InputCovariance& k) {
  const GaussianJoint j = joint_output_covariance(ch, k);
  const double split =
      gaussian_mutual_information(j, Idx{x_r}, Idx{y_1}, Idx{x_2}) +
      gaussian_mutual_information(j, Idx{x_d}, Idx{y}, Idx{x_2});
  const double cut =
      gaussian_mutual_information(j, Idx{x_r, x_d, x_2}, Idx{y});
  return std::min(split, cut);
}

DeafRelayResult maximize_nf_rate(const GaussianOrthogonalChannel& ch,
                                 const SearchConfig& config) {
  ch.validate();
  SearchConfig cfg = config;
  cfg.grid_points = 101;
  const double lo[2] = {0.0, 0.0};
  const double hi[2] = {ch.power_d, ch.power_2};
  const auto objective = [&ch](std::span<const double> p) {
    return nf_inner_rate(ch, p[0], p[1]);
  };
  const BoxSearchResult r = maximize_over_box(objective, lo, hi, cfg);
  return DeafRelayResult{r.value, r.point[0], r.point[1]};
}

DeafRelayResult deaf_relay_capacity(const GaussianOrthogonalChannel& ch,
                                    const SearchConfig& config) {
  if (ch.h_sr != 0.0) {
    throw argument_error("deaf-relay capacity requires h_sr = 0");
  }
  const EavesdropperCase ecase = required_case(ch, "deaf-relay capacity");
  if (ecase == EavesdropperCase::case1) {
    throw argument_error("deaf-relay capacity holds for cases 2 and 3 only");
  }
  return maximize_nf_rate(ch, config);
}

}  // namespace relaysec
