#include "relaysec/optimizer.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "relaysec/errors.hpp"

namespace relaysec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Eigen::Matrix3d params_to_matrix(const CovarianceParams& p) {
  const double sr = std::sqrt(p.var_r);
  const double sd = std::sqrt(p.var_d);
  const double s2 = std::sqrt(p.var_2);
  Eigen::Matrix3d k;
  k << p.var_r, p.rho_rd * sr * sd, p.rho_r2 * sr * s2,  //
      p.rho_rd * sr * sd, p.var_d, p.rho_d2 * sd * s2,   //
      p.rho_r2 * sr * s2, p.rho_d2 * sd * s2, p.var_2;
  return k;
}

}  // namespace

CovarianceParams CovarianceParams::from_array(std::span<const double> a) {
  if (a.size() != 6) {
    throw argument_error("covariance params need 6 coordinates");
  }
  return CovarianceParams{a[0], a[1], a[2], a[3], a[4], a[5]};
}

InputCovariance to_covariance(const CovarianceParams& p,
                              const GaussianOrthogonalChannel& ch) {
  ch.validate();
  if (p.var_r < 0.0 || p.var_r > ch.power_r + 1e-12 || p.var_d < 0.0 ||
      p.var_d > ch.power_d + 1e-12 || p.var_2 < 0.0 ||
      p.var_2 > ch.power_2 + 1e-12) {
    throw argument_error("variance outside the power box");
  }
  for (double rho : {p.rho_rd, p.rho_r2, p.rho_d2}) {
    if (rho < -1.0 || rho > 1.0) {
      throw argument_error("correlation outside [-1, 1]");
    }
  }
  const Eigen::Matrix3d k = params_to_matrix(p);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(k);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -1e-9) {
    throw infeasible_error("correlation pattern is not realizable (min "
                           "eigenvalue " +
                               std::to_string(min_eig) + ")",
                           min_eig);
  }
  return InputCovariance(k, ch);
}

MaximizeResult maximize(
    const std::function<double(const CovarianceParams&)>& objective,
    const GaussianOrthogonalChannel& power_boxes, const SearchConfig& config) {
  power_boxes.validate();
  const std::vector<double> lo{0.0, 0.0, 0.0, -1.0, -1.0, -1.0};
  const std::vector<double> hi{power_boxes.power_r, power_boxes.power_d,
                               power_boxes.power_2, 1.0, 1.0, 1.0};
  const auto boxed = [&](std::span<const double> x) {
    const CovarianceParams p = CovarianceParams::from_array(x);
    try {
      return objective(p);
    } catch (const infeasible_error&) {
      return -kInf;
    }
  };
  const BoxSearchResult r = maximize_over_box(boxed, lo, hi, config);
  return MaximizeResult{r.value, CovarianceParams::from_array(r.point),
                        r.trace};
}

std::string to_string(SecrecyBound b) {
  switch (b) {
    case SecrecyBound::pdf_inner: return "pdf_inner";
    case SecrecyBound::nf_inner: return "nf_inner";
    case SecrecyBound::genie_outer: return "genie_outer";
    case SecrecyBound::relay_capacity: return "relay_capacity";
  }
  return "pdf_inner";
}

BoundResult optimize_bound(const GaussianOrthogonalChannel& ch,
                           SecrecyBound bound, const SearchConfig& config,
                           std::span<const CovarianceParams> extra_starts) {
  ch.validate();
  const bool secrecy_bound = bound != SecrecyBound::relay_capacity;
  if (secrecy_bound && !ch.eavesdropper_case()) {
    throw argument_error("secrecy bound requested with no active "
                         "eavesdropper flag");
  }

  BoundResult result;
  result.bound = bound;

  if (bound == SecrecyBound::nf_inner) {
    const DeafRelayResult r = maximize_nf_rate(ch, config);
    result.value = r.rate;
    result.nf_power_d = r.p_d;
    result.nf_power_2 = r.p_2;
    return result;
  }

  if (bound == SecrecyBound::genie_outer) {
    // X_R never helps the genie bound (zeroing its row and column never
    // decreases the rate), so the search runs over (var_d, var_2, rho_d2).
    const std::vector<double> lo{0.0, 0.0, -1.0};
    const std::vector<double> hi{ch.power_d, ch.power_2, 1.0};
    const auto boxed = [&](std::span<const double> x) {
      const CovarianceParams p{0.0, x[0], x[1], 0.0, 0.0, x[2]};
      try {
        return genie_outer_rate(ch, to_covariance(p, ch));
      } catch (const infeasible_error&) {
        return -kInf;
      }
    };
    std::vector<std::vector<double>> starts;
    for (const auto& p : extra_starts) {
      starts.push_back({p.var_d, p.var_2, p.rho_d2});
    }
    const BoxSearchResult r = maximize_over_box(boxed, lo, hi, config, starts);
    result.value = r.value;
    result.params = CovarianceParams{0.0, r.point[0], r.point[1],
                                     0.0, 0.0, r.point[2]};
    result.trace = r.trace;
    return result;
  }

  // pdf_inner / relay_capacity: full covariance search.
  const std::vector<double> lo{0.0, 0.0, 0.0, -1.0, -1.0, -1.0};
  const std::vector<double> hi{ch.power_r, ch.power_d, ch.power_2,
                               1.0, 1.0, 1.0};
  const auto boxed = [&](std::span<const double> x) {
    const CovarianceParams p = CovarianceParams::from_array(x);
    try {
      const InputCovariance k = to_covariance(p, ch);
      return bound == SecrecyBound::pdf_inner ? pdf_inner_rate(ch, k)
                                              : relay_capacity_rate(ch, k);
    } catch (const infeasible_error&) {
      return -kInf;
    }
  };
  std::vector<std::vector<double>> starts;
  for (const auto& p : extra_starts) {
    const auto a = p.to_array();
    starts.emplace_back(a.begin(), a.end());
  }
  const BoxSearchResult r = maximize_over_box(boxed, lo, hi, config, starts);
  result.value = r.value;
  result.params = CovarianceParams::from_array(r.point);
  result.trace = r.trace;
  return result;
}

}  // namespace relaysec
