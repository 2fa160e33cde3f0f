#pragma once

#include <functional>
#include <string>

#include "relaysec/box_search.hpp"
#include "relaysec/gaussian_channel.hpp"
#include "relaysec/gaussian_rates.hpp"

namespace relaysec {

/// Search coordinates for an input covariance: three variances bounded by
/// the power limits and three pairwise correlations in [-1, 1]. Not every
/// combination is a valid covariance; to_covariance rejects the rest.
struct CovarianceParams {
  double var_r = 0.0;
  double var_d = 0.0;
  double var_2 = 0.0;
  double rho_rd = 0.0;
  double rho_r2 = 0.0;
  double rho_d2 = 0.0;

  std::array<double, 6> to_array() const {
    return {var_r, var_d, var_2, rho_rd, rho_r2, rho_d2};
  }
  static CovarianceParams from_array(std::span<const double> a);
};

/// K_ij = rho_ij * sigma_i * sigma_j; throws infeasible_error (with the
/// offending minimum eigenvalue) when the implied matrix is not positive
/// semidefinite within 1e-9, and argument_error when a box is violated.
InputCovariance to_covariance(const CovarianceParams& params,
                              const GaussianOrthogonalChannel& channel);

struct MaximizeResult {
  double value = 0.0;
  CovarianceParams params;
  SearchTrace trace;
};

/// Maximizes a rate objective over CovarianceParams: coarse product-grid
/// scan, then coordinate ascent with step halving from the best `restarts`
/// grid points plus seeded random restarts. Infeasible parameter
/// combinations score -inf so the search never leaves the PSD set.
/// Deterministic for a fixed seed; the returned value is attained by the
/// returned feasible params.
MaximizeResult maximize(
    const std::function<double(const CovarianceParams&)>& objective,
    const GaussianOrthogonalChannel& power_boxes, const SearchConfig& config);

enum class SecrecyBound { pdf_inner, nf_inner, genie_outer, relay_capacity };

std::string to_string(SecrecyBound b);

struct BoundResult {
  SecrecyBound bound = SecrecyBound::pdf_inner;
  double value = 0.0;
  CovarianceParams params;   // pdf_inner / genie_outer / relay_capacity
  double nf_power_d = 0.0;   // nf_inner
  double nf_power_2 = 0.0;   // nf_inner
  SearchTrace trace;
};

/// Dispatches to the matching objective and parameter space:
///  - pdf_inner and relay_capacity search the full CovarianceParams box;
///  - genie_outer searches (var_d, var_2, rho_d2) with the X_R coordinates
///    pinned to zero (zeroing X_R never decreases the genie bound);
///  - nf_inner searches the two noise-forwarding powers on a 101x101 grid.
/// `extra_starts` seeds additional ascent starts (full CovarianceParams
/// coordinates) for the covariance searches.
BoundResult optimize_bound(const GaussianOrthogonalChannel& channel,
                           SecrecyBound bound, const SearchConfig& config,
                           std::span<const CovarianceParams> extra_starts = {});

}  // namespace relaysec
