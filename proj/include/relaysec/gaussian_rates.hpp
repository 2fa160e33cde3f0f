#pragma once

#include "relaysec/box_search.hpp"
#include "relaysec/gaussian_channel.hpp"

namespace relaysec {

/// PDF inner bound with Gaussian inputs of covariance K: the case-matched
///   min{ I(X_D X_R; Y Y_1 | X_2), I(X_D X_2; Y) } - (eavesdropper terms)
/// evaluated on the 7-variable output joint, clamped at zero. Eavesdropper
/// terms use the case's active outputs, so they are exactly zero when the
/// corresponding flag is off.
double pdf_inner_rate(const GaussianOrthogonalChannel& ch,
                      const InputCovariance& k);

/// Noise-forwarding rate with independent Gaussian X_D, X_2 at powers
/// (p_d, p_2):
///   min{ C(h_sd^2 p_d + h_rd^2 p_2) - C(h_se2^2 p_d + h_re^2 p_2),
///        C(h_sd^2 p_d) - C(h_se2^2 p_d / (1 + h_re^2 p_2)) }
/// clamped at zero. For case 1 no noise-forwarding formula exists in the
/// source material; the same template with only the channel-1 tap active
/// degenerates to C(h_sd^2 p_d) and is reported as an extrapolation.
double nf_inner_rate(const GaussianOrthogonalChannel& ch, double p_d,
                     double p_2);

/// Genie outer bound at covariance K: the case-matched
///   I(X_D X_2; Y) - I(...; Y_2)
/// difference, clamped at zero. The maximization over K lives in the
/// optimizer module.
double genie_outer_rate(const GaussianOrthogonalChannel& ch,
                        const InputCovariance& k);

/// Secrecy rate with a silent relay (X_R = X_2 = 0): the direct link
/// against the eavesdropper's channel-2 tap. Case 1 (and no eavesdropper)
/// reduce to the plain direct-link capacity.
double wiretap_baseline(const GaussianOrthogonalChannel& ch);

/// Relay-channel capacity expression (no eavesdropper) with Gaussian inputs
/// of covariance K:
///   min( I(X_R;Y_1|X_2) + I(X_D;Y|X_2), I(X_R X_D X_2; Y) ).
double relay_capacity_rate(const GaussianOrthogonalChannel& ch,
                           const InputCovariance& k);

struct DeafRelayResult {
  double rate = 0.0;
  double p_d = 0.0;
  double p_2 = 0.0;
};

/// Secrecy capacity of the deaf-relay sub-class (h_sr = 0, cases 2 and 3):
/// maximizes the noise-forwarding expression over the power rectangle with
/// a 101x101 grid plus local refinement. Returns the value and the argmax
/// powers.
DeafRelayResult deaf_relay_capacity(const GaussianOrthogonalChannel& ch,
                                    const SearchConfig& config = {});

/// Shared search behind deaf_relay_capacity and the optimizer's
/// noise-forwarding dispatch: the grid is pinned at 101 points per axis so
/// the two operations agree bit-for-bit.
DeafRelayResult maximize_nf_rate(const GaussianOrthogonalChannel& ch,
                                 const SearchConfig& config);

}  // namespace relaysec
