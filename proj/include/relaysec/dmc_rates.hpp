#pragma once

#include <cstddef>

#include "relaysec/dmc_channel.hpp"
#include "relaysec/info_measures.hpp"

namespace relaysec {

/// Joint pmf over (X_R, X_D, X_2, Y_1, Y, Y_21, Y_22) obtained by pushing
/// the input distribution through the two channel kernels. Axis order is as
/// listed. Mainly a cross-check surface; the rate evaluators below work on
/// reduced marginals.
JointPmf channel_input_joint(const OrthogonalDmc& channel,
                             const JointPmf& input);

/// Partial decode-and-forward inner bound at a fixed input distribution
/// p(x_r, x_d, x_2): the case-matched expression
///   min{ I(X_D X_R; Y Y_1 | X_2), I(X_D X_2; Y) } - (eavesdropper terms),
/// clamped at zero.
double pdf_inner_bound(const OrthogonalDmc& channel, const JointPmf& input);

/// PDF-with-randomization lower bound at a fixed auxiliary scheme: the
/// case-matched achievable expression over (U, V_R, V_D, V_2) with the
/// scheme's prefix channel, clamped at zero. For cases 1 and 2 this
/// expression meets the outer bound and gives the secrecy capacity.
double randomized_pdf_inner_bound(const OrthogonalDmc& channel,
                                  const AuxiliaryScheme& scheme);

/// The outer-bound expression evaluated at a fixed auxiliary scheme. A true
/// outer bound needs a maximization over all schemes (with unbounded
/// auxiliary cardinalities); this evaluator exists for cross-checks at
/// matched schemes, not as a certified bound.
double outer_bound_expression(const OrthogonalDmc& channel,
                              const AuxiliaryScheme& scheme);

/// Full-duplex PDF secrecy rate
///   min{ I(X_1;Y|X_2,V) + I(V;Y_1|X_2), I(X_1 X_2 V; Y) } - I(X_1 X_2; Y_2)
/// at the channel's input scheme, clamped at zero.
double full_duplex_pdf_rate(const FullDuplexDmc& channel);

/// Relay-channel capacity expression with no eavesdropper:
///   min( I(X_R;Y_1|X_2) + I(X_D;Y|X_2), I(X_R X_D X_2; Y) ).
double no_eavesdropper_capacity_expression(const OrthogonalDmc& channel,
                                           const JointPmf& input);

struct InnerBoundSearch {
  double rate = 0.0;
  JointPmf input;
  std::size_t evaluations = 0;
  bool exhaustive = false;  // whole simplex grid enumerated
};

/// Maximizes pdf_inner_bound over input distributions. Grid points are the
/// pmfs with probabilities in multiples of 1/grid_resolution; when the
/// composition count exceeds an enumeration budget a deterministic uniform
/// subsample of the same grid is scanned instead (reported via
/// `exhaustive`). Optional refinement runs pairwise mass-transfer ascent
/// with step halving down to 1e-6 from the best 20 grid points. Every
/// evaluated point is a feasible input, so the result is certified
/// achievable. Requires |X_R| * |X_D| * |X_2| <= 64.
InnerBoundSearch maximize_inner_bound(const OrthogonalDmc& channel,
                                      unsigned grid_resolution, bool refine);

}  // namespace relaysec
