#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "relaysec/gaussian_channel.hpp"
#include "relaysec/optimizer.hpp"

namespace relaysec {

/// Node layout on the plane plus the path-loss exponent and power limits.
/// Channel gains follow h = 1/d^(alpha/2) per link.
struct Geometry {
  Eigen::Vector2d source{0.0, 0.0};
  Eigen::Vector2d destination{1.0, 0.0};
  Eigen::Vector2d eavesdropper{1.5, 0.0};
  Eigen::Vector2d relay{0.5, 0.0};
  double alpha = 2.0;
  double power_r = 1.0;
  double power_d = 1.0;
  double power_2 = 1.0;
};

/// Path-loss gains for every link; the two source-to-eavesdropper taps share
/// the source-eavesdropper distance. Eavesdropper flags are left unset (the
/// caller picks the case). Throws argument_error when a transmitter and
/// receiver coincide.
GaussianOrthogonalChannel gains_from_geometry(const Geometry& geometry);

struct SweepRow {
  double relay_x = 0.0;
  double relay_y = 0.0;
  EavesdropperCase ecase = EavesdropperCase::case1;
  double pdf_inner = 0.0;
  double nf_inner = 0.0;
  double genie_outer = 0.0;
  double wiretap_baseline = 0.0;
  bool degenerate = false;  // rates are NaN when set
};

struct SweepResult {
  std::vector<SweepRow> rows;
  SearchConfig config;
  std::vector<std::string> notes;  // nudged sample points etc.
};

/// Evaluates the optimized bounds at `samples` relay positions spaced
/// evenly on the segment [from, to], for each requested case; rows are
/// ordered by position then case. A sample that lands exactly on another
/// node is offset by 1e-3 along the path (noted in the result); a geometry
/// that stays degenerate flags the row and the sweep continues.
SweepResult sweep_relay_position(const Geometry& base,
                                 const Eigen::Vector2d& from,
                                 const Eigen::Vector2d& to,
                                 std::size_t samples,
                                 std::span<const EavesdropperCase> cases,
                                 const SearchConfig& config);

/// The CSV text: header row
///   relay_x,relay_y,case,pdf_inner,nf_inner,genie_outer,wiretap_baseline
/// then one row per sweep row with rates to six decimal digits.
std::string render_table(const SweepResult& result);

/// Writes render_table's text to `destination`.
void emit_table(const SweepResult& result,
                const std::filesystem::path& destination);

}  // namespace relaysec
