#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace relaysec {

/// Knobs for the derivative-free searches. `grid_points` is per axis;
/// `restarts` counts both the best grid points kept for ascent and the
/// seeded random starts added on top.
struct SearchConfig {
  unsigned grid_points = 11;
  unsigned restarts = 20;
  double step_floor = 1e-6;
  unsigned max_iterations = 500;  // coordinate sweeps per ascent
  std::uint64_t seed = 0;

  void validate() const;
};

struct SearchTrace {
  std::size_t grid_evaluations = 0;
  std::size_t ascent_evaluations = 0;
  double best_grid_value = 0.0;
};

struct BoxSearchResult {
  double value = 0.0;
  std::vector<double> point;
  SearchTrace trace;
};

/// Maximizes `objective` over the axis-aligned box [lo, hi] by a full
/// product-grid scan followed by coordinate ascent with step halving from
/// the best `restarts` grid points plus `restarts` seeded random starts
/// (plus any caller-provided starts). Objectives may return -inf to mark a
/// point infeasible; every returned point has been evaluated feasibly.
/// Deterministic for a fixed seed; ties resolve to the lexicographically
/// smallest point.
BoxSearchResult maximize_over_box(
    const std::function<double(std::span<const double>)>& objective,
    std::span<const double> lo, std::span<const double> hi,
    const SearchConfig& config,
    std::span<const std::vector<double>> extra_starts = {});

}  // namespace relaysec
