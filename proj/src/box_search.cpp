#include "relaysec/box_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "relaysec/errors.hpp"

namespace relaysec {

namespace {

bool lex_less(std::span<const double> a, std::span<const double> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct Best {
  double value = -std::numeric_limits<double>::infinity();
  std::vector<double> point;

  void offer(double v, std::span<const double> p) {
    if (v > value || (v == value && (point.empty() || lex_less(p, point)))) {
      value = v;
      point.assign(p.begin(), p.end());
    }
  }
};

}  // namespace

void SearchConfig::validate() const {
  if (grid_points < 2 || restarts == 0 || step_floor <= 0.0 ||
      max_iterations == 0) {
    throw argument_error("search config fields must be positive "
                         "(grid_points >= 2)");
  }
}

BoxSearchResult maximize_over_box(
    const std::function<double(std::span<const double>)>& objective,
    std::span<const double> lo, std::span<const double> hi,
    const SearchConfig& config,
    std::span<const std::vector<double>> extra_starts) {
  config.validate();
  const std::size_t dim = lo.size();
  if (dim == 0 || hi.size() != dim) {
    throw argument_error("box bounds must be non-empty and matched");
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(lo[i] <= hi[i])) throw argument_error("box has lo > hi");
  }

  SearchTrace trace;
  Best best;

  // Full product grid.
  const unsigned g = config.grid_points;
  std::vector<double> axis_step(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    axis_step[i] = (hi[i] - lo[i]) / double(g - 1);
  }
  std::vector<unsigned> digits(dim, 0);
  std::vector<double> point(dim);
  struct Candidate {
    double value;
    std::vector<double> point;
  };
  std::vector<Candidate> top;
  const std::size_t keep = config.restarts;
  auto offer_top = [&](double v, const std::vector<double>& p) {
    if (v == -std::numeric_limits<double>::infinity()) return;
    if (top.size() < keep || v > top.back().value) {
      top.push_back({v, p});
      std::sort(top.begin(), top.end(), [](const auto& a, const auto& b) {
        if (a.value != b.value) return a.value > b.value;
        return lex_less(a.point, b.point);
      });
      if (top.size() > keep) top.pop_back();
    }
  };

  bool done = false;
  while (!done) {
    for (std::size_t i = 0; i < dim; ++i) {
      point[i] = digits[i] + 1 == g ? hi[i] : lo[i] + digits[i] * axis_step[i];
    }
    const double v = objective(point);
    ++trace.grid_evaluations;
    best.offer(v, point);
    offer_top(v, point);
    // Odometer increment.
    std::size_t i = dim;
    done = true;
    while (i-- > 0) {
      if (++digits[i] < g) {
        done = false;
        break;
      }
      digits[i] = 0;
    }
  }
  trace.best_grid_value = best.value;

  // Ascent starts: the kept grid points, seeded random points and any
  // caller-provided points.
  std::vector<std::vector<double>> starts;
  for (const auto& c : top) starts.push_back(c.point);
  std::mt19937_64 rng(config.seed);
  auto uniform01 = [&rng] { return double(rng() >> 11) * 0x1.0p-53; };
  for (unsigned r = 0; r < config.restarts; ++r) {
    std::vector<double> p(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      p[i] = lo[i] + (hi[i] - lo[i]) * uniform01();
    }
    starts.push_back(std::move(p));
  }
  for (const auto& p : extra_starts) {
    if (p.size() != dim) {
      throw argument_error("extra start has the wrong dimension");
    }
    starts.push_back(p);
  }

  std::vector<double> cand(dim);
  for (auto& start : starts) {
    // Clamp into the box.
    for (std::size_t i = 0; i < dim; ++i) {
      start[i] = std::clamp(start[i], lo[i], hi[i]);
    }
    double value = objective(start);
    ++trace.ascent_evaluations;
    std::vector<double> cur = start;
    std::vector<double> step(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      step[i] = std::max(axis_step[i] * 0.5, config.step_floor);
    }
    for (unsigned sweep = 0; sweep < config.max_iterations; ++sweep) {
      bool improved = false;
      for (std::size_t i = 0; i < dim; ++i) {
        if (hi[i] == lo[i]) continue;
        for (double dir : {+1.0, -1.0}) {
          cand = cur;
          cand[i] = std::clamp(cur[i] + dir * step[i], lo[i], hi[i]);
          if (cand[i] == cur[i]) continue;
          const double v = objective(cand);
          ++trace.ascent_evaluations;
          if (v > value) {
            value = v;
            cur = cand;
            improved = true;
          }
        }
      }
      if (!improved) {
        bool any_live = false;
        for (std::size_t i = 0; i < dim; ++i) {
          step[i] *= 0.5;
          if (step[i] >= config.step_floor) any_live = true;
        }
        if (!any_live) break;
      }
    }
    best.offer(value, cur);
  }

  if (best.point.empty() ||
      best.value == -std::numeric_limits<double>::infinity()) {
    throw numeric_error("objective was infeasible on the whole box");
  }
  return BoxSearchResult{best.value, best.point, trace};
}

}  // namespace relaysec
