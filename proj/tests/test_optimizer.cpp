#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "relaysec/errors.hpp"
#include "relaysec/gaussian_rates.hpp"
#include "relaysec/optimizer.hpp"
#include "test_support.hpp"

using namespace relaysec;
using testsup::Rng;

namespace {

GaussianOrthogonalChannel unit_boxes() {
  GaussianOrthogonalChannel ch;
  ch.power_r = ch.power_d = ch.power_2 = 1.0;
  return ch;
}

}  // namespace

TEST_CASE("to_covariance") {
  const GaussianOrthogonalChannel ch = unit_boxes();
  // Diagonal params are always feasible.
  const InputCovariance diag =
      to_covariance(CovarianceParams{0.3, 0.4, 0.5, 0, 0, 0}, ch);
  CHECK(diag.matrix()(0, 0) == doctest::Approx(0.3));
  CHECK(diag.matrix()(0, 1) == 0.0);

  // Fully correlated equal variances: rank one, feasible.
  CHECK_NOTHROW(to_covariance(CovarianceParams{1, 1, 1, 1, 1, 1}, ch));

  // An impossible correlation pattern is rejected with its eigenvalue.
  try {
    to_covariance(CovarianceParams{1, 1, 1, 0.9, 0.9, -0.9}, ch);
    CHECK(false);
  } catch (const infeasible_error& e) {
    CHECK(e.min_eigenvalue() < 0.0);
  }

  // Box violations are argument errors.
  CHECK_THROWS_AS(to_covariance(CovarianceParams{1.5, 0, 0, 0, 0, 0}, ch),
                  argument_error);
  CHECK_THROWS_AS(to_covariance(CovarianceParams{1, 0, 0, 2, 0, 0}, ch),
                  argument_error);
}

TEST_CASE("maximize on simple objectives") {
  const GaussianOrthogonalChannel ch = unit_boxes();
  SearchConfig cfg;
  cfg.grid_points = 5;
  cfg.restarts = 4;

  const auto constant = [](const CovarianceParams&) { return 2.5; };
  CHECK(maximize(constant, ch, cfg).value == 2.5);

  const auto linear = [](const CovarianceParams& p) { return p.var_d; };
  const MaximizeResult r = maximize(linear, ch, cfg);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.params.var_d == doctest::Approx(1.0).epsilon(1e-12));

  // Case-1 genie objective: coherent combining at rho_d2 -> 1.
  GaussianOrthogonalChannel genie_ch = unit_boxes();
  genie_ch.h_sd = 1.0;
  genie_ch.h_rd = 1.0;
  genie_ch.eave_channel1 = true;
  const auto genie = [&](const CovarianceParams& p) {
    try {
      return genie_outer_rate(genie_ch, to_covariance(p, genie_ch));
    } catch (const infeasible_error&) {
      return -1.0;
    }
  };
  SearchConfig cfg11;
  const MaximizeResult g = maximize(genie, genie_ch, cfg11);
  CHECK(std::abs(g.value - 0.5 * std::log2(5.0)) < 1e-4);
}

TEST_CASE("maximize is deterministic and monotone in the grid") {
  GaussianOrthogonalChannel ch = unit_boxes();
  ch.h_sd = 1.0;
  ch.h_rd = 0.7;
  ch.h_se2 = 0.4;
  ch.h_re = 0.9;
  ch.eave_channel2 = true;
  const auto objective = [&](const CovarianceParams& p) {
    try {
      return pdf_inner_rate(ch, to_covariance(p, ch));
    } catch (const infeasible_error&) {
      return -1.0;
    }
  };
  SearchConfig cfg;
  cfg.grid_points = 5;
  cfg.restarts = 6;
  cfg.seed = 17;
  const MaximizeResult a = maximize(objective, ch, cfg);
  const MaximizeResult b = maximize(objective, ch, cfg);
  CHECK(a.value == b.value);
  CHECK(a.params.to_array() == b.params.to_array());
  CHECK(a.value >= a.trace.best_grid_value);

  // Halving the step (nested grid) never loses value.
  SearchConfig finer = cfg;
  finer.grid_points = 9;
  const MaximizeResult c = maximize(objective, ch, finer);
  CHECK(c.value >= a.value - 1e-9);
}

TEST_CASE("optimize_bound dispatch") {
  // Deaf-relay instance: noise forwarding matches the dedicated search.
  GaussianOrthogonalChannel deaf = unit_boxes();
  deaf.h_sd = 1.0;
  deaf.h_rd = 1.0;
  deaf.h_se2 = 0.5;
  deaf.h_re = 1.0;
  deaf.eave_channel2 = true;
  SearchConfig cfg;
  const BoundResult nf = optimize_bound(deaf, SecrecyBound::nf_inner, cfg);
  CHECK(nf.value >= 0.5 * std::log2(4.0 / 3.0) - 1e-12);
  const DeafRelayResult direct = deaf_relay_capacity(deaf, cfg);
  CHECK(nf.value == direct.rate);
  CHECK(nf.nf_power_d == direct.p_d);
  CHECK(nf.nf_power_2 == direct.p_2);

  // Case-2 and case-3 genie bounds agree after optimization.
  Rng rng(2718);
  for (int trial = 0; trial < 5; ++trial) {
    GaussianOrthogonalChannel ch = unit_boxes();
    ch.h_sd = rng.uniform(0.2, 1.5);
    ch.h_rd = rng.uniform(0.0, 1.5);
    ch.h_se1 = rng.uniform(0.0, 1.5);
    ch.h_se2 = rng.uniform(0.0, 1.5);
    ch.h_re = rng.uniform(0.0, 1.5);
    const BoundResult o2 = optimize_bound(
        ch.with_case(EavesdropperCase::case2), SecrecyBound::genie_outer, cfg);
    const BoundResult o3 = optimize_bound(
        ch.with_case(EavesdropperCase::case3), SecrecyBound::genie_outer, cfg);
    CHECK(std::abs(o2.value - o3.value) < 1e-6);
  }

  // pdf_inner with no eavesdropper gains approaches the optimized
  // no-eavesdropper capacity expression.
  GaussianOrthogonalChannel open_ch = unit_boxes();
  open_ch.h_sd = 1.0;
  open_ch.h_rd = 1.0;
  open_ch.h_sr = 100.0;
  open_ch.eave_channel2 = true;  // flag set, taps have zero gain
  const BoundResult pdf =
      optimize_bound(open_ch, SecrecyBound::pdf_inner, cfg);
  // Oracle: the capacity expression maximized over the X_D/X_2 correlation
  // at full powers (h_sr is large enough that the relay link never binds).
  double oracle = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double rho = -1.0 + 2.0 * i / 1000.0;
    const CovarianceParams p{1.0, 1.0, 1.0, 0.0, 0.0, rho};
    try {
      oracle = std::max(
          oracle, relay_capacity_rate(open_ch, to_covariance(p, open_ch)));
    } catch (const infeasible_error&) {
    }
  }
  CHECK(pdf.value == doctest::Approx(oracle).epsilon(5e-3));
  const BoundResult cap =
      optimize_bound(open_ch, SecrecyBound::relay_capacity, cfg);
  CHECK(cap.value >= oracle - 1e-9);
  CHECK(pdf.value <= cap.value + 1e-9);

  // Requesting a secrecy bound with no flags set is an error.
  GaussianOrthogonalChannel none = unit_boxes();
  CHECK_THROWS_AS(optimize_bound(none, SecrecyBound::pdf_inner, cfg),
                  argument_error);
  CHECK_NOTHROW(optimize_bound(none, SecrecyBound::relay_capacity, cfg));
}

TEST_CASE("every returned point is feasible") {
  Rng rng(55);
  SearchConfig cfg;
  cfg.grid_points = 5;
  cfg.restarts = 5;
  for (int trial = 0; trial < 6; ++trial) {
    GaussianOrthogonalChannel ch = unit_boxes();
    ch.h_sd = rng.uniform(0.2, 1.5);
    ch.h_rd = rng.uniform(0.0, 1.5);
    ch.h_sr = rng.uniform(0.0, 2.0);
    ch.h_se2 = rng.uniform(0.0, 1.5);
    ch.h_re = rng.uniform(0.0, 1.5);
    ch.eave_channel2 = true;
    const BoundResult pdf = optimize_bound(ch, SecrecyBound::pdf_inner, cfg);
    const InputCovariance k = to_covariance(pdf.params, ch);  // must not throw
    CHECK(pdf_inner_rate(ch, k) == doctest::Approx(pdf.value).epsilon(1e-12));
  }
}
