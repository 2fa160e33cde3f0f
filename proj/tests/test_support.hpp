#pragma once

// Shared helpers for the test suites: a deterministic RNG (the mt19937_64
// engine is pinned by the standard, the distributions are not, so raw bits
// are converted by hand) and random instance generators.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "relaysec/info_measures.hpp"

namespace testsup {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // [0, 1)
    return double(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t bits() { return engine_(); }
  std::size_t index(std::size_t n) { return std::size_t(engine_() % n); }
  double normal() {
    // Box-Muller; second value discarded for simplicity.
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::mt19937_64 engine_;
};

// Dirichlet(1) sample: exponentials normalized.
inline std::vector<double> random_simplex(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  double sum = 0.0;
  for (auto& x : v) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    x = -std::log(u);
    sum += x;
  }
  for (auto& x : v) x /= sum;
  return v;
}

inline relaysec::JointPmf random_pmf(
    Rng& rng, std::vector<relaysec::FiniteAlphabet> axes) {
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.size;
  return relaysec::JointPmf(std::move(axes), random_simplex(rng, n));
}

}  // namespace testsup

#include "relaysec/dmc_channel.hpp"

namespace testsup {

inline relaysec::ConditionalPmf random_conditional(
    Rng& rng, std::vector<relaysec::FiniteAlphabet> inputs,
    std::vector<relaysec::FiniteAlphabet> outputs) {
  std::size_t nin = 1, nout = 1;
  for (const auto& a : inputs) nin *= a.size;
  for (const auto& a : outputs) nout *= a.size;
  std::vector<double> table(nin * nout);
  for (std::size_t in = 0; in < nin; ++in) {
    const auto row = random_simplex(rng, nout);
    std::copy(row.begin(), row.end(), table.begin() + in * nout);
  }
  return relaysec::ConditionalPmf(std::move(inputs), std::move(outputs),
                                  std::move(table));
}

// Product of two random conditionals p(a|in) * q(b), for the factorized
// kernels that case-1/case-2 channels require.
inline relaysec::ConditionalPmf random_factorized_conditional(
    Rng& rng, std::vector<relaysec::FiniteAlphabet> inputs,
    const relaysec::FiniteAlphabet& out_a,
    const relaysec::FiniteAlphabet& out_b) {
  std::size_t nin = 1;
  for (const auto& a : inputs) nin *= a.size;
  const auto q = random_simplex(rng, out_b.size);
  std::vector<double> table(nin * out_a.size * out_b.size);
  for (std::size_t in = 0; in < nin; ++in) {
    const auto pa = random_simplex(rng, out_a.size);
    for (std::size_t a = 0; a < out_a.size; ++a)
      for (std::size_t b = 0; b < out_b.size; ++b)
        table[(in * out_a.size + a) * out_b.size + b] = pa[a] * q[b];
  }
  return relaysec::ConditionalPmf(std::move(inputs), {out_a, out_b},
                                  std::move(table));
}

/// Random orthogonal relay-eavesdropper channel with the case-appropriate
/// kernel factorization and alphabet sizes in [2, max_size].
inline relaysec::OrthogonalDmc random_dmc(Rng& rng,
                                          relaysec::EavesdropperCase ecase,
                                          std::size_t max_size = 3) {
  using relaysec::EavesdropperCase;
  using relaysec::FiniteAlphabet;
  auto sz = [&] { return FiniteAlphabet(2 + rng.index(max_size - 1)); };
  FiniteAlphabet xr = sz(), xd = sz(), x2 = sz();
  FiniteAlphabet y1 = sz(), y = sz(), y21 = sz(), y22 = sz();
  relaysec::ConditionalPmf relay =
      ecase == EavesdropperCase::case2
          ? random_factorized_conditional(rng, {xr, x2}, y1, y21)
          : random_conditional(rng, {xr, x2}, {y1, y21});
  relaysec::ConditionalPmf dest =
      ecase == EavesdropperCase::case1
          ? random_factorized_conditional(rng, {xd, x2}, y, y22)
          : random_conditional(rng, {xd, x2}, {y, y22});
  return relaysec::OrthogonalDmc(xr, xd, x2, y1, y, y21, y22,
                                 std::move(relay), std::move(dest), ecase);
}

/// Random auxiliary scheme compatible with the channel, auxiliary
/// cardinalities in [1, 3].
inline relaysec::AuxiliaryScheme random_scheme(
    Rng& rng, const relaysec::OrthogonalDmc& ch) {
  using relaysec::FiniteAlphabet;
  FiniteAlphabet u(1 + rng.index(3));
  FiniteAlphabet vr(1 + rng.index(3));
  FiniteAlphabet vd(1 + rng.index(3));
  FiniteAlphabet v2(1 + rng.index(3));
  auto pu = random_simplex(rng, u.size);
  auto v_u = random_conditional(rng, {u}, {vr, vd, v2});
  auto prefix =
      random_conditional(rng, {vr, vd, v2}, {ch.x_r, ch.x_d, ch.x_2});
  return relaysec::AuxiliaryScheme(u, vr, vd, v2, std::move(pu),
                                   std::move(v_u), std::move(prefix));
}

}  // namespace testsup
