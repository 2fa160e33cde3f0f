#include "relaysec/example_channels.hpp"

#include <vector>

#include "relaysec/errors.hpp"

namespace relaysec {

namespace {

// Pair-of-bits symbols are flattened as (a, b) -> 2a + b.
std::size_t pair(std::size_t a, std::size_t b) { return 2 * a + b; }

ExampleChannel make_example1() {
  const FiniteAlphabet bin(2);
  // Y_1 = X_R, Y_21 = X_R.
  std::vector<std::size_t> relay_map(4);
  for (std::size_t xr = 0; xr < 2; ++xr)
    for (std::size_t x2 = 0; x2 < 2; ++x2)
      relay_map[xr * 2 + x2] = xr * 2 + xr;
  ConditionalPmf relay =
      deterministic_conditional({bin, bin}, {bin, bin}, relay_map);
  // Y = X_D * X_2, Y_22 = 1{X_D <= X_2}.
  std::vector<std::size_t> dest_map(4);
  for (std::size_t xd = 0; xd < 2; ++xd)
    for (std::size_t x2 = 0; x2 < 2; ++x2) {
      const std::size_t y = xd * x2;
      const std::size_t y22 = xd <= x2 ? 1 : 0;
      dest_map[xd * 2 + x2] = y * 2 + y22;
    }
  ConditionalPmf dest =
      deterministic_conditional({bin, bin}, {bin, bin}, dest_map);
  OrthogonalDmc channel(bin, bin, bin, bin, bin, bin, bin, std::move(relay),
                        std::move(dest), EavesdropperCase::case3);

  // Scheme: X_R = 0, X_D = V_D (a fair message bit), X_2 = 1.
  const FiniteAlphabet one(1);
  ConditionalPmf v_u({one}, {one, bin, one}, {0.5, 0.5});
  // prefix maps (v_r, v_d, v_2) -> (x_r = 0, x_d = v_d, x_2 = 1)
  std::vector<std::size_t> prefix_map(2);
  for (std::size_t vd = 0; vd < 2; ++vd) {
    prefix_map[vd] = (0 * 2 + vd) * 2 + 1;
  }
  ConditionalPmf prefix = deterministic_conditional(
      {one, bin, one}, {bin, bin, bin}, prefix_map);
  AuxiliaryScheme scheme(one, one, bin, one, {1.0}, std::move(v_u),
                         std::move(prefix));
  return ExampleChannel{"example 1", std::move(channel), std::move(scheme),
                        1.0};
}

ExampleChannel make_example2() {
  const FiniteAlphabet quad(4);
  // Y_1 = X_R, Y_21 = X_R.
  std::vector<std::size_t> relay_map(16);
  for (std::size_t xr = 0; xr < 4; ++xr)
    for (std::size_t x2 = 0; x2 < 4; ++x2)
      relay_map[xr * 4 + x2] = xr * 4 + xr;
  ConditionalPmf relay =
      deterministic_conditional({quad, quad}, {quad, quad}, relay_map);
  // X_D = (a_D, b_D), X_2 = (a_1, b_1):
  //   Y = (a_D, b_D xor a_1), Y_22 = (a_1, b_1 xor a_D).
  std::vector<std::size_t> dest_map(16);
  for (std::size_t ad = 0; ad < 2; ++ad)
    for (std::size_t bd = 0; bd < 2; ++bd)
      for (std::size_t a1 = 0; a1 < 2; ++a1)
        for (std::size_t b1 = 0; b1 < 2; ++b1) {
          const std::size_t y = pair(ad, bd ^ a1);
          const std::size_t y22 = pair(a1, b1 ^ ad);
          dest_map[pair(ad, bd) * 4 + pair(a1, b1)] = y * 4 + y22;
        }
  ConditionalPmf dest =
      deterministic_conditional({quad, quad}, {quad, quad}, dest_map);
  OrthogonalDmc channel(quad, quad, quad, quad, quad, quad, quad,
                        std::move(relay), std::move(dest),
                        EavesdropperCase::case3);

  // Scheme: X_R = (0,0), X_D = V_D uniform over 4 values, X_2 = (0, n) with
  // n a fair coin generated in the prefix.
  const FiniteAlphabet one(1);
  ConditionalPmf v_u({one}, {one, quad, one}, {0.25, 0.25, 0.25, 0.25});
  std::vector<double> prefix_table(4 * 64, 0.0);
  for (std::size_t vd = 0; vd < 4; ++vd) {
    for (std::size_t n = 0; n < 2; ++n) {
      const std::size_t x = (0 * 4 + vd) * 4 + pair(0, n);
      prefix_table[vd * 64 + x] = 0.5;
    }
  }
  ConditionalPmf prefix({one, quad, one}, {quad, quad, quad},
                        std::move(prefix_table));
  AuxiliaryScheme scheme(one, one, quad, one, {1.0}, std::move(v_u),
                         std::move(prefix));
  return ExampleChannel{"example 2", std::move(channel), std::move(scheme),
                        2.0};
}

ExampleChannel make_example3() {
  const FiniteAlphabet quad(4);
  const FiniteAlphabet bin(2);
  // X_R = (a_R, b_R): Y_1 = X_R, Y_21 = b_R.
  std::vector<std::size_t> relay_map(16);
  for (std::size_t xr = 0; xr < 4; ++xr)
    for (std::size_t x2 = 0; x2 < 4; ++x2) {
      const std::size_t br = xr % 2;
      relay_map[xr * 4 + x2] = xr * 2 + br;
    }
  ConditionalPmf relay =
      deterministic_conditional({quad, quad}, {quad, bin}, relay_map);
  // X_D = a_D, X_2 = (a_1, b_1): Y = (a_1, a_D), Y_22 = b_1 xor a_D.
  std::vector<std::size_t> dest_map(8);
  for (std::size_t ad = 0; ad < 2; ++ad)
    for (std::size_t a1 = 0; a1 < 2; ++a1)
      for (std::size_t b1 = 0; b1 < 2; ++b1) {
        const std::size_t y = pair(a1, ad);
        const std::size_t y22 = b1 ^ ad;
        dest_map[ad * 4 + pair(a1, b1)] = y * 2 + y22;
      }
  ConditionalPmf dest =
      deterministic_conditional({bin, quad}, {quad, bin}, dest_map);
  OrthogonalDmc channel(quad, bin, quad, quad, quad, bin, bin,
                        std::move(relay), std::move(dest),
                        EavesdropperCase::case3);

  // Steady-state single-letter scheme: V_R carries the fresh message bit
  // sent on the relay channel, V_D the direct bit, V_2 the message part the
  // relay decoded one block earlier (uniform and independent in steady
  // state). The prefix emits X_R = (v_R, 0), X_D = v_D and X_2 = (v_2, n)
  // with a fresh fair bit n.
  const FiniteAlphabet one(1);
  std::vector<double> v_table(8, 1.0 / 8.0);
  ConditionalPmf v_u({one}, {bin, bin, bin}, std::move(v_table));
  std::vector<double> prefix_table(8 * (4 * 2 * 4), 0.0);
  for (std::size_t vr = 0; vr < 2; ++vr)
    for (std::size_t vd = 0; vd < 2; ++vd)
      for (std::size_t v2 = 0; v2 < 2; ++v2)
        for (std::size_t n = 0; n < 2; ++n) {
          const std::size_t xr = pair(vr, 0);
          const std::size_t x2 = pair(v2, n);
          const std::size_t x = (xr * 2 + vd) * 4 + x2;
          prefix_table[((vr * 2 + vd) * 2 + v2) * 32 + x] = 0.5;
        }
  ConditionalPmf prefix({bin, bin, bin}, {quad, bin, quad},
                        std::move(prefix_table));
  AuxiliaryScheme scheme(one, bin, bin, bin, {1.0}, std::move(v_u),
                         std::move(prefix));
  return ExampleChannel{"example 3", std::move(channel), std::move(scheme),
                        2.0};
}

}  // namespace

ExampleChannel example_channel(int id) {
  switch (id) {
    case 1: return make_example1();
    case 2: return make_example2();
    case 3: return make_example3();
    default:
      throw argument_error("example id must be 1, 2 or 3 (got " +
                           std::to_string(id) + ")");
  }
}

}  // namespace relaysec
