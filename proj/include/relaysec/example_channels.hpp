#pragma once

#include <string>

#include "relaysec/dmc_channel.hpp"

namespace relaysec {

/// A canonical deterministic channel together with the single-letter
/// randomization scheme extracted from its achievability argument and the
/// secrecy rate that scheme attains.
struct ExampleChannel {
  std::string name;
  OrthogonalDmc channel;
  AuxiliaryScheme scheme;
  double expected_rate_bits = 0.0;
};

/// The three canonical example channels (ids 1..3), with expected secrecy
/// rates 1.0, 2.0 and 2.0 bits per channel use.
ExampleChannel example_channel(int id);

}  // namespace relaysec
