#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relaysec/box_search.hpp"
#include "relaysec/gaussian_channel.hpp"

namespace relaysec {

struct CaseRates {
  EavesdropperCase ecase = EavesdropperCase::case1;
  double pdf_inner = 0.0;
  double nf_inner = 0.0;
  double genie_outer = 0.0;
  double wiretap_baseline = 0.0;
  double no_secrecy_capacity = 0.0;
  bool nf_extrapolated = false;  // case-1 noise forwarding has no formula
};

/// Per-case record of the optimized bounds together with the channel and
/// optimizer metadata needed to regenerate it.
struct RateReport {
  GaussianOrthogonalChannel channel;
  SearchConfig config;
  std::vector<CaseRates> entries;
  bool echo_eavesdropper_section = false;
  bool no_active_eavesdropper = false;
  double no_secrecy_capacity = 0.0;

  /// Throws when an inner bound exceeds its outer bound beyond 1e-6.
  void check_invariants() const;
};

/// Config-style text: a [report] section with the optimizer metadata, the
/// input sections echoed back, and one [caseN] section per entry with rates
/// to six decimal digits. The text parses as a config that regenerates the
/// same report.
std::string render_report(const RateReport& report);

}  // namespace relaysec
