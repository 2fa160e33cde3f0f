#include "relaysec/report.hpp"

#include <cstdio>

#include "relaysec/errors.hpp"

namespace relaysec {

namespace {

constexpr double kSandwichTolerance = 1e-6;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

// Full precision so a report file re-parses to the identical channel.
std::string gain(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

void RateReport::check_invariants() const {
  for (const auto& e : entries) {
    if (e.pdf_inner > e.genie_outer + kSandwichTolerance ||
        e.nf_inner > e.genie_outer + kSandwichTolerance) {
      throw numeric_error("report invariant violated: inner bound above "
                          "outer bound for " +
                          to_string(e.ecase));
    }
  }
}

std::string render_report(const RateReport& report) {
  std::string out;
  out += "[report]\n";
  out += "command = evaluate\n";
  out += "seed = " + std::to_string(report.config.seed) + "\n";
  out += "grid = " + std::to_string(report.config.grid_points) + "\n";
  out += "restarts = " + std::to_string(report.config.restarts) + "\n";
  out += "\n[channel]\n";
  out += "h_sr = " + gain(report.channel.h_sr) + "\n";
  out += "h_sd = " + gain(report.channel.h_sd) + "\n";
  out += "h_rd = " + gain(report.channel.h_rd) + "\n";
  out += "h_se1 = " + gain(report.channel.h_se1) + "\n";
  out += "h_se2 = " + gain(report.channel.h_se2) + "\n";
  out += "h_re = " + gain(report.channel.h_re) + "\n";
  out += "\n[powers]\n";
  out += "p_r = " + gain(report.channel.power_r) + "\n";
  out += "p_d = " + gain(report.channel.power_d) + "\n";
  out += "p_2 = " + gain(report.channel.power_2) + "\n";
  if (report.echo_eavesdropper_section) {
    out += "\n[eavesdropper]\n";
    out += std::string("channel1 = ") +
           (report.channel.eave_channel1 ? "true" : "false") + "\n";
    out += std::string("channel2 = ") +
           (report.channel.eave_channel2 ? "true" : "false") + "\n";
  }
  if (report.no_active_eavesdropper) {
    out += "\n# no active eavesdropper: secrecy bounds omitted\n";
    out += "# no-secrecy relay capacity = " +
           num(report.no_secrecy_capacity) + "\n";
    return out;
  }
  for (const auto& e : report.entries) {
    out += "\n[" + to_string(e.ecase) + "]\n";
    out += "pdf_inner = " + num(e.pdf_inner) + "\n";
    out += "nf_inner = " + num(e.nf_inner) + "\n";
    if (e.nf_extrapolated) {
      out += "nf_note = template-extrapolation\n";
    }
    out += "genie_outer = " + num(e.genie_outer) + "\n";
    out += "wiretap_baseline = " + num(e.wiretap_baseline) + "\n";
    out += "no_secrecy_capacity = " + num(e.no_secrecy_capacity) + "\n";
  }
  return out;
}

}  // namespace relaysec
