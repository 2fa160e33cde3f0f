#include "relaysec/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "relaysec/errors.hpp"
#include "relaysec/gaussian_rates.hpp"

namespace relaysec {

namespace {

constexpr double kCoincidenceEps = 1e-12;
constexpr double kNudge = 1e-3;

double link_gain(const Eigen::Vector2d& from, const Eigen::Vector2d& to,
                 double alpha) {
  const double d = (to - from).norm();
  if (d < kCoincidenceEps) {
    throw argument_error("degenerate geometry: transmitter and receiver "
                         "coincide");
  }
  return 1.0 / std::pow(d, alpha / 2.0);
}

std::string format_rate(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

}  // namespace

GaussianOrthogonalChannel gains_from_geometry(const Geometry& g) {
  if (g.alpha <= 0.0) {
    throw argument_error("path-loss exponent must be positive");
  }
  GaussianOrthogonalChannel ch;
  ch.h_sr = link_gain(g.source, g.relay, g.alpha);
  ch.h_sd = link_gain(g.source, g.destination, g.alpha);
  ch.h_rd = link_gain(g.relay, g.destination, g.alpha);
  ch.h_se1 = link_gain(g.source, g.eavesdropper, g.alpha);
  ch.h_se2 = ch.h_se1;
  ch.h_re = link_gain(g.relay, g.eavesdropper, g.alpha);
  ch.power_r = g.power_r;
  ch.power_d = g.power_d;
  ch.power_2 = g.power_2;
  ch.validate();
  return ch;
}

SweepResult sweep_relay_position(const Geometry& base,
                                 const Eigen::Vector2d& from,
                                 const Eigen::Vector2d& to,
                                 std::size_t samples,
                                 std::span<const EavesdropperCase> cases,
                                 const SearchConfig& config) {
  if (samples < 2) throw argument_error("sweep needs at least 2 samples");
  if (cases.empty()) throw argument_error("sweep needs at least one case");
  config.validate();

  SweepResult result;
  result.config = config;
  Eigen::Vector2d dir = to - from;
  if (dir.norm() < kCoincidenceEps) {
    dir = Eigen::Vector2d(1.0, 0.0);
  } else {
    dir.normalize();
  }

  for (std::size_t i = 0; i < samples; ++i) {
    const double t = double(i) / double(samples - 1);
    Eigen::Vector2d pos = from + t * (to - from);
    for (const auto& node :
         {base.source, base.destination, base.eavesdropper}) {
      if ((pos - node).norm() < kCoincidenceEps) {
        pos += kNudge * dir;
        result.notes.push_back("sample " + std::to_string(i) +
                               " offset by 1e-3 along the path to avoid a "
                               "coincident node");
        break;
      }
    }

    Geometry g = base;
    g.relay = pos;
    bool degenerate = false;
    GaussianOrthogonalChannel gains;
    try {
      gains = gains_from_geometry(g);
    } catch (const argument_error&) {
      degenerate = true;
      result.notes.push_back("sample " + std::to_string(i) +
                             " skipped: degenerate geometry");
    }

    for (const EavesdropperCase ecase : cases) {
      SweepRow row;
      row.relay_x = pos.x();
      row.relay_y = pos.y();
      row.ecase = ecase;
      if (degenerate) {
        row.degenerate = true;
        row.pdf_inner = row.nf_inner = row.genie_outer =
            row.wiretap_baseline = std::numeric_limits<double>::quiet_NaN();
      } else {
        const GaussianOrthogonalChannel ch = gains.with_case(ecase);
        const BoundResult pdf =
            optimize_bound(ch, SecrecyBound::pdf_inner, config);
        // Seed the genie search with the inner argmax so the sandwich
        // invariant cannot fail through under-maximization alone.
        const CovarianceParams seeds[] = {pdf.params};
        const BoundResult outer =
            optimize_bound(ch, SecrecyBound::genie_outer, config, seeds);
        const BoundResult nf =
            optimize_bound(ch, SecrecyBound::nf_inner, config);
        row.pdf_inner = pdf.value;
        row.nf_inner = nf.value;
        row.genie_outer = outer.value;
        row.wiretap_baseline = wiretap_baseline(ch);
      }
      result.rows.push_back(row);
    }
  }
  return result;
}

std::string render_table(const SweepResult& result) {
  std::string out =
      "relay_x,relay_y,case,pdf_inner,nf_inner,genie_outer,wiretap_baseline\n";
  for (const auto& row : result.rows) {
    out += format_rate(row.relay_x);
    out += ',';
    out += format_rate(row.relay_y);
    out += ',';
    out += to_string(row.ecase);
    out += ',';
    out += format_rate(row.pdf_inner);
    out += ',';
    out += format_rate(row.nf_inner);
    out += ',';
    out += format_rate(row.genie_outer);
    out += ',';
    out += format_rate(row.wiretap_baseline);
    out += '\n';
  }
  return out;
}

void emit_table(const SweepResult& result,
                const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary);
  if (!out) {
    throw io_error("cannot open output file: " + destination.string());
  }
  out << render_table(result);
  out.flush();
  if (!out) {
    throw io_error("failed writing output file: " + destination.string());
  }
}

}  // namespace relaysec
