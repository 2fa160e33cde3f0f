#include "relaysec/dmc_rates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "relaysec/errors.hpp"

namespace relaysec {

namespace {

constexpr double kNegativeMiClamp = 1e-10;
constexpr std::size_t kMaxInputCells = 64;
constexpr std::size_t kExhaustiveBudget = 1'000'000;
constexpr std::size_t kGridSampleCount = 60'000;
constexpr std::uint64_t kGridSampleSeed = 0x9e3779b97f4a7c15ull;
constexpr unsigned kRefineRestarts = 20;
constexpr double kRefineStepFloor = 1e-6;
constexpr unsigned kRefineMaxSweeps = 500;

double table_entropy(std::span<const double> table) {
  double h = 0.0;
  for (double p : table) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h < 0.0 ? 0.0 : h;
}

double positive_part(double x) { return x > 0.0 ? x : 0.0; }

// Guard for individual information terms, which are non-negative up to
// rounding; the final rate expressions instead pass through the max(x, 0)
// convention via positive_part.
double clamp_rate(double mi, const char* what) {
  if (mi < 0.0) {
    if (mi < -kNegativeMiClamp) {
      throw numeric_error(std::string(what) + " evaluated to " +
                          std::to_string(mi));
    }
    return 0.0;
  }
  return mi;
}

void require_input_match(const OrthogonalDmc& ch, const JointPmf& input) {
  if (input.rank() != 3 || input.axis_size(0) != ch.x_r.size ||
      input.axis_size(1) != ch.x_d.size || input.axis_size(2) != ch.x_2.size) {
    throw argument_error("input pmf axes must match (X_R, X_D, X_2)");
  }
}

// Evaluates the PDF rate expressions from reduced marginals of the
// input joint; all tables are preallocated so grid searches stay cheap.
class PdfEvaluator {
 public:
  explicit PdfEvaluator(const OrthogonalDmc& ch)
      : case_(ch.eavesdropper_case),
        nr_(ch.x_r.size),
        nd_(ch.x_d.size),
        n2_(ch.x_2.size),
        ny1_(ch.y_1.size),
        ny_(ch.y.size),
        n21_(ch.y_21.size),
        n22_(ch.y_22.size) {
    // Output marginals of the two kernels.
    k1_y1_.assign(nr_ * n2_ * ny1_, 0.0);
    k1_y21_.assign(nr_ * n2_ * n21_, 0.0);
    for (std::size_t xr = 0; xr < nr_; ++xr) {
      for (std::size_t x2 = 0; x2 < n2_; ++x2) {
        const auto slice = ch.relay_kernel.slice(xr * n2_ + x2);
        for (std::size_t y1 = 0; y1 < ny1_; ++y1) {
          for (std::size_t y21 = 0; y21 < n21_; ++y21) {
            const double p = slice[y1 * n21_ + y21];
            k1_y1_[(xr * n2_ + x2) * ny1_ + y1] += p;
            k1_y21_[(xr * n2_ + x2) * n21_ + y21] += p;
          }
        }
      }
    }
    k2_y_.assign(nd_ * n2_ * ny_, 0.0);
    k2_y22_.assign(nd_ * n2_ * n22_, 0.0);
    for (std::size_t xd = 0; xd < nd_; ++xd) {
      for (std::size_t x2 = 0; x2 < n2_; ++x2) {
        const auto slice = ch.dest_kernel.slice(xd * n2_ + x2);
        for (std::size_t yy = 0; yy < ny_; ++yy) {
          for (std::size_t y22 = 0; y22 < n22_; ++y22) {
            const double p = slice[yy * n22_ + y22];
            k2_y_[(xd * n2_ + x2) * ny_ + yy] += p;
            k2_y22_[(xd * n2_ + x2) * n22_ + y22] += p;
          }
        }
      }
    }

    t1_.resize(nr_ * nd_ * n2_ * ny1_ * ny_);
    bc1_.resize(n2_ * ny1_ * ny_);
    p2_.resize(n2_);
    pd2_.resize(nd_ * n2_);
    pr2_.resize(nr_ * n2_);
    pr_.resize(nr_);
    t2_.resize(nd_ * n2_ * ny_);
    py_.resize(ny_);
    w_.resize(nr_ * nd_ * n2_ * n21_ * n22_);
    pe_.resize(n21_ * n22_);
    pre_.resize(nr_ * n21_ * n22_);
    p2e_.resize(n2_ * n21_ * n22_);
    pr2e_.resize(nr_ * n2_ * n21_ * n22_);
    pd2e_.resize(nd_ * n2_ * n21_ * n22_);
  }

  std::size_t input_cells() const { return nr_ * nd_ * n2_; }

  // Case-matched PDF secrecy rate, clamped at 0.
  double rate(std::span<const double> input) {
    const double bound = min_term(input);
    double leak = 0.0;
    accumulate_eavesdropper(input);
    switch (case_) {
      case EavesdropperCase::case1:
        leak = mi_r_e();
        break;
      case EavesdropperCase::case2:
        leak = mi_d2_e();
        break;
      case EavesdropperCase::case3:
        leak = mi_r_e_given_2() + mi_d2_e();
        break;
    }
    return positive_part(bound - leak);
  }

  // Relay-channel capacity expression (no eavesdropper).
  double no_eavesdropper_rate(std::span<const double> input) {
    accumulate_main(input);
    // I(X_R; Y_1 | X_2)
    std::vector<double> pr2y1(nr_ * n2_ * ny1_, 0.0);
    std::vector<double> p2y1(n2_ * ny1_, 0.0);
    for (std::size_t xr = 0; xr < nr_; ++xr)
      for (std::size_t x2 = 0; x2 < n2_; ++x2) {
        const double pin = pr2_[xr * n2_ + x2];
        if (pin == 0.0) continue;
        for (std::size_t y1 = 0; y1 < ny1_; ++y1) {
          const double p = pin * k1_y1_[(xr * n2_ + x2) * ny1_ + y1];
          pr2y1[(xr * n2_ + x2) * ny1_ + y1] += p;
          p2y1[x2 * ny1_ + y1] += p;
        }
      }
    const double i_r_y1 =
        clamp_rate(table_entropy(pr2_) + table_entropy(p2y1) -
                       table_entropy(p2_) - table_entropy(pr2y1),
                   "I(X_R;Y_1|X_2)");
    // I(X_D; Y | X_2)
    std::vector<double> p2y(n2_ * ny_, 0.0);
    for (std::size_t xd = 0; xd < nd_; ++xd)
      for (std::size_t x2 = 0; x2 < n2_; ++x2)
        for (std::size_t yy = 0; yy < ny_; ++yy)
          p2y[x2 * ny_ + yy] += t2_[(xd * n2_ + x2) * ny_ + yy];
    const double i_d_y =
        clamp_rate(table_entropy(pd2_) + table_entropy(p2y) -
                       table_entropy(p2_) - table_entropy(t2_),
                   "I(X_D;Y|X_2)");
    // I(X_R X_D X_2; Y): the channel output depends on the inputs only
    // through (X_D, X_2).
    std::vector<double> full(nr_ * nd_ * n2_ * ny_, 0.0);
    for (std::size_t xr = 0; xr < nr_; ++xr)
      for (std::size_t xd = 0; xd < nd_; ++xd)
        for (std::size_t x2 = 0; x2 < n2_; ++x2) {
          const double pin = input[(xr * nd_ + xd) * n2_ + x2];
          if (pin == 0.0) continue;
          for (std::size_t yy = 0; yy < ny_; ++yy)
            full[((xr * nd_ + xd) * n2_ + x2) * ny_ + yy] =
                pin * k2_y_[(xd * n2_ + x2) * ny_ + yy];
        }
    const double h_in = table_entropy(input);
    const double i_all_y = clamp_rate(
        h_in + table_entropy(py_) - table_entropy(full), "I(X_RX_DX_2;Y)");
    return std::min(i_r_y1 + i_d_y, i_all_y);
  }

 private:
  // min{ I(X_D X_R; Y Y_1 | X_2), I(X_D X_2; Y) }
  double min_term(std::span<const double> input) {
    accumulate_main(input);
    std::fill(t1_.begin(), t1_.end(), 0.0);
    std::fill(bc1_.begin(), bc1_.end(), 0.0);
    for (std::size_t xr = 0; xr < nr_; ++xr)
      for (std::size_t xd = 0; xd < nd_; ++xd)
        for (std::size_t x2 = 0; x2 < n2_; ++x2) {
          const double pin = input[(xr * nd_ + xd) * n2_ + x2];
          if (pin == 0.0) continue;
          for (std::size_t y1 = 0; y1 < ny1_; ++y1) {
            const double p1 = pin * k1_y1_[(xr * n2_ + x2) * ny1_ + y1];
            if (p1 == 0.0) continue;
            for (std::size_t yy = 0; yy < ny_; ++yy) {
              const double p = p1 * k2_y_[(xd * n2_ + x2) * ny_ + yy];
              t1_[(((xr * nd_ + xd) * n2_ + x2) * ny1_ + y1) * ny_ + yy] = p;
              bc1_[(x2 * ny1_ + y1) * ny_ + yy] += p;
            }
          }
        }
    const double h_input = table_entropy(input);
    const double i_relay = clamp_rate(
        h_input + table_entropy(bc1_) - table_entropy(p2_) -
            table_entropy(t1_),
        "I(X_DX_R;YY_1|X_2)");
    const double i_dest =
        clamp_rate(table_entropy(pd2_) + table_entropy(py_) -
                       table_entropy(t2_),
                   "I(X_DX_2;Y)");
    return std::min(i_relay, i_dest);
  }

  void accumulate_main(std::span<const double> input) {
    std::fill(p2_.begin(), p2_.end(), 0.0);
    std::fill(pd2_.begin(), pd2_.end(), 0.0);
    std::fill(pr2_.begin(), pr2_.end(), 0.0);
    std::fill(pr_.begin(), pr_.end(), 0.0);
    for (std::size_t xr = 0; xr < nr_; ++xr)
      for (std::size_t xd = 0; xd < nd_; ++xd)
        for (std::size_t x2 = 0; x2 < n2_; ++x2) {
          const double pin = input[(xr * nd_ + xd) * n2_ + x2];
          p2_[x2] += pin;
          pd2_[xd * n2_ + x2] += pin;
          pr2_[xr * n2_ + x2] += pin;
          pr_[xr] += pin;
        }
    std::fill(t2_.begin(), t2_.end(), 0.0);
    std::fill(py_.begin(), py_.end(), 0.0);
    for (std::size_t xd = 0; xd < nd_; ++xd)
      for (std::size_t x2 = 0; x2 < n2_; ++x2) {
        const double pin = pd2_[xd * n2_ + x2];
        if (pin == 0.0) continue;
        for (std::size_t yy = 0; yy < ny_; ++yy) {
          const double p = pin * k2_y_[(xd * n2_ + x2) * ny_ + yy];
          t2_[(xd * n2_ + x2) * ny_ + yy] = p;
          py_[yy] += p;
        }
      }
  }

  void accumulate_eavesdropper(std::span<const double> input) {
    std::fill(w_.begin(), w_.end(), 0.0);
    std::fill(pe_.begin(), pe_.end(), 0.0);
    std::fill(pre_.begin(), pre_.end(), 0.0);
    std::fill(p2e_.begin(), p2e_.end(), 0.0);
    std::fill(pr2e_.begin(), pr2e_.end(), 0.0);
    std::fill(pd2e_.begin(), pd2e_.end(), 0.0);
    for (std::size_t xr = 0; xr < nr_; ++xr)
      for (std::size_t xd = 0; xd < nd_; ++xd)
        for (std::size_t x2 = 0; x2 < n2_; ++x2) {
          const double pin = input[(xr * nd_ + xd) * n2_ + x2];
          if (pin == 0.0) continue;
          for (std::size_t y21 = 0; y21 < n21_; ++y21) {
            const double p1 = pin * k1_y21_[(xr * n2_ + x2) * n21_ + y21];
            if (p1 == 0.0) continue;
            for (std::size_t y22 = 0; y22 < n22_; ++y22) {
              const double p = p1 * k2_y22_[(xd * n2_ + x2) * n22_ + y22];
              const std::size_t e = y21 * n22_ + y22;
              w_[(((xr * nd_ + xd) * n2_ + x2) * n21_ + y21) * n22_ + y22] = p;
              pe_[e] += p;
              pre_[xr * n21_ * n22_ + e] += p;
              p2e_[x2 * n21_ * n22_ + e] += p;
              pr2e_[(xr * n2_ + x2) * n21_ * n22_ + e] += p;
              pd2e_[(xd * n2_ + x2) * n21_ * n22_ + e] += p;
            }
          }
        }
  }

  // I(X_R; Y_21 Y_22)
  double mi_r_e() const {
    return clamp_rate(table_entropy(pr_) + table_entropy(pe_) -
                          table_entropy(pre_),
                      "I(X_R;Y_2)");
  }
  // I(X_D X_2; Y_21 Y_22)
  double mi_d2_e() const {
    return clamp_rate(table_entropy(pd2_) + table_entropy(pe_) -
                          table_entropy(pd2e_),
                      "I(X_DX_2;Y_2)");
  }
  // I(X_R; Y_21 Y_22 | X_2)
  double mi_r_e_given_2() const {
    return clamp_rate(table_entropy(pr2_) + table_entropy(p2e_) -
                          table_entropy(p2_) - table_entropy(pr2e_),
                      "I(X_R;Y_2|X_2)");
  }

  EavesdropperCase case_;
  std::size_t nr_, nd_, n2_, ny1_, ny_, n21_, n22_;
  std::vector<double> k1_y1_, k1_y21_, k2_y_, k2_y22_;
  std::vector<double> t1_, bc1_, p2_, pd2_, pr2_, pr_, t2_, py_;
  std::vector<double> w_, pe_, pre_, p2e_, pr2e_, pd2e_;
};

}  // namespace

JointPmf channel_input_joint(const OrthogonalDmc& ch, const JointPmf& input) {
  require_input_match(ch, input);
  const std::size_t nr = ch.x_r.size, nd = ch.x_d.size, n2 = ch.x_2.size;
  const std::size_t ny1 = ch.y_1.size, ny = ch.y.size;
  const std::size_t n21 = ch.y_21.size, n22 = ch.y_22.size;
  std::vector<double> table(nr * nd * n2 * ny1 * ny * n21 * n22, 0.0);
  std::size_t idx = 0;
  for (std::size_t xr = 0; xr < nr; ++xr)
    for (std::size_t xd = 0; xd < nd; ++xd)
      for (std::size_t x2 = 0; x2 < n2; ++x2) {
        const double pin = input.table()[(xr * nd + xd) * n2 + x2];
        const auto k1 = ch.relay_kernel.slice(xr * n2 + x2);
        const auto k2 = ch.dest_kernel.slice(xd * n2 + x2);
        for (std::size_t y1 = 0; y1 < ny1; ++y1)
          for (std::size_t yy = 0; yy < ny; ++yy)
            for (std::size_t y21 = 0; y21 < n21; ++y21)
              for (std::size_t y22 = 0; y22 < n22; ++y22) {
                table[idx++] =
                    pin * k1[y1 * n21 + y21] * k2[yy * n22 + y22];
              }
      }
  return make_joint_pmf_unchecked(
      {ch.x_r, ch.x_d, ch.x_2, ch.y_1, ch.y, ch.y_21, ch.y_22},
      std::move(table));
}

double pdf_inner_bound(const OrthogonalDmc& ch, const JointPmf& input) {
  require_input_match(ch, input);
  PdfEvaluator eval(ch);
  return eval.rate(input.table());
}

double no_eavesdropper_capacity_expression(const OrthogonalDmc& ch,
                                           const JointPmf& input) {
  require_input_match(ch, input);
  PdfEvaluator eval(ch);
  return eval.no_eavesdropper_rate(input.table());
}

namespace {

// Joint over (U, V_R, V_D, V_2, Y_1, Y, Y_21, Y_22) for the randomized
// bounds; the channel inputs are marginalized out during composition.
JointPmf scheme_output_joint(const OrthogonalDmc& ch,
                             const AuxiliaryScheme& s) {
  if (s.prefix.outputs()[0].size != ch.x_r.size ||
      s.prefix.outputs()[1].size != ch.x_d.size ||
      s.prefix.outputs()[2].size != ch.x_2.size) {
    throw argument_error("scheme prefix outputs must match channel inputs");
  }
  const std::size_t nu = s.u.size, nvr = s.v_r.size, nvd = s.v_d.size,
                    nv2 = s.v_2.size;
  const std::size_t nr = ch.x_r.size, nd = ch.x_d.size, n2 = ch.x_2.size;
  const std::size_t ny1 = ch.y_1.size, ny = ch.y.size, n21 = ch.y_21.size,
                    n22 = ch.y_22.size;
  const std::size_t out_cells = ny1 * ny * n21 * n22;
  std::vector<double> table(nu * nvr * nvd * nv2 * out_cells, 0.0);
  for (std::size_t u = 0; u < nu; ++u) {
    const double pu = s.u_pmf[u];
    if (pu == 0.0) continue;
    for (std::size_t vr = 0; vr < nvr; ++vr)
      for (std::size_t vd = 0; vd < nvd; ++vd)
        for (std::size_t v2 = 0; v2 < nv2; ++v2) {
          const std::size_t vcell = (vr * nvd + vd) * nv2 + v2;
          const double pv = pu * s.v_given_u.value(u, vcell);
          if (pv == 0.0) continue;
          double* dst =
              table.data() + (((u * nvr + vr) * nvd + vd) * nv2 + v2) *
                                 out_cells;
          for (std::size_t xr = 0; xr < nr; ++xr)
            for (std::size_t xd = 0; xd < nd; ++xd)
              for (std::size_t x2 = 0; x2 < n2; ++x2) {
                const double px =
                    pv * s.prefix.value(vcell, (xr * nd + xd) * n2 + x2);
                if (px == 0.0) continue;
                const auto k1 = ch.relay_kernel.slice(xr * n2 + x2);
                const auto k2 = ch.dest_kernel.slice(xd * n2 + x2);
                for (std::size_t y1 = 0; y1 < ny1; ++y1)
                  for (std::size_t y21 = 0; y21 < n21; ++y21) {
                    const double p1 = px * k1[y1 * n21 + y21];
                    if (p1 == 0.0) continue;
                    for (std::size_t yy = 0; yy < ny; ++yy)
                      for (std::size_t y22 = 0; y22 < n22; ++y22) {
                        dst[((y1 * ny + yy) * n21 + y21) * n22 + y22] +=
                            p1 * k2[yy * n22 + y22];
                      }
                  }
              }
        }
  }
  return make_joint_pmf_unchecked(
      {s.u, s.v_r, s.v_d, s.v_2, ch.y_1, ch.y, ch.y_21, ch.y_22},
      std::move(table));
}

// Axis indices in scheme_output_joint.
constexpr std::size_t kU = 0, kVR = 1, kVD = 2, kV2 = 3, kY1 = 4, kY = 5,
                      kY21 = 6, kY22 = 7;

double scheme_min_term(const JointPmf& j) {
  using Idx = std::vector<std::size_t>;
  const double i_relay =
      mutual_information(j, Idx{kVD, kVR}, Idx{kY, kY1}, Idx{kV2, kU});
  const double i_dest = mutual_information(j, Idx{kVD, kV2}, Idx{kY}, Idx{kU});
  return std::min(i_relay, i_dest);
}

}  // namespace

double randomized_pdf_inner_bound(const OrthogonalDmc& ch,
                                  const AuxiliaryScheme& s) {
  using Idx = std::vector<std::size_t>;
  const JointPmf j = scheme_output_joint(ch, s);
  const double bound = scheme_min_term(j);
  double leak = 0.0;
  switch (ch.eavesdropper_case) {
    case EavesdropperCase::case1:
      leak = mutual_information(j, Idx{kVR}, Idx{kY21, kY22}, Idx{kU});
      break;
    case EavesdropperCase::case2:
      leak = mutual_information(j, Idx{kVD, kV2}, Idx{kY21, kY22}, Idx{kU});
      break;
    case EavesdropperCase::case3:
      leak =
          mutual_information(j, Idx{kVR}, Idx{kY21, kY22}, Idx{kV2, kU}) +
          mutual_information(j, Idx{kVD, kV2}, Idx{kY21, kY22}, Idx{kU});
      break;
  }
  return positive_part(bound - leak);
}

double outer_bound_expression(const OrthogonalDmc& ch,
                              const AuxiliaryScheme& s) {
  using Idx = std::vector<std::size_t>;
  const JointPmf j = scheme_output_joint(ch, s);
  const double bound = scheme_min_term(j);
  double leak = 0.0;
  switch (ch.eavesdropper_case) {
    case EavesdropperCase::case1:
      leak = mutual_information(j, Idx{kVR}, Idx{kY21, kY22}, Idx{kU});
      break;
    case EavesdropperCase::case2:
      leak = mutual_information(j, Idx{kVD, kV2}, Idx{kY21, kY22}, Idx{kU});
      break;
    case EavesdropperCase::case3:
      leak = mutual_information(j, Idx{kVR, kVD, kV2}, Idx{kY21, kY22},
                                Idx{kU});
      break;
  }
  return positive_part(bound - leak);
}

double full_duplex_pdf_rate(const FullDuplexDmc& ch) {
  using Idx = std::vector<std::size_t>;
  const std::size_t nv = ch.v.size, n1 = ch.x_1.size, n2 = ch.x_2.size;
  const std::size_t ny = ch.y.size, ny1 = ch.y_1.size, ny2 = ch.y_2.size;
  // Joint over (V, X_1, X_2, Y_1, Y, Y_2).
  std::vector<double> table(nv * n1 * n2 * ny1 * ny * ny2, 0.0);
  for (std::size_t v = 0; v < nv; ++v) {
    const double pv = ch.v_pmf[v];
    if (pv == 0.0) continue;
    for (std::size_t x1 = 0; x1 < n1; ++x1) {
      const double p1 = pv * ch.x1_given_v.value(v, x1);
      if (p1 == 0.0) continue;
      for (std::size_t x2 = 0; x2 < n2; ++x2) {
        const double p12 = p1 * ch.x2_given_v.value(v, x2);
        if (p12 == 0.0) continue;
        const auto k = ch.kernel.slice(x1 * n2 + x2);
        for (std::size_t yy = 0; yy < ny; ++yy)
          for (std::size_t y1 = 0; y1 < ny1; ++y1)
            for (std::size_t y2 = 0; y2 < ny2; ++y2) {
              table[((((v * n1 + x1) * n2 + x2) * ny1 + y1) * ny + yy) * ny2 +
                    y2] = p12 * k[(yy * ny1 + y1) * ny2 + y2];
            }
      }
    }
  }
  const JointPmf j = make_joint_pmf_unchecked(
      {ch.v, ch.x_1, ch.x_2, ch.y_1, ch.y, ch.y_2}, std::move(table));
  constexpr std::size_t V = 0, X1 = 1, X2 = 2, Y1 = 3, Y = 4, Y2 = 5;
  const double first = mutual_information(j, Idx{X1}, Idx{Y}, Idx{X2, V}) +
                       mutual_information(j, Idx{V}, Idx{Y1}, Idx{X2});
  const double second = mutual_information(j, Idx{X1, X2, V}, Idx{Y});
  const double leak = mutual_information(j, Idx{X1, X2}, Idx{Y2});
  return positive_part(std::min(first, second) - leak);
}

namespace {

// Weak compositions of n into k parts, lexicographic from (n, 0, ..., 0).
// Everything right of the pivot (short of the last slot) is already zero.
bool next_composition(std::vector<unsigned>& c) {
  const std::size_t k = c.size();
  if (k == 1) return false;
  std::size_t i = k - 1;
  while (i-- > 0) {
    if (c[i] > 0) {
      const unsigned tail = c[k - 1];
      c[k - 1] = 0;
      c[i] -= 1;
      c[i + 1] = tail + 1;
      return true;
    }
  }
  return false;
}

double composition_count(unsigned n, std::size_t k) {
  // C(n + k - 1, k - 1), saturating well above any enumeration budget.
  double c = 1.0;
  for (std::size_t i = 1; i < k; ++i) {
    c *= double(n + i) / double(i);
    if (c > 1e18) return 1e18;
  }
  return c;
}

std::vector<double> composition_to_pmf(const std::vector<unsigned>& c,
                                       unsigned n) {
  std::vector<double> p(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) p[i] = double(c[i]) / double(n);
  return p;
}

// Uniform random weak composition via stars and bars.
std::vector<unsigned> random_composition(std::mt19937_64& rng, unsigned n,
                                         std::size_t k) {
  // Choose k-1 distinct bar slots among n + k - 1.
  const std::size_t slots = n + k - 1;
  std::vector<std::size_t> all(slots);
  for (std::size_t i = 0; i < slots; ++i) all[i] = i;
  for (std::size_t i = 0; i < k - 1; ++i) {
    const std::size_t j = i + std::size_t(rng() % (slots - i));
    std::swap(all[i], all[j]);
  }
  std::vector<std::size_t> bars(all.begin(), all.begin() + (k - 1));
  std::sort(bars.begin(), bars.end());
  std::vector<unsigned> c(k);
  std::size_t prev = 0;
  for (std::size_t i = 0; i < k - 1; ++i) {
    c[i] = unsigned(bars[i] - prev);
    prev = bars[i] + 1;
  }
  c[k - 1] = unsigned(slots - prev);
  return c;
}

bool lexicographically_less(std::span<const double> a,
                            std::span<const double> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void renormalize(std::vector<double>& p) {
  double sum = 0.0;
  for (double x : p) sum += x;
  if (sum > 0.0) {
    for (auto& x : p) x /= sum;
  }
}

// Pairwise mass-transfer ascent on the simplex with step halving.
double refine_pmf(PdfEvaluator& eval, std::vector<double>& p, double value,
                  double initial_step) {
  const std::size_t k = p.size();
  std::vector<double> cand(k);
  double step = initial_step;
  unsigned sweeps = 0;
  while (step >= kRefineStepFloor && sweeps < kRefineMaxSweeps) {
    bool improved = false;
    ++sweeps;
    for (std::size_t from = 0; from < k; ++from) {
      for (std::size_t to = 0; to < k; ++to) {
        if (to == from) continue;
        if (p[from] < step) break;  // may change when a move is accepted
        cand = p;
        cand[from] -= step;
        cand[to] += step;
        const double v = eval.rate(cand);
        if (v > value) {
          value = v;
          p = cand;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return value;
}

}  // namespace

InnerBoundSearch maximize_inner_bound(const OrthogonalDmc& ch,
                                      unsigned grid_resolution, bool refine) {
  if (grid_resolution == 0) {
    throw argument_error("grid resolution must be positive");
  }
  PdfEvaluator eval(ch);
  const std::size_t k = eval.input_cells();
  if (k > kMaxInputCells) {
    throw capacity_guard_error(
        "joint input alphabet too large for simplex search (" +
        std::to_string(k) + " cells, limit " +
        std::to_string(kMaxInputCells) + ")");
  }

  const double count = composition_count(grid_resolution, k);
  const bool exhaustive = count <= double(kExhaustiveBudget);

  double best = -1.0;
  std::vector<double> best_pmf;
  std::size_t evaluations = 0;
  // Keep the top candidates for refinement (value descending).
  struct Candidate {
    double value;
    std::vector<double> pmf;
  };
  std::vector<Candidate> top;
  auto consider = [&](std::vector<double>&& pmf) {
    const double v = eval.rate(pmf);
    ++evaluations;
    if (v > best || (v == best && lexicographically_less(pmf, best_pmf))) {
      best = v;
      best_pmf = pmf;
    }
    if (top.size() < kRefineRestarts || v > top.back().value) {
      top.push_back({v, std::move(pmf)});
      std::sort(top.begin(), top.end(), [](const auto& a, const auto& b) {
        if (a.value != b.value) return a.value > b.value;
        return lexicographically_less(a.pmf, b.pmf);
      });
      if (top.size() > kRefineRestarts) top.pop_back();
    }
  };

  if (exhaustive) {
    std::vector<unsigned> c(k, 0);
    c[0] = grid_resolution;
    do {
      consider(composition_to_pmf(c, grid_resolution));
    } while (next_composition(c));
  } else {
    std::mt19937_64 rng(kGridSampleSeed);
    for (std::size_t i = 0; i < kGridSampleCount; ++i) {
      consider(composition_to_pmf(random_composition(rng, grid_resolution, k),
                                  grid_resolution));
    }
    // The uniform input is always worth a look.
    consider(std::vector<double>(k, 1.0 / double(k)));
  }

  if (refine) {
    const double step = 1.0 / double(grid_resolution);
    for (auto& cand : top) {
      std::vector<double> p = cand.pmf;
      refine_pmf(eval, p, cand.value, step);
      // Re-evaluate at the renormalized point so the reported value is the
      // certified value of the returned feasible input.
      renormalize(p);
      const double v = eval.rate(p);
      if (v > best || (v == best && lexicographically_less(p, best_pmf))) {
        best = v;
        best_pmf = std::move(p);
      }
    }
  }

  JointPmf input({ch.x_r, ch.x_d, ch.x_2}, best_pmf);
  InnerBoundSearch result{best, std::move(input), evaluations, exhaustive};
  return result;
}

}  // namespace relaysec
