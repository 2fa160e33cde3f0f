#include "relaysec/dmc_channel.hpp"

#include <cmath>

#include "relaysec/errors.hpp"

namespace relaysec {

namespace {

constexpr double kSliceSumTolerance = 1e-12;
constexpr double kFactorTolerance = 1e-10;

std::size_t cell_count(const std::vector<FiniteAlphabet>& axes) {
  std::size_t n = 1;
  for (const auto& a : axes) {
    if (a.size == 0) throw argument_error("alphabet size must be >= 1");
    n *= a.size;
  }
  return n;
}

void require_same_alphabet(const FiniteAlphabet& a, const FiniteAlphabet& b,
                           const char* what) {
  if (a.size != b.size) {
    throw argument_error(std::string("alphabet mismatch for ") + what);
  }
}

std::vector<double> pmf_checked(std::vector<double> p, const char* what) {
  double sum = 0.0;
  for (double x : p) {
    if (x < 0.0) {
      throw argument_error(std::string(what) + " has a negative entry");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > kSliceSumTolerance) {
    throw argument_error(std::string(what) + " does not sum to 1");
  }
  return p;
}

}  // namespace

std::string to_string(EavesdropperCase c) {
  switch (c) {
    case EavesdropperCase::case1: return "case1";
    case EavesdropperCase::case2: return "case2";
    case EavesdropperCase::case3: return "case3";
  }
  return "case3";
}

EavesdropperCase eavesdropper_case_from_string(const std::string& s) {
  if (s == "case1") return EavesdropperCase::case1;
  if (s == "case2") return EavesdropperCase::case2;
  if (s == "case3") return EavesdropperCase::case3;
  throw argument_error("unknown eavesdropper case: " + s);
}

ConditionalPmf::ConditionalPmf(std::vector<FiniteAlphabet> inputs,
                               std::vector<FiniteAlphabet> outputs,
                               std::vector<double> table)
    : inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      table_(std::move(table)) {
  input_cells_ = cell_count(inputs_);
  output_cells_ = cell_count(outputs_);
  if (table_.size() != input_cells_ * output_cells_) {
    throw argument_error("conditional table size mismatch");
  }
  for (std::size_t in = 0; in < input_cells_; ++in) {
    long double sum = 0.0L;
    for (std::size_t out = 0; out < output_cells_; ++out) {
      const double p = table_[in * output_cells_ + out];
      if (p < 0.0) {
        throw argument_error("conditional table has a negative entry");
      }
      sum += p;
    }
    if (std::abs(static_cast<double>(sum) - 1.0) > kSliceSumTolerance) {
      throw argument_error("conditional slice " + std::to_string(in) +
                           " does not sum to 1");
    }
  }
}

ConditionalPmf deterministic_conditional(
    std::vector<FiniteAlphabet> inputs, std::vector<FiniteAlphabet> outputs,
    const std::vector<std::size_t>& output_of_input) {
  const std::size_t nin = cell_count(inputs);
  const std::size_t nout = cell_count(outputs);
  if (output_of_input.size() != nin) {
    throw argument_error("deterministic map must cover every input cell");
  }
  std::vector<double> table(nin * nout, 0.0);
  for (std::size_t in = 0; in < nin; ++in) {
    if (output_of_input[in] >= nout) {
      throw argument_error("deterministic map target out of range");
    }
    table[in * nout + output_of_input[in]] = 1.0;
  }
  return ConditionalPmf(std::move(inputs), std::move(outputs),
                        std::move(table));
}

OrthogonalDmc::OrthogonalDmc(FiniteAlphabet xr, FiniteAlphabet xd,
                             FiniteAlphabet x2, FiniteAlphabet y1,
                             FiniteAlphabet yy, FiniteAlphabet y21,
                             FiniteAlphabet y22, ConditionalPmf relay,
                             ConditionalPmf dest, EavesdropperCase ecase)
    : x_r(std::move(xr)),
      x_d(std::move(xd)),
      x_2(std::move(x2)),
      y_1(std::move(y1)),
      y(std::move(yy)),
      y_21(std::move(y21)),
      y_22(std::move(y22)),
      relay_kernel(std::move(relay)),
      dest_kernel(std::move(dest)),
      eavesdropper_case(ecase) {
  if (relay_kernel.inputs().size() != 2 ||
      relay_kernel.outputs().size() != 2 ||
      dest_kernel.inputs().size() != 2 || dest_kernel.outputs().size() != 2) {
    throw argument_error(
        "orthogonal kernels must be p(y1,y21|xr,x2) and p(y,y22|xd,x2)");
  }
  require_same_alphabet(relay_kernel.inputs()[0], x_r, "relay kernel X_R");
  require_same_alphabet(relay_kernel.inputs()[1], x_2, "relay kernel X_2");
  require_same_alphabet(relay_kernel.outputs()[0], y_1, "relay kernel Y_1");
  require_same_alphabet(relay_kernel.outputs()[1], y_21, "relay kernel Y_21");
  require_same_alphabet(dest_kernel.inputs()[0], x_d, "dest kernel X_D");
  require_same_alphabet(dest_kernel.inputs()[1], x_2, "dest kernel X_2");
  require_same_alphabet(dest_kernel.outputs()[0], y, "dest kernel Y");
  require_same_alphabet(dest_kernel.outputs()[1], y_22, "dest kernel Y_22");
}

namespace {

// Largest deviation of p(out_a, out_b | in) from p(out_a | in) * q(out_b),
// where q is the input-averaged marginal of the minor output.
double factor_violation(const ConditionalPmf& kernel, std::size_t na,
                        std::size_t nb) {
  const std::size_t nin = kernel.input_cells();
  std::vector<double> q(nb, 0.0);
  for (std::size_t in = 0; in < nin; ++in) {
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t b = 0; b < nb; ++b) {
        q[b] += kernel.value(in, a * nb + b);
      }
    }
  }
  for (auto& x : q) x /= double(nin);

  double worst = 0.0;
  for (std::size_t in = 0; in < nin; ++in) {
    std::vector<double> pa(na, 0.0);
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t b = 0; b < nb; ++b) {
        pa[a] += kernel.value(in, a * nb + b);
      }
    }
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t b = 0; b < nb; ++b) {
        const double diff =
            std::abs(kernel.value(in, a * nb + b) - pa[a] * q[b]);
        if (diff > worst) worst = diff;
      }
    }
  }
  return worst;
}

}  // namespace

FactorizationReport validate_factorization(const OrthogonalDmc& channel) {
  FactorizationReport report;
  switch (channel.eavesdropper_case) {
    case EavesdropperCase::case3:
      // Definition 1's product structure holds by construction of the two
      // stored kernels.
      report.max_violation = 0.0;
      report.detail = "orthogonal product structure holds by construction";
      break;
    case EavesdropperCase::case1:
      report.max_violation = factor_violation(
          channel.dest_kernel, channel.y.size, channel.y_22.size);
      report.detail = "case 1 requires Y_22 independent of (X_D, X_2, Y)";
      break;
    case EavesdropperCase::case2:
      report.max_violation = factor_violation(
          channel.relay_kernel, channel.y_1.size, channel.y_21.size);
      report.detail = "case 2 requires Y_21 independent of (X_R, X_2, Y_1)";
      break;
  }
  report.pass = report.max_violation <= kFactorTolerance;
  return report;
}

AuxiliaryScheme::AuxiliaryScheme(FiniteAlphabet uu, FiniteAlphabet vr,
                                 FiniteAlphabet vd, FiniteAlphabet v2,
                                 std::vector<double> pu, ConditionalPmf v_u,
                                 ConditionalPmf pre)
    : u(std::move(uu)),
      v_r(std::move(vr)),
      v_d(std::move(vd)),
      v_2(std::move(v2)),
      u_pmf(pmf_checked(std::move(pu), "p(u)")),
      v_given_u(std::move(v_u)),
      prefix(std::move(pre)) {
  if (u_pmf.size() != u.size) throw argument_error("p(u) size mismatch");
  if (v_given_u.inputs().size() != 1 || v_given_u.outputs().size() != 3) {
    throw argument_error("scheme needs p(vr,vd,v2|u)");
  }
  if (prefix.inputs().size() != 3 || prefix.outputs().size() != 3) {
    throw argument_error("scheme needs prefix p(xr,xd,x2|vr,vd,v2)");
  }
  require_same_alphabet(v_given_u.inputs()[0], u, "p(v|u) U");
  require_same_alphabet(v_given_u.outputs()[0], v_r, "p(v|u) V_R");
  require_same_alphabet(v_given_u.outputs()[1], v_d, "p(v|u) V_D");
  require_same_alphabet(v_given_u.outputs()[2], v_2, "p(v|u) V_2");
  require_same_alphabet(prefix.inputs()[0], v_r, "prefix V_R");
  require_same_alphabet(prefix.inputs()[1], v_d, "prefix V_D");
  require_same_alphabet(prefix.inputs()[2], v_2, "prefix V_2");
}

AuxiliaryScheme AuxiliaryScheme::identity(const JointPmf& input) {
  if (input.rank() != 3) {
    throw argument_error("identity scheme expects a (X_R, X_D, X_2) input");
  }
  const FiniteAlphabet xr = input.axis(0);
  const FiniteAlphabet xd = input.axis(1);
  const FiniteAlphabet x2 = input.axis(2);
  ConditionalPmf v_u({FiniteAlphabet(1)}, {xr, xd, x2}, input.table());
  const std::size_t cells = xr.size * xd.size * x2.size;
  std::vector<std::size_t> ident(cells);
  for (std::size_t i = 0; i < cells; ++i) ident[i] = i;
  ConditionalPmf prefix =
      deterministic_conditional({xr, xd, x2}, {xr, xd, x2}, ident);
  return AuxiliaryScheme(FiniteAlphabet(1), xr, xd, x2, {1.0}, std::move(v_u),
                         std::move(prefix));
}

FullDuplexDmc::FullDuplexDmc(FiniteAlphabet x1, FiniteAlphabet x2,
                             FiniteAlphabet vv, FiniteAlphabet y1,
                             FiniteAlphabet yy, FiniteAlphabet y2,
                             ConditionalPmf k, std::vector<double> pv,
                             ConditionalPmf x1v, ConditionalPmf x2v)
    : x_1(std::move(x1)),
      x_2(std::move(x2)),
      v(std::move(vv)),
      y_1(std::move(y1)),
      y(std::move(yy)),
      y_2(std::move(y2)),
      kernel(std::move(k)),
      v_pmf(pmf_checked(std::move(pv), "p(v)")),
      x1_given_v(std::move(x1v)),
      x2_given_v(std::move(x2v)) {
  if (v_pmf.size() != v.size) throw argument_error("p(v) size mismatch");
  if (kernel.inputs().size() != 2 || kernel.outputs().size() != 3) {
    throw argument_error("full-duplex kernel must be p(y,y1,y2|x1,x2)");
  }
  require_same_alphabet(kernel.inputs()[0], x_1, "kernel X_1");
  require_same_alphabet(kernel.inputs()[1], x_2, "kernel X_2");
  require_same_alphabet(kernel.outputs()[0], y, "kernel Y");
  require_same_alphabet(kernel.outputs()[1], y_1, "kernel Y_1");
  require_same_alphabet(kernel.outputs()[2], y_2, "kernel Y_2");
  require_same_alphabet(x1_given_v.inputs()[0], v, "p(x1|v) V");
  require_same_alphabet(x1_given_v.outputs()[0], x_1, "p(x1|v) X_1");
  require_same_alphabet(x2_given_v.inputs()[0], v, "p(x2|v) V");
  require_same_alphabet(x2_given_v.outputs()[0], x_2, "p(x2|v) X_2");
}

}  // namespace relaysec
