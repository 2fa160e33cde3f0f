#pragma once

#include <span>
#include <string>
#include <vector>

#include "relaysec/info_measures.hpp"

namespace relaysec {

/// Which orthogonal channel(s) the eavesdropper overhears: the
/// source-to-relay channel (case 1), the channel to the destination
/// (case 2), or both (case 3).
enum class EavesdropperCase { case1, case2, case3 };

std::string to_string(EavesdropperCase c);
EavesdropperCase eavesdropper_case_from_string(const std::string& s);

/// Dense conditional probability table p(outputs | inputs), inputs-major.
/// Every conditional slice must sum to one within 1e-12.
class ConditionalPmf {
 public:
  ConditionalPmf(std::vector<FiniteAlphabet> inputs,
                 std::vector<FiniteAlphabet> outputs,
                 std::vector<double> table);

  const std::vector<FiniteAlphabet>& inputs() const { return inputs_; }
  const std::vector<FiniteAlphabet>& outputs() const { return outputs_; }
  std::size_t input_cells() const { return input_cells_; }
  std::size_t output_cells() const { return output_cells_; }

  /// Probability of the output cell given the input cell (flat indices,
  /// row-major within each group).
  double value(std::size_t input_flat, std::size_t output_flat) const {
    return table_[input_flat * output_cells_ + output_flat];
  }
  std::span<const double> slice(std::size_t input_flat) const {
    return {table_.data() + input_flat * output_cells_, output_cells_};
  }
  const std::vector<double>& table() const { return table_; }

 private:
  std::vector<FiniteAlphabet> inputs_;
  std::vector<FiniteAlphabet> outputs_;
  std::vector<double> table_;
  std::size_t input_cells_ = 1;
  std::size_t output_cells_ = 1;
};

/// Builds a deterministic conditional table from a map of input cell to
/// output cell (both flat, row-major).
ConditionalPmf deterministic_conditional(
    std::vector<FiniteAlphabet> inputs, std::vector<FiniteAlphabet> outputs,
    const std::vector<std::size_t>& output_of_input);

/// Finite-alphabet relay-eavesdropper channel with orthogonal components.
///
/// The transition law factors as
///   p(y1, y21 | xr, x2) * p(y, y22 | xd, x2)
/// by construction of the two stored kernels. Case tags additionally
/// constrain the kernels (checked by validate_factorization): a case-1
/// channel must have y22 independent of (xd, x2, y); a case-2 channel must
/// have y21 independent of (xr, x2, y1).
struct OrthogonalDmc {
  FiniteAlphabet x_r, x_d, x_2;
  FiniteAlphabet y_1, y, y_21, y_22;
  ConditionalPmf relay_kernel;  // p(y1, y21 | xr, x2)
  ConditionalPmf dest_kernel;   // p(y, y22 | xd, x2)
  EavesdropperCase eavesdropper_case = EavesdropperCase::case3;

  OrthogonalDmc(FiniteAlphabet xr, FiniteAlphabet xd, FiniteAlphabet x2,
                FiniteAlphabet y1, FiniteAlphabet yy, FiniteAlphabet y21,
                FiniteAlphabet y22, ConditionalPmf relay,
                ConditionalPmf dest, EavesdropperCase ecase);
};

struct FactorizationReport {
  bool pass = false;
  double max_violation = 0.0;
  std::string detail;
};

/// Checks the case-appropriate product structure of the channel law and
/// reports the largest absolute deviation (tolerance 1e-10).
FactorizationReport validate_factorization(const OrthogonalDmc& channel);

/// Randomization scheme for the prefix-channel bounds: auxiliaries
/// (U, VR, VD, V2) with a memoryless prefix channel emitting the actual
/// channel inputs.
struct AuxiliaryScheme {
  FiniteAlphabet u, v_r, v_d, v_2;
  std::vector<double> u_pmf;    // p(u)
  ConditionalPmf v_given_u;     // p(vr, vd, v2 | u)
  ConditionalPmf prefix;        // p(xr, xd, x2 | vr, vd, v2)

  AuxiliaryScheme(FiniteAlphabet uu, FiniteAlphabet vr, FiniteAlphabet vd,
                  FiniteAlphabet v2, std::vector<double> pu,
                  ConditionalPmf v_u, ConditionalPmf pre);

  /// V = X with a constant U: the scheme whose randomized rate reduces to
  /// the plain inner bound at the given input distribution.
  static AuxiliaryScheme identity(const JointPmf& input);
};

/// Full-duplex relay-eavesdropper channel with its decode-and-forward input
/// scheme p(v) p(x1|v) p(x2|v).
struct FullDuplexDmc {
  FiniteAlphabet x_1, x_2, v;
  FiniteAlphabet y_1, y, y_2;
  ConditionalPmf kernel;  // p(y, y1, y2 | x1, x2)
  std::vector<double> v_pmf;
  ConditionalPmf x1_given_v;
  ConditionalPmf x2_given_v;

  FullDuplexDmc(FiniteAlphabet x1, FiniteAlphabet x2, FiniteAlphabet vv,
                FiniteAlphabet y1, FiniteAlphabet yy, FiniteAlphabet y2,
                ConditionalPmf k, std::vector<double> pv, ConditionalPmf x1v,
                ConditionalPmf x2v);
};

}  // namespace relaysec
