#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace relaysec {

/// A finite symbol alphabet. Labels are optional display names; when present
/// there must be exactly one per symbol.
struct FiniteAlphabet {
  std::size_t size = 0;
  std::vector<std::string> labels;

  FiniteAlphabet() = default;
  explicit FiniteAlphabet(std::size_t n) : size(n) {}
  FiniteAlphabet(std::size_t n, std::vector<std::string> names);
};

/// Exact joint probability mass function over a tuple of finite alphabets.
///
/// The table is dense, row-major with axis 0 slowest. Entries are
/// non-negative and sum to one within 1e-12; both are checked on
/// construction. Values are immutable afterwards.
class JointPmf {
 public:
  JointPmf(std::vector<FiniteAlphabet> axes, std::vector<double> table);

  static JointPmf uniform(std::vector<FiniteAlphabet> axes);
  static JointPmf point_mass(std::vector<FiniteAlphabet> axes,
                             std::span<const std::size_t> symbol);

  std::size_t rank() const { return axes_.size(); }
  const FiniteAlphabet& axis(std::size_t i) const { return axes_[i]; }
  std::size_t axis_size(std::size_t i) const { return axes_[i].size; }
  const std::vector<FiniteAlphabet>& axes() const { return axes_; }
  const std::vector<double>& table() const { return table_; }

  std::size_t flat_index(std::span<const std::size_t> symbol) const;
  double at(std::span<const std::size_t> symbol) const;

  /// Marginal over the listed axes, in the listed order.
  JointPmf marginal(std::span<const std::size_t> keep) const;

 private:
  struct unchecked_tag {};
  JointPmf(unchecked_tag, std::vector<FiniteAlphabet> axes,
           std::vector<double> table);

  friend JointPmf make_joint_pmf_unchecked(std::vector<FiniteAlphabet>,
                                           std::vector<double>);

  std::vector<FiniteAlphabet> axes_;
  std::vector<double> table_;
  std::vector<std::size_t> strides_;
};

/// Internal fast path for compositions that are normalized by construction.
JointPmf make_joint_pmf_unchecked(std::vector<FiniteAlphabet> axes,
                                  std::vector<double> table);

/// Shannon entropy in bits of the marginal on `subset`. 0 log 0 := 0.
double entropy(const JointPmf& pmf, std::span<const std::size_t> subset);

/// Conditional mutual information I(A;B|C) in bits, computed as
/// H(A,C) + H(B,C) - H(C) - H(A,B,C). A and B must be non-empty and the
/// three groups pairwise disjoint. Rounding noise down to -1e-10 is clamped
/// to zero; anything more negative raises numeric_error.
double mutual_information(const JointPmf& pmf, std::span<const std::size_t> a,
                          std::span<const std::size_t> b,
                          std::span<const std::size_t> c = {});

}  // namespace relaysec
