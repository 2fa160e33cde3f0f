#include "relaysec/info_measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "relaysec/errors.hpp"

namespace relaysec {

namespace {

constexpr double kSumTolerance = 1e-12;
constexpr double kNegativeMiClamp = 1e-10;

std::vector<std::size_t> row_major_strides(
    const std::vector<FiniteAlphabet>& axes) {
  std::vector<std::size_t> strides(axes.size(), 1);
  for (std::size_t i = axes.size(); i-- > 1;) {
    strides[i - 1] = strides[i] * axes[i].size;
  }
  return strides;
}

std::size_t table_size(const std::vector<FiniteAlphabet>& axes) {
  std::size_t n = 1;
  for (const auto& a : axes) {
    if (a.size == 0) throw argument_error("alphabet size must be >= 1");
    n *= a.size;
  }
  return n;
}

}  // namespace

FiniteAlphabet::FiniteAlphabet(std::size_t n, std::vector<std::string> names)
    : size(n), labels(std::move(names)) {
  if (size == 0) throw argument_error("alphabet size must be >= 1");
  if (!labels.empty() && labels.size() != size) {
    throw argument_error("alphabet labels must match alphabet size");
  }
}

JointPmf::JointPmf(std::vector<FiniteAlphabet> axes, std::vector<double> table)
    : axes_(std::move(axes)), table_(std::move(table)) {
  if (axes_.empty()) throw argument_error("JointPmf needs at least one axis");
  if (table_.size() != table_size(axes_)) {
    throw argument_error("JointPmf table size does not match axes");
  }
  long double sum = 0.0L;
  for (double p : table_) {
    if (p < 0.0) throw argument_error("JointPmf entries must be non-negative");
    sum += p;
  }
  if (std::abs(static_cast<double>(sum) - 1.0) > kSumTolerance) {
    throw argument_error("JointPmf entries must sum to 1 (got " +
                         std::to_string(static_cast<double>(sum)) + ")");
  }
  strides_ = row_major_strides(axes_);
}

JointPmf::JointPmf(unchecked_tag, std::vector<FiniteAlphabet> axes,
                   std::vector<double> table)
    : axes_(std::move(axes)), table_(std::move(table)) {
  strides_ = row_major_strides(axes_);
}

JointPmf make_joint_pmf_unchecked(std::vector<FiniteAlphabet> axes,
                                  std::vector<double> table) {
  return JointPmf(JointPmf::unchecked_tag{}, std::move(axes),
                  std::move(table));
}

JointPmf JointPmf::uniform(std::vector<FiniteAlphabet> axes) {
  const std::size_t n = table_size(axes);
  return JointPmf(std::move(axes), std::vector<double>(n, 1.0 / double(n)));
}

JointPmf JointPmf::point_mass(std::vector<FiniteAlphabet> axes,
                              std::span<const std::size_t> symbol) {
  const std::size_t n = table_size(axes);
  std::vector<double> table(n, 0.0);
  JointPmf pmf(unchecked_tag{}, std::move(axes), std::move(table));
  auto idx = pmf.flat_index(symbol);
  // flat_index validated the symbol; safe to poke the table directly.
  const_cast<std::vector<double>&>(pmf.table_)[idx] = 1.0;
  return pmf;
}

std::size_t JointPmf::flat_index(std::span<const std::size_t> symbol) const {
  if (symbol.size() != axes_.size()) {
    throw argument_error("symbol rank does not match pmf rank");
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < symbol.size(); ++i) {
    if (symbol[i] >= axes_[i].size) {
      throw argument_error("symbol out of alphabet range on axis " +
                           std::to_string(i));
    }
    idx += symbol[i] * strides_[i];
  }
  return idx;
}

double JointPmf::at(std::span<const std::size_t> symbol) const {
  return table_[flat_index(symbol)];
}

JointPmf JointPmf::marginal(std::span<const std::size_t> keep) const {
  if (keep.empty()) throw argument_error("marginal needs at least one axis");
  std::vector<FiniteAlphabet> axes;
  axes.reserve(keep.size());
  for (std::size_t k : keep) {
    if (k >= axes_.size()) {
      throw argument_error("marginal axis index out of range");
    }
    axes.push_back(axes_[k]);
  }
  const auto dst_strides = row_major_strides(axes);
  std::vector<double> table(table_size(axes), 0.0);
  for (std::size_t i = 0; i < table_.size(); ++i) {
    const double p = table_[i];
    if (p == 0.0) continue;
    std::size_t dst = 0;
    for (std::size_t j = 0; j < keep.size(); ++j) {
      const std::size_t k = keep[j];
      dst += ((i / strides_[k]) % axes_[k].size) * dst_strides[j];
    }
    table[dst] += p;
  }
  return JointPmf(unchecked_tag{}, std::move(axes), std::move(table));
}

double entropy(const JointPmf& pmf, std::span<const std::size_t> subset) {
  if (subset.empty()) throw argument_error("entropy needs a non-empty subset");
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (subset[i] == subset[j]) {
        throw argument_error("entropy subset has a repeated axis");
      }
    }
  }
  const JointPmf marg = pmf.marginal(subset);
  double h = 0.0;
  for (double p : marg.table()) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  // Rounding in the marginal sums can leave a vanishing negative residue.
  if (h < 0.0 && h > -1e-12) h = 0.0;
  return h;
}

double mutual_information(const JointPmf& pmf, std::span<const std::size_t> a,
                          std::span<const std::size_t> b,
                          std::span<const std::size_t> c) {
  if (a.empty() || b.empty()) {
    throw argument_error("mutual_information needs non-empty A and B");
  }
  auto overlaps = [](std::span<const std::size_t> lhs,
                     std::span<const std::size_t> rhs) {
    return std::any_of(lhs.begin(), lhs.end(), [&](std::size_t x) {
      return std::find(rhs.begin(), rhs.end(), x) != rhs.end();
    });
  };
  if (overlaps(a, b) || overlaps(a, c) || overlaps(b, c)) {
    throw argument_error("mutual_information axis groups must be disjoint");
  }

  std::vector<std::size_t> ac(a.begin(), a.end());
  ac.insert(ac.end(), c.begin(), c.end());
  std::vector<std::size_t> bc(b.begin(), b.end());
  bc.insert(bc.end(), c.begin(), c.end());
  std::vector<std::size_t> abc(a.begin(), a.end());
  abc.insert(abc.end(), b.begin(), b.end());
  abc.insert(abc.end(), c.begin(), c.end());

  const double h_c = c.empty() ? 0.0 : entropy(pmf, c);
  double mi = entropy(pmf, ac) + entropy(pmf, bc) - h_c - entropy(pmf, abc);
  if (mi < 0.0) {
    if (mi < -kNegativeMiClamp) {
      throw numeric_error("mutual information " + std::to_string(mi) +
                          " below the rounding clamp");
    }
    mi = 0.0;
  }
  return mi;
}

}  // namespace relaysec
