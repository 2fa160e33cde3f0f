#include "relaysec/gaussian_joint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "relaysec/errors.hpp"

namespace relaysec {

namespace {

constexpr double kSymmetryTolerance = 1e-10;
constexpr double kPsdTolerance = -1e-9;
constexpr double kSingularDet = 1e-300;
constexpr double kRidge = 1e-12;

}  // namespace

GaussianJoint::GaussianJoint(Eigen::MatrixXd covariance,
                             std::vector<std::string> names)
    : cov_(std::move(covariance)), names_(std::move(names)) {
  if (cov_.rows() == 0 || cov_.rows() != cov_.cols()) {
    throw argument_error("covariance must be square and non-empty");
  }
  if (!names_.empty() &&
      names_.size() != static_cast<std::size_t>(cov_.rows())) {
    throw argument_error("variable names must match covariance dimension");
  }
  const double asym = (cov_ - cov_.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTolerance) {
    throw argument_error("covariance asymmetric beyond tolerance");
  }
  cov_ = ((cov_ + cov_.transpose()) / 2.0).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov_,
                                                    Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  const double scale = std::max(1.0, es.eigenvalues().maxCoeff());
  // Tolerance scales with the spectrum; rounding from large channel gains
  // is proportional to the top eigenvalue. Tolerated near-null modes are
  // handled by the ridge inside the mutual-information evaluation, so no
  // reconstruction happens here (it would perturb small entries).
  if (min_eig < kPsdTolerance * scale) {
    throw numeric_error("covariance indefinite: min eigenvalue " +
                        std::to_string(min_eig));
  }
}

std::size_t GaussianJoint::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw argument_error("unknown variable name: " + name);
  }
  return static_cast<std::size_t>(it - names_.begin());
}

double gaussian_capacity(double snr) {
  if (snr < 0.0) throw argument_error("snr must be non-negative");
  return 0.5 * std::log2(1.0 + snr);
}

namespace {

// Spectral form of the singular-block ridge for the mutual-information
// blocks. Input covariances are accepted down to eigenvalue -1e-9, so on
// unit-diagonal blocks every tolerated near-null mode sits below kFloor and
// is lifted to it consistently across the four blocks of one mutual
// information; genuine eigenvalues above kHealthy take an exact path.
constexpr double kFloor = 1e-8;
constexpr double kHealthy = 1e-6;

double log_det2_floored(const Eigen::MatrixXd& block) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block,
                                                    Eigen::EigenvaluesOnly);
  double logdet = 0.0;
  for (double lambda : es.eigenvalues()) {
    if (lambda < -1e-6) {
      throw numeric_error("covariance block indefinite: eigenvalue " +
                          std::to_string(lambda));
    }
    logdet += std::log2(std::max(lambda, kFloor));
  }
  return logdet;
}

Eigen::MatrixXd scaled_block(const Eigen::MatrixXd& cov,
                             const Eigen::VectorXd& inv_scale,
                             std::span<const std::size_t> subset) {
  Eigen::MatrixXd block(subset.size(), subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = 0; j < subset.size(); ++j) {
      const auto bi = static_cast<Eigen::Index>(subset[i]);
      const auto bj = static_cast<Eigen::Index>(subset[j]);
      block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          cov(bi, bj) * inv_scale[bi] * inv_scale[bj];
    }
  }
  return block;
}

}  // namespace

double gaussian_log_det_block(const Eigen::MatrixXd& covariance,
                              std::span<const std::size_t> subset) {
  if (subset.empty()) return 0.0;
  const auto n = static_cast<std::size_t>(covariance.rows());
  Eigen::MatrixXd block(subset.size(), subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= n) throw argument_error("covariance index out of range");
    for (std::size_t j = 0; j < subset.size(); ++j) {
      block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          covariance(static_cast<Eigen::Index>(subset[i]),
                     static_cast<Eigen::Index>(subset[j]));
    }
  }
  double det = block.determinant();
  if (det < kSingularDet) {
    block.diagonal().array() += kRidge;
    det = block.determinant();
  }
  if (!(det > 0.0)) {
    throw numeric_error("covariance block determinant not positive (" +
                        std::to_string(det) + ")");
  }
  return std::log2(det);
}

double gaussian_mutual_information(const GaussianJoint& joint,
                                   std::span<const std::size_t> a,
                                   std::span<const std::size_t> b,
                                   std::span<const std::size_t> c) {
  if (a.empty() || b.empty()) {
    throw argument_error("gaussian MI needs non-empty A and B");
  }
  auto overlaps = [](std::span<const std::size_t> lhs,
                     std::span<const std::size_t> rhs) {
    return std::any_of(lhs.begin(), lhs.end(), [&](std::size_t x) {
      return std::find(rhs.begin(), rhs.end(), x) != rhs.end();
    });
  };
  if (overlaps(a, b) || overlaps(a, c) || overlaps(b, c)) {
    throw argument_error("gaussian MI index groups must be disjoint");
  }

  std::vector<std::size_t> ac(a.begin(), a.end());
  ac.insert(ac.end(), c.begin(), c.end());
  std::vector<std::size_t> bc(b.begin(), b.end());
  bc.insert(bc.end(), c.begin(), c.end());
  std::vector<std::size_t> abc(a.begin(), a.end());
  abc.insert(abc.end(), b.begin(), b.end());
  abc.insert(abc.end(), c.begin(), c.end());

  const Eigen::MatrixXd& cov = joint.covariance();
  for (std::size_t idx : abc) {
    if (idx >= joint.dim()) {
      throw argument_error("covariance index out of range");
    }
  }
  // Mutual information is invariant under per-variable scaling, and the
  // scaling factors cancel exactly across the four blocks; normalizing to
  // unit variances keeps the ridge scale meaningful for any channel gains.
  Eigen::VectorXd inv_scale(cov.rows());
  for (Eigen::Index i = 0; i < cov.rows(); ++i) {
    const double v = cov(i, i);
    inv_scale[i] = v > kRidge ? 1.0 / std::sqrt(v) : 1.0;
  }

  // Eigenvalues of principal sub-blocks interlace those of the union block,
  // so one eigensolve certifies whether plain LU determinants are safe for
  // all four blocks.
  const Eigen::MatrixXd union_block = scaled_block(cov, inv_scale, abc);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(union_block,
                                                    Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -1e-6) {
    throw numeric_error("joint covariance indefinite: eigenvalue " +
                        std::to_string(min_eig));
  }

  double mi = 0.0;
  if (min_eig > kHealthy) {
    double logdet_abc = 0.0;
    for (double lambda : es.eigenvalues()) logdet_abc += std::log2(lambda);
    auto lu_logdet = [&](std::span<const std::size_t> subset) {
      if (subset.empty()) return 0.0;
      return std::log2(scaled_block(cov, inv_scale, subset).determinant());
    };
    mi = 0.5 * (lu_logdet(ac) + lu_logdet(bc) - lu_logdet(c) - logdet_abc);
  } else {
    auto floored = [&](std::span<const std::size_t> subset) {
      if (subset.empty()) return 0.0;
      return log_det2_floored(scaled_block(cov, inv_scale, subset));
    };
    mi = 0.5 * (floored(ac) + floored(bc) - floored(c) - floored(abc));
  }
  if (mi < 0.0) {
    if (mi < -1e-6) {
      throw numeric_error("gaussian mutual information " +
                          std::to_string(mi) + " below the rounding clamp");
    }
    mi = 0.0;
  }
  return mi;
}

}  // namespace relaysec
