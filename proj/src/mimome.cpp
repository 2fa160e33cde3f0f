#include "relaysec/mimome.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "relaysec/errors.hpp"
#include "relaysec/gaussian_joint.hpp"

namespace relaysec {

namespace {

double logdet2_psd(const Eigen::MatrixXd& m) {
  double det = m.determinant();
  if (det < 1e-300) {
    Eigen::MatrixXd ridged = m;
    ridged.diagonal().array() += 1e-12;
    det = ridged.determinant();
  }
  if (!(det > 0.0)) {
    throw numeric_error("mimome determinant not positive");
  }
  return std::log2(det);
}

Eigen::MatrixXd rotation_from_angles(std::span<const double> angles,
                                     std::size_t m) {
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(m, m);
  std::size_t a = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double c = std::cos(angles[a]);
      const double s = std::sin(angles[a]);
      ++a;
      Eigen::MatrixXd g = Eigen::MatrixXd::Identity(m, m);
      g(i, i) = c;
      g(j, j) = c;
      g(i, j) = -s;
      g(j, i) = s;
      r = (r * g).eval();
    }
  }
  return r;
}

}  // namespace

MimomeInstance::MimomeInstance(Eigen::MatrixXd h_in, Eigen::MatrixXd he_in,
                               Eigen::MatrixXd s_in)
    : h(std::move(h_in)), h_e(std::move(he_in)), s(std::move(s_in)) {
  if (s.rows() == 0 || s.rows() != s.cols()) {
    throw argument_error("constraint S must be square and non-empty");
  }
  if (h.cols() != s.rows() || h_e.cols() != s.rows()) {
    throw argument_error("channel matrices must have S's column dimension");
  }
  if ((s - s.transpose()).cwiseAbs().maxCoeff() > 1e-9) {
    throw argument_error("constraint S must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  if (es.eigenvalues().minCoeff() < -1e-9) {
    throw argument_error("constraint S must be positive semidefinite");
  }
}

double mimome_objective(const MimomeInstance& inst, const Eigen::MatrixXd& k) {
  const auto m = inst.s.rows();
  if (k.rows() != m || k.cols() != m) {
    throw argument_error("covariance dimension mismatch");
  }
  const Eigen::MatrixXd dest =
      Eigen::MatrixXd::Identity(inst.h.rows(), inst.h.rows()) +
      inst.h * k * inst.h.transpose();
  const Eigen::MatrixXd eave =
      Eigen::MatrixXd::Identity(inst.h_e.rows(), inst.h_e.rows()) +
      inst.h_e * k * inst.h_e.transpose();
  return 0.5 * (logdet2_psd(dest) - logdet2_psd(eave));
}

MimomeResult mimome_secrecy(const MimomeInstance& inst,
                            const SearchConfig& config) {
  const std::size_t m = inst.input_dim();

  // S^(1/2) with eigenvalues clipped at zero.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(inst.s);
  const Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
  const Eigen::MatrixXd s_half = es.eigenvectors() *
                                 clipped.cwiseSqrt().asDiagonal() *
                                 es.eigenvectors().transpose();

  const std::size_t n_angles = m * (m - 1) / 2;
  const std::size_t dim = n_angles + m;
  std::vector<double> lo(dim, 0.0), hi(dim, 0.0);
  for (std::size_t i = 0; i < n_angles; ++i) hi[i] = std::numbers::pi;
  for (std::size_t i = n_angles; i < dim; ++i) hi[i] = 1.0;

  auto k_of = [&](std::span<const double> p) {
    const Eigen::MatrixXd r = rotation_from_angles(p.subspan(0, n_angles), m);
    Eigen::VectorXd mu(m);
    for (std::size_t i = 0; i < m; ++i) mu[i] = p[n_angles + i];
    const Eigen::MatrixXd inner = r * mu.asDiagonal() * r.transpose();
    return Eigen::MatrixXd(s_half * inner * s_half);
  };
  const auto objective = [&](std::span<const double> p) {
    return mimome_objective(inst, k_of(p));
  };

  const BoxSearchResult r = maximize_over_box(objective, lo, hi, config);
  MimomeResult result;
  result.rate = r.value;
  result.k_x = k_of(r.point);
  result.trace = r.trace;
  return result;
}

}  // namespace relaysec
