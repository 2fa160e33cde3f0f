#pragma once

#include <Eigen/Dense>

#include "relaysec/box_search.hpp"

namespace relaysec {

/// Multi-antenna wiretap instance: destination channel H (k x m),
/// eavesdropper channel H_e (t x m) and the covariance constraint S (m x m,
/// positive semidefinite). The input covariance ranges over 0 <= K_X <= S.
struct MimomeInstance {
  Eigen::MatrixXd h;
  Eigen::MatrixXd h_e;
  Eigen::MatrixXd s;

  MimomeInstance(Eigen::MatrixXd h_in, Eigen::MatrixXd he_in,
                 Eigen::MatrixXd s_in);
  std::size_t input_dim() const { return static_cast<std::size_t>(s.rows()); }
};

/// The log-det difference in bits at a fixed input covariance:
///   (1/2) log2 det(I + H K H^T) - (1/2) log2 det(I + H_e K H_e^T).
double mimome_objective(const MimomeInstance& inst, const Eigen::MatrixXd& k);

struct MimomeResult {
  double rate = 0.0;
  Eigen::MatrixXd k_x;
  SearchTrace trace;
};

/// Best found value of the secrecy objective over 0 <= K_X <= S. The
/// feasible set is parameterized as K = S^(1/2) R diag(mu) R^T S^(1/2) with
/// mu in [0,1]^m and R a product of Givens rotations, so every searched
/// point is feasible and the result is a certified lower bound on the
/// maximum.
MimomeResult mimome_secrecy(const MimomeInstance& inst,
                            const SearchConfig& config = {});

}  // namespace relaysec
