#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "relaysec/errors.hpp"
#include "relaysec/gaussian_joint.hpp"
#include "relaysec/info_measures.hpp"
#include "test_support.hpp"

using namespace relaysec;
using testsup::Rng;

namespace {

using Axes = std::vector<FiniteAlphabet>;
using Idx = std::vector<std::size_t>;

JointPmf bsc_joint(double flip) {
  // Uniform input, binary symmetric coupling.
  Axes axes{FiniteAlphabet(2), FiniteAlphabet(2)};
  std::vector<double> t{0.5 * (1 - flip), 0.5 * flip, 0.5 * flip,
                        0.5 * (1 - flip)};
  return JointPmf(axes, t);
}

}  // namespace

TEST_CASE("entropy on simple pmfs") {
  JointPmf uni = JointPmf::uniform({FiniteAlphabet(2)});
  CHECK(entropy(uni, Idx{0}) == doctest::Approx(1.0).epsilon(1e-12));

  JointPmf point = JointPmf::point_mass({FiniteAlphabet(3)}, Idx{1});
  CHECK(entropy(point, Idx{0}) == 0.0);

  JointPmf skew({FiniteAlphabet(2)}, {0.9, 0.1});
  CHECK(entropy(skew, Idx{0}) == doctest::Approx(0.468996).epsilon(1e-5));
}

TEST_CASE("entropy argument validation") {
  JointPmf uni = JointPmf::uniform({FiniteAlphabet(2), FiniteAlphabet(2)});
  CHECK_THROWS_AS(entropy(uni, Idx{2}), argument_error);
  CHECK_THROWS_AS(entropy(uni, Idx{}), argument_error);
  CHECK_THROWS_AS(entropy(uni, Idx{0, 0}), argument_error);
}

TEST_CASE("pmf construction validation") {
  CHECK_THROWS_AS(JointPmf({FiniteAlphabet(2)}, {0.7, 0.2}), argument_error);
  CHECK_THROWS_AS(JointPmf({FiniteAlphabet(2)}, {1.2, -0.2}), argument_error);
  CHECK_THROWS_AS(JointPmf({FiniteAlphabet(2)}, {0.5, 0.5, 0.0}),
                  argument_error);
  CHECK_THROWS_AS(FiniteAlphabet(2, {"a"}), argument_error);
}

TEST_CASE("mutual information on simple pmfs") {
  JointPmf indep = JointPmf::uniform({FiniteAlphabet(2), FiniteAlphabet(2)});
  CHECK(mutual_information(indep, Idx{0}, Idx{1}) == 0.0);

  // B a copy of A.
  JointPmf copy({FiniteAlphabet(2), FiniteAlphabet(2)}, {0.5, 0, 0, 0.5});
  CHECK(mutual_information(copy, Idx{0}, Idx{1}) ==
        doctest::Approx(1.0).epsilon(1e-12));

  CHECK(mutual_information(bsc_joint(0.11), Idx{0}, Idx{1}) ==
        doctest::Approx(0.5).epsilon(2e-3));

  CHECK_THROWS_AS(mutual_information(copy, Idx{0}, Idx{0}), argument_error);
  CHECK_THROWS_AS(mutual_information(copy, Idx{0}, Idx{1}, Idx{1}),
                  argument_error);
}

TEST_CASE("chain rule on random pmfs") {
  Rng rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t na = 2 + rng.index(3);
    const std::size_t nb = 2 + rng.index(3);
    const std::size_t nb2 = 2 + rng.index(3);
    const std::size_t nc = 1 + rng.index(3);
    JointPmf pmf = testsup::random_pmf(
        rng, {FiniteAlphabet(na), FiniteAlphabet(nb), FiniteAlphabet(nb2),
              FiniteAlphabet(nc)});
    const double lhs = mutual_information(pmf, Idx{0}, Idx{1, 2}, Idx{3});
    const double rhs = mutual_information(pmf, Idx{0}, Idx{1}, Idx{3}) +
                       mutual_information(pmf, Idx{0}, Idx{2}, Idx{3, 1});
    CHECK(std::abs(lhs - rhs) < 1e-9);
    CHECK(lhs >= 0.0);
  }
}

TEST_CASE("data processing on random Markov chains") {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t na = 2 + rng.index(3);
    const std::size_t nb = 2 + rng.index(3);
    const std::size_t nc = 2 + rng.index(3);
    // p(a) p(b|a) p(c|b)
    const auto pa = testsup::random_simplex(rng, na);
    std::vector<std::vector<double>> pba(na), pcb(nb);
    for (auto& row : pba) row = testsup::random_simplex(rng, nb);
    for (auto& row : pcb) row = testsup::random_simplex(rng, nc);
    std::vector<double> table(na * nb * nc);
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t c = 0; c < nc; ++c)
          table[(a * nb + b) * nc + c] = pa[a] * pba[a][b] * pcb[b][c];
    JointPmf pmf({FiniteAlphabet(na), FiniteAlphabet(nb), FiniteAlphabet(nc)},
                 table);
    const double iac = mutual_information(pmf, Idx{0}, Idx{2});
    const double iab = mutual_information(pmf, Idx{0}, Idx{1});
    CHECK(iac <= iab + 1e-9);
  }
}

TEST_CASE("gaussian capacity") {
  CHECK(gaussian_capacity(0.0) == 0.0);
  CHECK(gaussian_capacity(1.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(gaussian_capacity(3.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(gaussian_capacity(-0.1), argument_error);
}

TEST_CASE("gaussian mutual information basics") {
  // Block-diagonal: A independent of B.
  Eigen::MatrixXd cov = Eigen::MatrixXd::Identity(3, 3);
  cov(0, 0) = 2.0;
  GaussianJoint j(cov);
  CHECK(gaussian_mutual_information(j, Idx{0}, Idx{1, 2}) == 0.0);

  // Scalar additive noise channel agrees with gaussian_capacity to 1e-12.
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const double s = rng.uniform(0.05, 10.0);
    Eigen::MatrixXd c(2, 2);
    c << s, s, s, s + 1.0;
    GaussianJoint xy(c);
    const double mi = gaussian_mutual_information(xy, Idx{0}, Idx{1});
    CHECK(std::abs(mi - gaussian_capacity(s)) < 1e-12);
  }

  // Y = X_D + X_2 + Z, unit variances, zero correlation: 0.5*log2(3).
  Eigen::MatrixXd c3(3, 3);
  c3 << 1, 0, 1,  //
      0, 1, 1,    //
      1, 1, 3;
  GaussianJoint sum(c3);
  CHECK(gaussian_mutual_information(sum, Idx{0, 1}, Idx{2}) ==
        doctest::Approx(0.79248).epsilon(1e-5));
}

TEST_CASE("gaussian joint validation and ridge rule") {
  Eigen::MatrixXd asym(2, 2);
  asym << 1, 0.5, 0.2, 1;
  CHECK_THROWS_AS(GaussianJoint{asym}, argument_error);

  Eigen::MatrixXd indef(2, 2);
  indef << 1, 2, 2, 1;  // eigenvalues 3, -1
  CHECK_THROWS_AS(GaussianJoint{indef}, numeric_error);

  // A variable identically zero keeps MI finite and consistent.
  Eigen::MatrixXd c(3, 3);
  c << 0, 0, 0,  //
      0, 1, 1,   //
      0, 1, 2;
  GaussianJoint degenerate(c);
  CHECK(gaussian_mutual_information(degenerate, Idx{0}, Idx{2}) == 0.0);
  CHECK(gaussian_mutual_information(degenerate, Idx{1}, Idx{2}, Idx{0}) ==
        doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("gaussian MI named variables") {
  Eigen::MatrixXd c(2, 2);
  c << 1, 1, 1, 2;
  GaussianJoint j(c, {"x", "y"});
  CHECK(j.index_of("y") == 1);
  CHECK_THROWS_AS(j.index_of("z"), argument_error);
}
