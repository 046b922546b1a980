#include "ebnoise/separability.hpp"

#include <random>

#include "ebnoise/errors.hpp"
#include "ebnoise/fixtures.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace ebnoise;

TEST(separability, werner_threshold) {
  // (1 - mu) psi+ + mu 1/4 is separable iff mu >= 2/3
  EXPECT_FALSE(is_separable(werner_state(0.0)));
  EXPECT_FALSE(is_separable(werner_state(2.0 / 3.0 - 1e-6)));
  EXPECT_TRUE(is_separable(werner_state(2.0 / 3.0)));
  EXPECT_TRUE(is_separable(werner_state(0.9)));
  EXPECT_NEAR(ppt_witness(werner_state(0.0)).min_pt_eigenvalue, -0.5, 1e-12);
}

TEST(separability, witness_matches_oracle) {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 50; ++it) {
    const auto ops = oracle::random_kraus(rng, 1 + it % 4);
    const Channel c = KrausChannel(ops);
    const auto g = oracle::choi([&](const Mat2c& x) { return oracle::apply_kraus(ops, x); });
    const auto w = ppt_witness(ChoiState(choi(c)));
    ASSERT_NEAR(w.min_pt_eigenvalue, oracle::min_eigenvalue<4>(oracle::partial_transpose_second(g)), 1e-9);
    ASSERT_EQ(is_eb(c), oracle::entanglement_breaking([&](const Mat2c& x) { return oracle::apply_kraus(ops, x); }));
  }
}

TEST(separability, determinant_sign_agrees_with_eigenvalue) {
  // for two qubits the partial transpose has at most one negative eigenvalue
  std::mt19937_64 rng(22);
  for (int it = 0; it < 50; ++it) {
    const auto w = ppt_witness(ChoiState(choi(Channel(KrausChannel(oracle::random_kraus(rng, 2))))));
    if (w.min_pt_eigenvalue < -1e-6) ASSERT_LT(w.pt_determinant, 0.0);
  }
}

TEST(separability, choi_state_validation) {
  HermitianMat4 g = HermitianMat4::Identity() / 4.0;
  EXPECT_NO_THROW(ChoiState{g});
  EXPECT_THROW(ChoiState(HermitianMat4(g * 2.0)), InvariantError);
  HermitianMat4 neg = g;
  neg(0, 0) = -0.25;
  neg(1, 1) = 0.75;
  EXPECT_THROW(ChoiState{neg}, InvariantError);
  HermitianMat4 nh = g;
  nh(0, 1) = 0.1;
  EXPECT_THROW(ChoiState{nh}, InvariantError);
}

TEST(separability, unital_trace_norm_route_agrees_with_choi) {
  std::mt19937_64 rng(23);
  int eb = 0;
  for (int it = 0; it < 300; ++it) {
    const Channel c = UnitalChannel(oracle::random_cp_unital(rng));
    const double tn = trace_norm(std::get<UnitalChannel>(c).t());
    if (std::abs(tn - 1.0) < 1e-8) continue;
    ASSERT_EQ(is_eb(c), is_eb_by_choi(c));
    eb += is_eb(c);
  }
  EXPECT_GT(eb, 0);
}

TEST(separability, measure_and_prepare_is_eb) {
  // rho -> sum_k <k|rho|k> sigma_k with arbitrary output states
  const Mat2c s0 = oracle::density(Vec3(0.3, 0.2, 0.9));
  const Mat2c s1 = oracle::density(Vec3(-0.6, 0.1, 0.1));
  std::vector<Mat2c> ops;
  for (int k = 0; k < 2; ++k) {
    const Mat2c sigma = k == 0 ? s0 : s1;
    Eigen::SelfAdjointEigenSolver<Mat2c> es(sigma);
    for (int j = 0; j < 2; ++j) {
      Mat2c op = Mat2c::Zero();
      op.col(k) = std::sqrt(std::max(0.0, es.eigenvalues()(j))) * es.eigenvectors().col(j);
      ops.push_back(op);
    }
  }
  EXPECT_TRUE(is_eb(Channel(KrausChannel(ops))));
  EXPECT_FALSE(is_eb(Channel(UnitalChannel(RealMat3::Identity()))));
}

TEST(separability, noisy_choi_monotone_in_mu) {
  std::mt19937_64 rng(24);
  for (int it = 0; it < 20; ++it) {
    const Channel c = KrausChannel(oracle::random_kraus(rng, 2));
    const Mat2c rho0 = oracle::density(oracle::random_bloch(rng));
    bool seen = false;
    for (int i = 0; i <= 50; ++i) {
      const bool sep = is_separable(noisy_choi(c, rho0, i / 50.0));
      ASSERT_TRUE(!seen || sep);
      seen = seen || sep;
    }
  }
}

TEST(separability, noisy_choi_endpoints) {
  const Channel c = GadParams(0.3, 0.2);
  const Mat2c rho0 = oracle::density(Vec3(0, 0, 0.4));
  EXPECT_LT((noisy_choi(c, rho0, 0.0).g() - choi(c)).cwiseAbs().maxCoeff(), 1e-15);
  HermitianMat4 product = HermitianMat4::Zero();
  for (int a = 0; a < 2; ++a)
    for (int ap = 0; ap < 2; ++ap)
      for (int b = 0; b < 2; ++b) product(2 * a + b, 2 * ap + b) = 0.5 * rho0(a, ap);
  EXPECT_LT((noisy_choi(c, rho0, 1.0).g() - product).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_THROW(noisy_choi(c, rho0, 1.5), InvariantError);
}
