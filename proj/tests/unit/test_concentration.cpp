#include <cmath>
#include <numbers>

#include <boost/math/distributions/binomial.hpp>
#include <gtest/gtest.h>

#include "qchaos/channels.hpp"
#include "qchaos/concentration.hpp"
#include "qchaos/ensembles.hpp"
#include "qchaos/linalg.hpp"
#include "test_util.hpp"

using namespace qchaos;

namespace {

constexpr double kPi = std::numbers::pi;

// exact P(|2X - n| >= n eps) for X ~ Bin(n, 1/2)
double binomial_tail(int n, double eps) {
  boost::math::binomial_distribution<double> d(n, 0.5);
  double s = 0;
  for (int k = 0; k <= n; ++k)
    if (std::abs(2.0 * k - n) >= n * eps - 1e-12) s += boost::math::pdf(d, k);
  return s;
}

KrausSet qubit_depolarizing(double p) {
  std::vector<Mat> ops;
  Mat I = Mat::Identity(2, 2), X = Mat::Zero(2, 2), Y = Mat::Zero(2, 2), Z = Mat::Zero(2, 2);
  X(0, 1) = X(1, 0) = 1;
  Y(0, 1) = cplx(0, -1);
  Y(1, 0) = cplx(0, 1);
  Z(0, 0) = 1;
  Z(1, 1) = -1;
  ops.push_back(std::sqrt(1 - 3 * p / 4) * I);
  for (const Mat& P : {X, Y, Z}) ops.push_back(std::sqrt(p / 4) * P);
  return make_kraus(ops);
}

KrausSet full_depolarizing(int N) {
  std::vector<Mat> ops;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Mat k = Mat::Zero(N, N);
      k(i, j) = 1 / std::sqrt(static_cast<double>(N));
      ops.push_back(k);
    }
  return make_kraus(ops);
}

double h2(double x) { return -x * std::log(x) - (1 - x) * std::log(1 - x); }

}  // namespace

TEST(Hoeffding, BoundAndExactTail) {
  std::vector<double> eps = {0.05, 0.1, 0.2, 0.3};
  auto r = hoeffding_demo(100, eps, 20000, 4);
  EXPECT_TRUE(r.bounds_hold());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    double p = binomial_tail(100, eps[i]);
    double se = std::sqrt(p * (1 - p) / 20000);
    EXPECT_TRUE(WithinSigma(r.empirical[i], se, p, 4.0)) << eps[i];
    EXPECT_NEAR(r.bound[i], 2 * std::exp(-100 * eps[i] * eps[i] / 2), 1e-15);
    if (i > 0) EXPECT_LE(r.empirical[i], r.empirical[i - 1]);
  }
  EXPECT_THROW(hoeffding_demo(0, eps, 10, 1), std::invalid_argument);
}

TEST(Equator, DensityAndCdf) {
  for (int n : {1, 2, 4, 9})
    EXPECT_NEAR(stats::integrate([n](double t) { return equator_density(n, t); }, 0, kPi), 1.0, 1e-9);
  // n = 2: uniform on S^2, cdf (1 - cos)/2
  for (double t : {0.3, 1.0, 2.5}) EXPECT_NEAR(equator_cdf(2, t), (1 - std::cos(t)) / 2, 1e-12);
  EXPECT_NEAR(equator_cdf(7, kPi / 2), 0.5, 1e-12);
}

TEST(Equator, SampledAngles) {
  auto r = fat_equator(4, 20000, 3);
  EXPECT_LT(r.ks, 0.015);
  for (std::size_t i = 0; i < r.eps.size(); ++i) EXPECT_LE(r.band_empirical[i], r.band_bound[i]);
  // thinner in higher dimension
  auto big = fat_equator(100, 4000, 3);
  EXPECT_LT(big.band_empirical[3], r.band_empirical[3]);
}

TEST(Levy, EntropyConcentration) {
  auto r8 = entropy_concentration(8, 800, 1);
  auto r16 = entropy_concentration(16, 800, 2);
  EXPECT_TRUE(r8.bounds_hold());
  EXPECT_TRUE(r16.bounds_hold());
  EXPECT_LT(r16.sd, r8.sd);
  double page = 0;
  for (int k = 17; k <= 256; ++k) page += 1.0 / k;
  page -= 15.0 / 32;
  EXPECT_NEAR(r16.mean, page, 0.01);
  EXPECT_NEAR(r16.eta, 2 * kPi * std::log(16.0), 1e-12);
  EXPECT_NEAR(levy_entropy_bound(16, 0.1), 2 * std::exp(-255 * 0.01 / (2 * r16.eta * r16.eta)), 1e-15);
}

TEST(MinEntropy, UnitaryChannelIsPure) {
  auto r = min_output_entropy(make_kraus({sample_cue(4, 1).m}), 4, 50, 2);
  EXPECT_LT(r.value, 1e-6);
}

TEST(MinEntropy, FullDepolarizing) {
  auto r = min_output_entropy(full_depolarizing(3), 3, 20, 2);
  EXPECT_NEAR(r.value, std::log(3.0), 1e-9);
}

TEST(MinEntropy, QubitDepolarizingClosedForm) {
  double p = 0.4;
  auto r = min_output_entropy(qubit_depolarizing(p), 8, 100, 5);
  EXPECT_NEAR(r.value, h2(p / 2), 1e-6);
}

TEST(MinEntropy, BelowRandomProbesAndMonotone) {
  KrausSet k = random_kraus(4, 3, 9);
  auto r = min_output_entropy(k, 12, 150, 3);
  for (std::uint64_t s = 0; s < 50; ++s) EXPECT_LE(r.value, output_entropy(k, sample_haar_state(4, s)) + 1e-12);
  for (std::size_t i = 1; i < r.best_after_restart.size(); ++i)
    EXPECT_LE(r.best_after_restart[i], r.best_after_restart[i - 1]);
  EXPECT_NEAR(output_entropy(k, r.state), r.value, 1e-12);
}

TEST(MinEntropy, UnitaryRotationInvariance) {
  KrausSet k = random_kraus(3, 2, 4);
  Mat V = sample_cue(3, 8).m, W = sample_cue(3, 9).m;
  std::vector<Mat> rot;
  for (const Mat& K : k.K) rot.push_back(W * K * V);
  double a = min_output_entropy(k, 16, 200, 1).value;
  double b = min_output_entropy(make_kraus(rot), 16, 200, 1).value;
  EXPECT_NEAR(a, b, 1e-5);
}

TEST(TensorImage, MatchesDirectConstruction) {
  const int N = 3;
  KrausSet k = random_kraus(N, 2, 14);
  Vec phi = Vec::Zero(N * N);
  for (int i = 0; i < N; ++i) phi(i * N + i) = 1 / std::sqrt(static_cast<double>(N));
  Mat rho = phi * phi.adjoint(), out = Mat::Zero(N * N, N * N);
  for (const Mat& A : k.K)
    for (const Mat& B : k.K) {
      Mat T = linalg::kron(A, B.conjugate());
      out += T * rho * T.adjoint();
    }
  RVec direct = linalg::eigvalsh(out);
  RVec gram = tensor_image_spectrum(k);
  EXPECT_NEAR(gram.sum(), 1.0, 1e-12);
  EXPECT_NEAR(direct.maxCoeff(), gram.maxCoeff(), 1e-12);
  EXPECT_NEAR(linalg::entropy_of(direct), linalg::entropy_of(gram), 1e-10);
}

TEST(Bh, MixedUnitaryChannelsPass) {
  auto r = bh_inequality_check(64, 4, 20, 7);
  EXPECT_EQ(r.entropy_pass_fraction, 1.0);
  EXPECT_EQ(r.norm_pass_fraction, 1.0);
  EXPECT_NEAR(r.bound, 2 * std::log(4.0) - std::log(4.0) / 4, 1e-15);
  auto one = bh_inequality_check(16, 1, 3, 7);
  EXPECT_EQ(one.entropy_pass_fraction, 1.0);
  for (double s : one.entropy) EXPECT_NEAR(s, 0.0, 1e-9);
}

TEST(Holevo, LimitingChannels) {
  const int N = 4;
  std::vector<Mat> states;
  std::vector<double> probs(N, 1.0 / N);
  for (int i = 0; i < N; ++i) {
    Mat r = Mat::Zero(N, N);
    r(i, i) = 1;
    states.push_back(r);
  }
  EXPECT_NEAR(holevo_fixed_ensemble(make_kraus({Mat::Identity(N, N)}), states, probs), std::log(4.0), 1e-12);
  EXPECT_NEAR(holevo_fixed_ensemble(full_depolarizing(N), states, probs), 0.0, 1e-12);
  EXPECT_GE(holevo_fixed_ensemble(random_kraus(N, 3, 2), states, probs), 0.0);
  EXPECT_THROW(holevo_fixed_ensemble(full_depolarizing(N), states, {0.5}), std::invalid_argument);
}
