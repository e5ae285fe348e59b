#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qchaos/bipartite.hpp"
#include "qchaos/ensembles.hpp"
#include "qchaos/linalg.hpp"
#include "qchaos/operator_ent.hpp"
#include "qchaos/rng.hpp"
#include "test_util.hpp"

using namespace qchaos;

namespace {

constexpr double kPi = std::numbers::pi;

Mat swap_op(int N) {
  Mat S = Mat::Zero(N * N, N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) S(j * N + i, i * N + j) = 1;
  return S;
}

Mat cnot() {
  Mat C = Mat::Zero(4, 4);
  C(0, 0) = C(1, 1) = 1;
  C(2, 3) = C(3, 2) = 1;
  return C;
}

// power series, kept apart from the library's cyl_bessel_j
double j0_series(double x) {
  double term = 1, s = 1;
  for (int k = 1; k < 60; ++k) {
    term *= -(x * x / 4) / (static_cast<double>(k) * k);
    s += term;
  }
  return s;
}

}  // namespace

TEST(Realign, ProductHasRankOneAndSwapIsFixed) {
  Rng rng(3);
  Mat A = cue(rng, 3), B = cue(rng, 3);
  Mat R = realign(linalg::kron(A, B), 3);
  RVec sv = linalg::svdvals(R);
  EXPECT_NEAR(sv[0] * sv[0], 9.0, 1e-10);
  for (int k = 1; k < sv.size(); ++k) EXPECT_LT(sv[k], 1e-10);
  EXPECT_LT(linalg::max_abs(realign(swap_op(4), 4) - swap_op(4)), 1e-15);
}

TEST(Realign, IsAnInvolution) {
  Rng rng(5);
  Mat U = cue(rng, 9);
  EXPECT_LT(linalg::max_abs(realign(realign(U, 3), 3) - U), 1e-15);
  EXPECT_LT(linalg::max_abs(op_partial_transpose(op_partial_transpose(U, 3), 3) - U), 1e-15);
}

TEST(Realign, PartialTransposeIsRealignOfUS) {
  // equal up to a column swap, so the singular values agree
  Rng rng(6);
  Mat U = cue(rng, 16);
  EXPECT_LT(linalg::max_abs(op_partial_transpose(U, 4) * swap_op(4) - realign(U * swap_op(4), 4)), 1e-13);
}

TEST(OperatorEnt, SchmidtValuesSumToN2) {
  Rng rng(7);
  auto s = operator_entanglements(cue(rng, 25), 5);
  double a = 0, b = 0;
  for (double v : s.lambda) a += v;
  for (double v : s.mu) b += v;
  EXPECT_NEAR(a, 25.0, 1e-9);
  EXPECT_NEAR(b, 25.0, 1e-9);
  EXPECT_GE(s.E_U, 0.0);
  EXPECT_LE(s.E_U, swap_entanglement(5) + 1e-12);
}

TEST(OperatorEnt, SwapAndCnotValues) {
  for (int N : {2, 3, 5}) {
    auto r = entangling_power(swap_op(N), N);
    EXPECT_NEAR(r.E_U, 1 - 1.0 / (N * N), 1e-12);
    EXPECT_NEAR(r.E_US, 0.0, 1e-12);
    EXPECT_NEAR(r.e_p, 0.0, 1e-12);
    EXPECT_NEAR(r.g_t, 1.0, 1e-12);
  }
  auto c = entangling_power(cnot(), 2);
  EXPECT_NEAR(c.E_U, 0.5, 1e-12);
  EXPECT_NEAR(c.E_US, 0.75, 1e-12);
  EXPECT_NEAR(c.e_p, 2.0 / 3.0, 1e-12);
}

TEST(OperatorEnt, RejectsNonUnitary) {
  Mat A = Mat::Identity(9, 9);
  A(0, 0) = 2;
  EXPECT_THROW(entangling_power(A, 3), NumericalValidationError);
  EXPECT_THROW(entangling_power(Mat::Identity(8, 8), 3), std::invalid_argument);
}

TEST(OperatorEnt, HaarAveragesAtN4) {
  std::vector<double> ep, gt;
  for (int s = 0; s < 400; ++s) {
    auto r = entangling_power(sample_cue(16, 100 + s).m, 4);
    ep.push_back(r.e_p);
    gt.push_back(r.g_t);
  }
  EXPECT_TRUE(SampleWithinSigma(ep, 15.0 / 17.0));
  EXPECT_TRUE(SampleWithinSigma(gt, 0.5));
  EXPECT_DOUBLE_EQ(haar_entangling_power(4), 15.0 / 17.0);
}

TEST(OperatorEnt, MonteCarloMatchesClosedForm) {
  Mat U = sample_cue(9, 11).m;
  double exact = entangling_power(U, 3).e_p;
  // sample mean of a bounded quantity, 20000 pairs; se well under 0.01
  std::vector<double> chunks;
  for (int c = 0; c < 20; ++c) chunks.push_back(entangling_power_mc(U, 3, 1000, 50 + c));
  EXPECT_TRUE(SampleWithinSigma(chunks, exact, 4.0));
  EXPECT_NEAR(entangling_power_mc(cnot(), 2, 20000, 9), 2.0 / 3.0, 0.02);
}

TEST(OperatorEnt, LocalUnitaryInvariance) {
  auto rep = lu_invariance_check(sample_cue(16, 21).m, 4, 8, 22);
  EXPECT_TRUE(rep.pass) << rep.max_dE << " " << rep.max_dep << " " << rep.max_dgt;
}

TEST(OperatorEnt, DualUnitarity) {
  EXPECT_TRUE(is_dual_unitary(swap_op(3), 3));
  EXPECT_FALSE(is_dual_unitary(Mat::Identity(9, 9), 3));
  EXPECT_FALSE(is_dual_unitary(cnot(), 2));
  // S times a diagonal phase gate stays dual unitary
  Mat D = Mat::Zero(4, 4);
  for (int k = 0; k < 4; ++k) D(k, k) = std::polar(1.0, 0.3 * k * k);
  EXPECT_TRUE(is_dual_unitary(swap_op(2) * D, 2));
}

TEST(Thermalization, CompositionMatchesCurve) {
  double ref = haar_entangling_power(3);
  auto curve = thermalization_curve(0.2, ref, 6);
  EXPECT_NEAR(curve[0], 0.2, 1e-15);
  EXPECT_NEAR(curve[1], composition_average(0.2, 0.2, ref), 1e-15);
  EXPECT_NEAR(curve[2], composition_average(curve[1], 0.2, ref), 1e-14);
  for (std::size_t k = 1; k < curve.size(); ++k) {
    EXPECT_GT(curve[k], curve[k - 1]);
    EXPECT_LT(curve[k], ref);
  }
}

TEST(Thermalization, MonteCarloFollowsRecursion) {
  // weak coupling on 8 x 8: e_p(U) is small, so the approach is slow
  CoupledMapParams p;
  p.N = 8;
  p.b = 0.3;
  Mat U = build_coupled_map(p).U;
  double x = entangling_power(U, 8).e_p;
  auto mc = thermalization_mc(U, 8, 6, 200, 31);
  auto curve = thermalization_curve(x, haar_entangling_power(8), 6);
  // n = 1 is exact (local invariance), hence the absolute floor
  for (int n = 0; n < 6; ++n) EXPECT_NEAR(mc.mean[n], curve[n], 4 * mc.se[n] + 1e-12) << "n=" << n + 1;
}

TEST(CoupledMap, UncoupledIsLocal) {
  CoupledMapParams p;
  p.N = 6;
  p.b = 0.0;
  Mat U = build_coupled_map(p).U;
  EXPECT_NEAR(entangling_power(U, 6).e_p, 0.0, 1e-12);
  EXPECT_NEAR(coupling_entangling_power(p), 0.0, 1e-12);
  EXPECT_NEAR(lambda_parameter(64, 0.0), 0.0, 1e-15);
}

TEST(CoupledMap, ReducedFormulaMatchesFullOperator) {
  CoupledMapParams p;
  p.N = 12;
  p.b = 0.4;
  double full = entangling_power(build_coupled_map(p).U, 12).e_p;
  EXPECT_NEAR(coupling_entangling_power(p), full, 1e-10);
  EXPECT_LT(linalg::unitarity_residual(build_coupled_map(p).U), 1e-12);
}

TEST(CoupledMap, BesselFormWithinTwoPercent) {
  CoupledMapParams p;
  p.N = 64;
  p.b = 0.01;
  double direct = coupling_entangling_power(p);
  double bessel = coupling_entangling_power_bessel(64, 0.01);
  EXPECT_NEAR(direct, bessel, 0.02 * bessel);
}

TEST(CoupledMap, DenseGuard) {
  CoupledMapParams p;
  p.N = 65;
  EXPECT_THROW(build_coupled_map(p), std::invalid_argument);
}

TEST(Lambda, ValuesAndSmallCouplingLimit) {
  const int N = 500;
  const double b = 0.01;
  double j0 = j0_series(N * b / (2 * kPi));
  double oracle = N * N / (4 * kPi * kPi) * (1 - j0 * j0);
  EXPECT_NEAR(lambda_parameter(N, b), oracle, 1e-9 * oracle);
  // order of magnitude 2e3 at this point
  EXPECT_GT(lambda_parameter(N, b), 1.5e3);
  EXPECT_LT(lambda_parameter(N, b), 2.5e3);
  const double bs = 0.05 / N;
  EXPECT_NEAR(lambda_parameter(N, bs), lambda_small_b(N, bs), 0.01 * lambda_small_b(N, bs));
}

TEST(Evolution, FftMatchesDenseOperator) {
  CoupledMapParams p;
  p.N = 10;
  p.b = 0.5;
  auto series = entanglement_evolution(p, InitialKind::CoherentProduct, 5, 1);
  Mat U = build_coupled_map(p).U;
  Vec psi = linalg::kron(coherent_state(10, 0.3, 0.2, p.alpha), coherent_state(10, 0.6, 0.7, p.alpha));
  for (int t = 0; t <= 5; ++t) {
    auto s = entropies(schmidt(psi / psi.norm(), 10, 10));
    EXPECT_NEAR(series.S_vN[t], s.S_vN, 1e-9) << "t=" << t;
    psi = U * psi;
  }
}

TEST(Evolution, UncoupledStaysProduct) {
  CoupledMapParams p;
  p.N = 32;
  p.b = 0;
  auto s = entanglement_evolution(p, InitialKind::RandomProduct, 10, 3);
  for (double v : s.S_vN) EXPECT_NEAR(v, 0.0, 1e-8);
}

TEST(Evolution, MarkovCurve) {
  EXPECT_NEAR(markov_s2(0.3, 16, 0), -std::log(2.0 / 16 + 1), 1e-15);
  EXPECT_NEAR(markov_s2(0.3, 16, 1e6), std::log(8.0), 1e-12);
  EXPECT_NEAR(std::pow(1 - 0.1, markov_time(0.1, 50)), 1.0 / 50, 1e-12);
}

TEST(Perturbative, ReferenceConstants) {
  auto r = perturbative_references(1e-4, 2.0, true);
  EXPECT_NEAR(r.S_vN_avg, 0.0557, 5e-5);
  EXPECT_NEAR(r.S_L_avg, r.S_vN_avg / 2, 1e-15);
  EXPECT_NEAR(r.S_L_quench, 8 * kPi * 0.01, 1e-14);
  auto coe = perturbative_references(1e-4, 2.0, false);
  EXPECT_NEAR(r.saturation / coe.saturation, kPi / std::sqrt(8.0), 1e-12);
  EXPECT_THROW(perturbative_references(-1, 0, true), std::invalid_argument);
}
