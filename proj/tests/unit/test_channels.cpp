#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qchaos/channels.hpp"
#include "qchaos/ensembles.hpp"
#include "qchaos/linalg.hpp"
#include "qchaos/rng.hpp"
#include "qchaos/stats.hpp"
#include "qchaos/torus_maps.hpp"
#include "test_util.hpp"

using namespace qchaos;

namespace {

constexpr double kPi = std::numbers::pi;

KrausSet depolarizing(int N) {
  std::vector<Mat> ops;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Mat k = Mat::Zero(N, N);
      k(i, j) = 1 / std::sqrt(static_cast<double>(N));
      ops.push_back(k);
    }
  return make_kraus(ops);
}

std::vector<Mat> paulis() {
  Mat I = Mat::Identity(2, 2), X = Mat::Zero(2, 2), Y = Mat::Zero(2, 2), Z = Mat::Zero(2, 2);
  X(0, 1) = X(1, 0) = 1;
  Y(0, 1) = cplx(0, -1);
  Y(1, 0) = cplx(0, 1);
  Z(0, 0) = 1;
  Z(1, 1) = -1;
  return {I, X, Y, Z};
}

Mat random_state(int N, std::uint64_t seed) { return sample_induced_state(N, N, seed); }

std::vector<double> bulk_moduli(const Vec& spec) {
  std::vector<double> m;
  for (Eigen::Index k = 1; k < spec.size(); ++k) m.push_back(std::abs(spec[k]));
  return m;
}

double quantile(std::vector<double> x, double q) {
  std::sort(x.begin(), x.end());
  return x[static_cast<std::size_t>(q * (x.size() - 1))];
}

// greedy nearest matching of two spectra of equal size
double spectrum_distance(const Vec& a, const Vec& b) {
  std::vector<bool> used(b.size(), false);
  double worst = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    double best = 1e300;
    Eigen::Index arg = -1;
    for (Eigen::Index j = 0; j < b.size(); ++j)
      if (!used[j] && std::abs(a[i] - b[j]) < best) {
        best = std::abs(a[i] - b[j]);
        arg = j;
      }
    used[arg] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

TEST(Representations, IdentityChoiIsMaximallyEntangled) {
  const int N = 4;
  auto b = make_bundle(make_kraus({Mat::Identity(N, N)}), false);
  Vec phi = Vec::Zero(N * N);
  for (int i = 0; i < N; ++i) phi(i * N + i) = 1.0 / std::sqrt(static_cast<double>(N));
  Mat expect = N * phi * phi.adjoint();
  EXPECT_LT(linalg::max_abs(b.choi - expect), 1e-14);
}

TEST(Representations, DepolarizingChoiIsFlat) {
  auto b = make_bundle(depolarizing(3), false);
  EXPECT_LT(linalg::max_abs(b.choi - Mat::Identity(9, 9) / 3.0), 1e-14);
}

TEST(Representations, RoundTrips) {
  auto c = random_channel(5, 3, 17, false);
  EXPECT_LT(linalg::max_abs(choi_to_superop(c.choi, 5, 5) - c.superop), 1e-12);
  KrausSet k = choi_to_kraus(c.choi, 5, 5);
  EXPECT_EQ(k.M(), 3);
  EXPECT_LT(linalg::max_abs(kraus_to_superop(k) - c.superop), 1e-8);
  // second pass is a fixed point
  KrausSet k2 = choi_to_kraus(superop_to_choi(kraus_to_superop(k), 5, 5), 5, 5);
  EXPECT_LT(linalg::max_abs(kraus_to_superop(k2) - c.superop), 1e-8);
}

TEST(Representations, SuperopActsOnRowMajorVec) {
  auto c = random_channel(3, 2, 4, false);
  Mat rho = random_state(3, 5);
  Vec v(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v(i * 3 + j) = rho(i, j);
  Vec w = c.superop * v;
  Mat out = apply_channel(c.kraus, rho);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(std::abs(w(i * 3 + j) - out(i, j)), 0.0, 1e-13);
}

TEST(Representations, NegativeChoiThrows) {
  Mat d = Mat::Identity(4, 4) / 2.0;
  d(0, 0) = -0.5;
  EXPECT_THROW(choi_to_kraus(d, 2, 2), NotCompletelyPositive);
}

TEST(Representations, TransposeIsNotCp) {
  // transposition: Psi swaps rho_ij and rho_ji
  Mat psi = Mat::Zero(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) psi(i * 2 + j, j * 2 + i) = 1;
  EXPECT_THROW(choi_to_kraus(superop_to_choi(psi, 2, 2), 2, 2), NotCompletelyPositive);
}

TEST(RandomChannel, CptpAndTraces) {
  for (int M : {1, 2, 9}) {
    auto c = random_channel(3, M, 100 + M);
    EXPECT_NO_THROW(validate_cptp(c));
    EXPECT_LT(trace_preservation_residual(c.kraus), 1e-12);
    EXPECT_NEAR(c.choi.trace().real(), 3.0, 1e-10);
    EXPECT_LT(linalg::max_abs(choi_trace_out(c.choi, 3, 3) - Mat::Identity(3, 3)), 1e-10);
    EXPECT_NEAR(std::abs(c.spectrum[0]), 1.0, 1e-8);
    for (Eigen::Index k = 0; k < c.spectrum.size(); ++k) EXPECT_LE(std::abs(c.spectrum[k]), 1.0 + 1e-9);
  }
}

TEST(RandomChannel, SingleKrausIsUnitary) {
  auto c = random_channel(6, 1, 8);
  for (Eigen::Index k = 0; k < c.spectrum.size(); ++k) EXPECT_NEAR(std::abs(c.spectrum[k]), 1.0, 1e-9);
}

TEST(RandomChannel, SpectrumClosedUnderConjugation) {
  auto c = random_channel(4, 3, 12);
  Vec conj = c.spectrum.conjugate();
  EXPECT_LT(spectrum_distance(c.spectrum, conj), 1e-9);
}

TEST(RandomChannel, FullRankBulkRadius) {
  auto c = random_channel(8, 64, 21);
  double r = std::abs(c.spectrum[1]);
  EXPECT_NEAR(r, 0.125, 0.3 * 0.125);
}

TEST(RandomChannel, FixedPointIsAState) {
  auto c = random_channel(5, 4, 3);
  Mat fp = fixed_point(c);
  EXPECT_NO_THROW(validate_density_matrix(fp));
  EXPECT_LT(linalg::max_abs(apply_channel(c.kraus, fp) - fp), 1e-10);
}

TEST(RandomChannel, ConvergenceRate) {
  auto c = random_channel(16, 16, 5);
  Mat rho0 = Mat::Zero(16, 16);
  rho0(0, 0) = 1;
  auto fit = convergence_rate(c, rho0, 12);
  EXPECT_GT(fit.predicted, 0);
  EXPECT_NEAR(fit.rate, fit.predicted, 0.25 * fit.predicted);
  for (std::size_t k = 1; k < fit.distance.size(); ++k) EXPECT_LT(fit.distance[k], fit.distance[k - 1]);
}

TEST(GinibreChoi, Traces) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    Mat d = random_choi_ginibre(4, s);
    EXPECT_LT(linalg::max_abs(choi_trace_out(d, 4, 4) - Mat::Identity(4, 4)), 1e-8);
    EXPECT_NEAR(d.trace().real(), 4.0, 1e-8);
    EXPECT_GT(linalg::eigvalsh(d).minCoeff(), -1e-8);
  }
}

TEST(GinibreChoi, GapMatchesEnvironmentConstruction) {
  std::vector<double> a, b;
  for (int s = 0; s < 200; ++s) {
    Mat d = random_choi_ginibre(8, 1000 + s);
    Vec sp = superop_spectrum(choi_to_superop(d, 8, 8));
    a.push_back(1 - std::abs(sp[1]));
    b.push_back(random_channel(8, 64, 5000 + s).gap);
  }
  EXPECT_LT(stats::ks_two_sample(a, b), 0.1);
}

TEST(Bloch, SpectrumMatchesAffineBlock) {
  auto c = random_channel(3, 2, 77);
  auto bl = bloch_affine(c.kraus);
  ASSERT_EQ(bl.C.rows(), 8);
  Vec ec = linalg::eigvals(bl.C.cast<cplx>());
  Vec full(9);
  full[0] = 1;
  full.tail(8) = ec;
  EXPECT_LT(spectrum_distance(c.spectrum, full), 1e-7);
}

TEST(Bloch, BasisIsOrthonormal) {
  auto L = gell_mann_basis(3);
  ASSERT_EQ(L.size(), 9u);
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = 0; j < L.size(); ++j)
      EXPECT_NEAR(std::abs((L[i] * L[j]).trace() - (i == j ? 1.0 : 0.0)), 0.0, 1e-13);
}

TEST(Bloch, PauliChannelIsUnital) {
  std::vector<Mat> ops;
  double w[4] = {0.5, 0.2, 0.2, 0.1};
  auto P = paulis();
  for (int k = 0; k < 4; ++k) ops.push_back(std::sqrt(w[k]) * P[k]);
  auto bl = bloch_affine(make_kraus(ops));
  EXPECT_LT(bl.kappa.cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Bloch, DepolarizingHasZeroC) {
  auto bl = bloch_affine(depolarizing(3));
  EXPECT_LT(bl.C.cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Bloch, UnitalThreeWayConsistency) {
  auto u = mixed_unitary_channel({0.6, 0.4}, {sample_cue(3, 1).m, sample_cue(3, 2).m}, false);
  auto n = random_channel(3, 2, 9, false);
  for (const auto* c : {&u, &n}) {
    bool k0 = bloch_affine(c->kraus).kappa.cwiseAbs().maxCoeff() < 1e-8;
    bool d0 = linalg::max_abs(choi_trace_in(c->choi, 3, 3) - Mat::Identity(3, 3)) < 1e-8;
    bool f0 = linalg::max_abs(apply_channel(c->kraus, Mat::Identity(3, 3)) - Mat::Identity(3, 3)) < 1e-8;
    EXPECT_EQ(k0, d0);
    EXPECT_EQ(k0, f0);
  }
  EXPECT_LT(bloch_affine(u.kraus).kappa.cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_GT(bloch_affine(n.kraus).kappa.cwiseAbs().maxCoeff(), 1e-3);
}

TEST(MixedUnitary, PaulisDepolarize) {
  auto c = mixed_unitary_channel({0.25, 0.25, 0.25, 0.25}, paulis(), false);
  for (std::uint64_t s = 0; s < 20; ++s) {
    Mat out = apply_channel(c.kraus, random_state(2, s));
    EXPECT_LT(linalg::max_abs(out - Mat::Identity(2, 2) / 2.0), 1e-14);
  }
}

TEST(MixedUnitary, PureUnitaryOnCircle) {
  auto c = mixed_unitary_channel({1.0, 0.0}, {sample_cue(5, 3).m, sample_cue(5, 4).m});
  for (Eigen::Index k = 0; k < c.spectrum.size(); ++k) EXPECT_NEAR(std::abs(c.spectrum[k]), 1.0, 1e-9);
}

TEST(MixedUnitary, TwoMembersGiveRing) {
  auto c = mixed_unitary_channel({0.7, 0.3}, {sample_cue(30, 5).m, sample_cue(30, 6).m});
  auto m = bulk_moduli(c.spectrum);
  EXPECT_GT(quantile(m, 0.01), 0.2);
  EXPECT_LT(quantile(m, 0.99), 0.95);
}

TEST(MixedUnitary, RejectsBadWeights) {
  EXPECT_THROW(mixed_unitary_channel({0.7, 0.4}, {sample_cue(2, 5).m, sample_cue(2, 6).m}), std::invalid_argument);
}

TEST(Kesten, ArcsineAtTwo) {
  for (double x : {0.05, 0.3, 1.0, 1.7, 1.95})
    EXPECT_NEAR(kesten_density(2, x), 1 / (kPi * std::sqrt(x * (2 - x))), 1e-12);
}

TEST(Kesten, Normalized) {
  // x = a sin^2 t removes the edge singularities
  for (int M : {2, 3, 10}) {
    const double a = 4.0 * (M - 1) / M;
    auto f = [&](double t) {
      double s = std::sin(t), c = std::cos(t);
      return kesten_density(M, a * s * s) * 2 * a * s * c;
    };
    EXPECT_NEAR(stats::integrate(f, 0, kPi / 2), 1.0, 1e-6) << M;
  }
  EXPECT_NEAR(kesten_cdf(3, 8.0 / 3.0), 1.0, 1e-10);
  EXPECT_NEAR(kesten_cdf(3, 0.0), 0.0, 1e-12);
}

TEST(Kesten, LargeMApproachesMarchenkoPastur) {
  for (int i = 0; i < 20; ++i) {
    double x = 0.2 + 3.3 * i / 19.0;
    double mp = std::sqrt(x * (4 - x)) / (2 * kPi * x);
    EXPECT_NEAR(kesten_density(200, x), mp, 0.02 * mp) << x;
  }
}

TEST(Kesten, EmpiricalSingularValues) {
  auto s = kesten_sample(5, 200, 2, 3);
  EXPECT_EQ(s.size(), 400u);
  EXPECT_LT(stats::ks_statistic(s, [](double x) { return kesten_cdf(5, x); }), 0.06);
}

TEST(Ring, RadiiValues) {
  auto r = ring_radii(0.57, 9);
  EXPECT_NEAR(r.R_plus, 0.470, 5e-4);
  EXPECT_NEAR(r.R_minus, 0.386, 5e-4);
  EXPECT_FALSE(r.disk);
  auto d = ring_radii(0.89, 40);
  EXPECT_TRUE(d.disk);
  EXPECT_NEAR(d.p_c, 0.863, 5e-4);
  EXPECT_GT(0.89, d.p_c);
  EXPECT_THROW(ring_radii(1.2, 3), std::invalid_argument);
  EXPECT_THROW(diluted_unitary(-0.1, 3, 4, 1), std::invalid_argument);
}

TEST(Ring, HoleIffBelowCritical) {
  for (int M : {2, 5, 16}) {
    double pc = ring_radii(0.0, M).p_c;
    EXPECT_FALSE(ring_radii(pc - 1e-6, M).disk);
    EXPECT_TRUE(ring_radii(pc + 1e-6, M).disk);
  }
}

TEST(Ring, DilutedEmpiricalSpectrum) {
  auto c = diluted_unitary(0.57, 9, 30, 2);
  EXPECT_NO_THROW(validate_cptp(c));
  auto s = summarize_ring(c.spectrum, ring_radii(0.57, 9), 0.05);
  EXPECT_GE(s.inside_fraction, 0.98);
  EXPECT_EQ(s.classification, "ring");
}

TEST(Ring, ClassificationGrid) {
  struct P {
    double p;
    int M;
  };
  for (P g : {P{0.3, 4}, P{0.8, 4}, P{0.57, 9}, P{0.89, 40}, P{0.5, 16}}) {
    auto r = ring_radii(g.p, g.M);
    auto c = diluted_unitary(g.p, g.M, 24, 40 + g.M);
    auto s = summarize_ring(c.spectrum, r, 0.05);
    EXPECT_EQ(s.classification, r.disk ? "disk" : "ring") << g.p << " " << g.M;
  }
}

TEST(Complementary, RadiiValues) {
  for (int N : {3, 8}) {
    auto r = complementary_ring_radii(N, N);
    EXPECT_TRUE(r.disk);
    EXPECT_EQ(r.R_minus, 0.0);
  }
  auto r = complementary_ring_radii(14, 18);
  EXPECT_NEAR(r.R_plus, 1 / std::sqrt(14.0), 1e-12);
  EXPECT_NEAR(r.R_minus, std::sqrt(1 / 14.0 - 14.0 / 324), 1e-12);
  EXPECT_NEAR(r.R_plus, 0.267, 5e-4);
  EXPECT_NEAR(r.R_minus, 0.167, 1.5e-3);
}

TEST(Complementary, IsTracePreserving) {
  auto k = complementary_channel(4, 6, 3);
  EXPECT_EQ(k.N_in, 4);
  EXPECT_EQ(k.N_out, 6);
  EXPECT_LT(trace_preservation_residual(k), 1e-12);
  // environment output of the same isometry: spectra of the two outputs agree on pure inputs
  KrausSet sys = random_kraus(4, 6, 3);
  Vec psi = sample_haar_state(4, 9);
  RVec a = linalg::eigvalsh(apply_channel(k, psi * psi.adjoint()));
  RVec b = linalg::eigvalsh(apply_channel(sys, psi * psi.adjoint()));
  EXPECT_NEAR(a.tail(4).sum(), 1.0, 1e-12);
  EXPECT_LT((a.tail(4) - b).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Complementary, EmpiricalRing) {
  auto k = complementary_channel(14, 18, 5);
  auto sp = complementary_spectrum_model(k, 6);
  auto s = summarize_ring(sp, complementary_ring_radii(14, 18), 0.05);
  EXPECT_GE(s.inside_fraction, 0.98);
  EXPECT_EQ(s.classification, "ring");
}

TEST(Measured, IdentityDephasing) {
  auto c = measured_map_spectrum(Mat::Identity(6, 6), 3, 2);
  int ones = 0;
  for (Eigen::Index k = 0; k < c.spectrum.size(); ++k) {
    EXPECT_NEAR(c.spectrum[k].imag(), 0.0, 1e-9);
    if (std::abs(c.spectrum[k] - 1.0) < 1e-9) ++ones;
  }
  EXPECT_GE(ones, 3);
}

TEST(Measured, BakerGap) {
  auto c = measured_map_spectrum(build_baker_map(64).U, 2, 7);
  EXPECT_NEAR(std::abs(c.spectrum[0]), 1.0, 1e-8);
  EXPECT_NEAR(c.gap, 1 - 1 / std::sqrt(2.0), 0.1);
}
