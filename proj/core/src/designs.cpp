#include "qchaos/designs.hpp"

#include <cmath>

#include "qchaos/rng.hpp"
#include "qchaos/stats.hpp"

namespace qchaos {

namespace {

Mat overlap_moduli(const StateEnsemble& e) {
  Mat a(e.N, e.M());
  for (int k = 0; k < e.M(); ++k) a.col(k) = e.members[k];
  return a.adjoint() * a;
}

void check_ensemble(const StateEnsemble& e) {
  if (e.members.empty()) throw std::invalid_argument("state ensemble is empty");
  for (const auto& v : e.members)
    if (v.size() != e.N) throw std::invalid_argument("state ensemble: dimension mismatch");
}

}  // namespace

StateEnsemble make_state_ensemble(std::vector<Vec> members) {
  StateEnsemble e;
  if (!members.empty()) e.N = static_cast<int>(members.front().size());
  e.weights.assign(members.size(), members.empty() ? 0.0 : 1.0 / members.size());
  e.members = std::move(members);
  check_ensemble(e);
  return e;
}

double symmetric_dimension(int N, int t) {
  double d = 1.0;
  for (int k = 1; k <= t; ++k) d = d * (N + k - 1) / k;
  return d;
}

double frame_potential(const StateEnsemble& e, int t) {
  check_ensemble(e);
  Mat g = overlap_moduli(e);
  double f = 0.0;
  for (int a = 0; a < e.M(); ++a)
    for (int b = 0; b < e.M(); ++b) f += e.weights[a] * e.weights[b] * std::pow(std::norm(g(a, b)), t);
  return f;
}

double frame_potential_offdiag(const StateEnsemble& e, int t) {
  check_ensemble(e);
  if (e.M() < 2) throw std::invalid_argument("frame_potential_offdiag: need M >= 2");
  Mat g = overlap_moduli(e);
  double f = 0.0;
  for (int a = 0; a < e.M(); ++a)
    for (int b = 0; b < e.M(); ++b)
      if (a != b) f += std::pow(std::norm(g(a, b)), t);
  return f / (static_cast<double>(e.M()) * (e.M() - 1));
}

double delta2(const StateEnsemble& e) { return symmetric_dimension(e.N, 2) * frame_potential_offdiag(e, 2) - 1.0; }

DesignDiagnostics design_diagnostics(const StateEnsemble& e, int t) {
  DesignDiagnostics d;
  d.t = t;
  d.M = e.M();
  d.d_t = symmetric_dimension(e.N, t);
  d.F_t = frame_potential(e, t);
  if (e.M() > 1) {
    d.F2_off = frame_potential_offdiag(e, 2);
    d.delta2 = symmetric_dimension(e.N, 2) * d.F2_off - 1.0;
  }
  return d;
}

StateEnsemble trajectory_ensemble(const MapParams& base, double dK, int M, int burn_in, int stride,
                                  const Vec& fiducial, std::uint64_t seed) {
  if (M < 1 || M > kMaxEnsembleSize) throw std::invalid_argument("trajectory_ensemble: M out of range");
  if (burn_in < 0 || stride < 1) throw std::invalid_argument("trajectory_ensemble: bad burn_in/stride");
  if (static_cast<long long>(M) * stride + burn_in > kMaxTrajectorySteps)
    throw std::invalid_argument("trajectory_ensemble: iteration budget exceeded");
  if (fiducial.size() != base.N) throw std::invalid_argument("trajectory_ensemble: fiducial dimension mismatch");
  Rng rng(seed);
  StandardMapStepper stepper(base);
  Vec psi = fiducial / fiducial.norm();
  std::vector<Vec> kept;
  kept.reserve(M);
  long long n = 0;
  while (static_cast<int>(kept.size()) < M) {
    stepper.set_K(base.K + dK * (rng.uniform() - 0.5));
    stepper.apply(psi);
    ++n;
    if (n > burn_in && (n - burn_in) % stride == 0) kept.push_back(psi);
  }
  return make_state_ensemble(std::move(kept));
}

Delta2Sweep delta2_histories(const MapParams& base, double dK, int M, int burn_in, int stride, const Vec& fiducial,
                             int histories, std::uint64_t seed) {
  if (histories < 1) throw std::invalid_argument("delta2_histories: need at least one history");
  Delta2Sweep s;
  for (int h = 0; h < histories; ++h) {
    std::uint64_t hs = Rng(seed, h + 1).engine()();
    s.per_history.push_back(delta2(trajectory_ensemble(base, dK, M, burn_in, stride, fiducial, hs)));
  }
  auto m = stats::mean_se(s.per_history);
  s.mean = m.mean;
  s.sd = m.sd;
  return s;
}

Mat haar_twirl_1(const Mat& X) {
  if (X.rows() != X.cols()) throw std::invalid_argument("haar_twirl_1: square matrix required");
  const auto N = X.rows();
  return (X.trace() / static_cast<double>(N)) * Mat::Identity(N, N);
}

Mat swap_operator(int N) {
  Mat s = Mat::Zero(N * N, N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) s(i * N + j, j * N + i) = 1.0;
  return s;
}

Mat haar_twirl_2(const Mat& X) {
  const auto D = X.rows();
  const int N = static_cast<int>(std::llround(std::sqrt(static_cast<double>(D))));
  if (X.cols() != D || static_cast<Eigen::Index>(N) * N != D || N < 2)
    throw std::invalid_argument("haar_twirl_2: operator on the doubled space N^2 x N^2 (N >= 2) required");
  Mat S = swap_operator(N);
  cplx trX = X.trace();
  cplx trXS = (X * S).trace();
  const double n = N;
  const double den = n * (n * n - 1);
  return ((n * trX - trXS) / den) * Mat::Identity(D, D) + ((n * trXS - trX) / den) * S;
}

double weingarten_s2(bool transposition, int N) {
  const double n = N;
  if (N < 2) throw std::invalid_argument("weingarten_s2: N >= 2 required");
  return transposition ? -1.0 / (n * (n * n - 1)) : 1.0 / (n * n - 1);
}

double weingarten_fourth_moment(const std::array<int, 4>& i, const std::array<int, 4>& j, int N) {
  // sigma, tau in S_2 match unprimed slot k with primed slot sigma(k)
  auto match = [](const std::array<int, 4>& x, bool swap) {
    return swap ? (x[0] == x[3] && x[1] == x[2]) : (x[0] == x[2] && x[1] == x[3]);
  };
  double acc = 0.0;
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      if (match(i, s) && match(j, t)) acc += weingarten_s2(s != t, N);
  return acc;
}

Mat m1_estimate(const std::vector<Mat>& unitaries) {
  if (unitaries.empty()) throw std::invalid_argument("m1_estimate: empty sample");
  const auto N = unitaries.front().rows();
  Mat acc = Mat::Zero(N * N, N * N);
  for (const auto& u : unitaries)
    for (Eigen::Index a = 0; a < N; ++a)
      for (Eigen::Index b = 0; b < N; ++b) acc.block(a * N, b * N, N, N) += u(a, b) * u.conjugate();
  return acc / static_cast<double>(unitaries.size());
}

Mat maximally_entangled_projector(int N) {
  Vec phi = Vec::Zero(N * N);
  for (int i = 0; i < N; ++i) phi[i * N + i] = 1.0 / std::sqrt(static_cast<double>(N));
  return phi * phi.adjoint();
}

double unitary_frame_potential(const std::vector<Mat>& us, int t, bool include_diagonal) {
  if (us.empty()) throw std::invalid_argument("unitary_frame_potential: empty ensemble");
  const std::size_t m = us.size();
  if (!include_diagonal && m < 2) throw std::invalid_argument("unitary_frame_potential: need >= 2 members off-diagonal");
  double acc = 0.0;
  double count = 0.0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b && !include_diagonal) continue;
      cplx tr = us[a].conjugate().cwiseProduct(us[b]).sum();
      acc += std::pow(std::norm(tr), t);
      count += 1.0;
    }
  return acc / count;
}

}  // namespace qchaos
