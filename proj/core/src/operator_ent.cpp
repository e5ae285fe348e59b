#include "qchaos/operator_ent.hpp"

#include <cmath>
#include <numbers>

#include "qchaos/bipartite.hpp"
#include "qchaos/ensembles.hpp"
#include "qchaos/linalg.hpp"
#include "qchaos/rng.hpp"
#include "qchaos/stats.hpp"

namespace qchaos {

namespace {

constexpr double kPi = std::numbers::pi;

void check_bipartite(const Mat& U, int N) {
  const Eigen::Index D = static_cast<Eigen::Index>(N) * N;
  if (N < 1 || U.rows() != D || U.cols() != D) throw std::invalid_argument("operator on C^N (x) C^N required");
}

void check_unitary(const Mat& U) {
  double r = linalg::unitarity_residual(U);
  if (!(r < 1e-8)) throw NumericalValidationError("operator is not unitary, residual " + std::to_string(r));
}

double entanglement_from(const Mat& R, int N) {
  Mat rr = R * R.adjoint();
  const double n4 = std::pow(static_cast<double>(N), 4);
  return 1.0 - rr.squaredNorm() / n4;
}

}  // namespace

Mat realign(const Mat& U, int N) {
  check_bipartite(U, N);
  Mat R(U.rows(), U.cols());
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) R(i * N + j, k * N + l) = U(i * N + k, j * N + l);
  return R;
}

Mat op_partial_transpose(const Mat& U, int N) {
  check_bipartite(U, N);
  Mat G(U.rows(), U.cols());
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) G(i * N + j, k * N + l) = U(i * N + l, k * N + j);
  return G;
}

OperatorSchmidt operator_entanglements(const Mat& U, int N) {
  check_bipartite(U, N);
  check_unitary(U);
  OperatorSchmidt s;
  s.N = N;
  Mat R = realign(U, N);
  Mat G = op_partial_transpose(U, N);
  RVec l = linalg::eigvalsh(R * R.adjoint());
  RVec m = linalg::eigvalsh(G * G.adjoint());
  for (Eigen::Index k = l.size() - 1; k >= 0; --k) s.lambda.push_back(std::max(l[k], 0.0));
  for (Eigen::Index k = m.size() - 1; k >= 0; --k) s.mu.push_back(std::max(m[k], 0.0));
  s.E_U = entanglement_from(R, N);
  s.E_US = entanglement_from(G, N);
  return s;
}

double linear_operator_entanglement(const Mat& U, int N) { return entanglement_from(realign(U, N), N); }

double swap_entanglement(int N) { return 1.0 - 1.0 / (static_cast<double>(N) * N); }

double haar_entangling_power(int N) {
  const double n2 = static_cast<double>(N) * N;
  return (n2 - 1) / (n2 + 1);
}

EPRecord entangling_power(const Mat& U, int N) {
  check_bipartite(U, N);
  check_unitary(U);
  EPRecord r;
  r.E_U = entanglement_from(realign(U, N), N);
  r.E_US = entanglement_from(op_partial_transpose(U, N), N);
  const double es = swap_entanglement(N);
  r.e_p = (r.E_U + r.E_US - es) / es;
  r.g_t = (r.E_U - r.E_US + es) / (2 * es);
  r.e_p_haar = haar_entangling_power(N);
  r.E_haar = r.e_p_haar;
  r.g_t_haar = 0.5;
  return r;
}

double entangling_power_mc(const Mat& U, int N, int pairs, std::uint64_t seed) {
  check_bipartite(U, N);
  if (pairs < 1) throw std::invalid_argument("entangling_power_mc: pairs must be >= 1");
  double acc = 0.0;
  for (int k = 0; k < pairs; ++k) {
    Rng rng = substream(seed, k);
    Vec a = haar_state(rng, N);
    Vec b = haar_state(rng, N);
    Vec out = U * linalg::kron(a, b);
    Mat rho = reduced_state(out, N, N);
    acc += 1.0 - (rho * rho).trace().real();
  }
  return (N + 1.0) / (N - 1.0) * acc / pairs;
}

bool is_dual_unitary(const Mat& U, int N, double tol) {
  return linalg::unitarity_residual(realign(U, N)) < tol;
}

LuReport lu_invariance_check(const Mat& U, int N, int trials, std::uint64_t seed, double tol) {
  EPRecord base = entangling_power(U, N);
  LuReport rep;
  rep.trials = trials;
  for (int k = 0; k < trials; ++k) {
    Rng rng = substream(seed, k);
    Mat left = linalg::kron(cue(rng, N), cue(rng, N));
    Mat right = linalg::kron(cue(rng, N), cue(rng, N));
    EPRecord r = entangling_power(left * U * right, N);
    rep.max_dE = std::max(rep.max_dE, std::abs(r.E_U - base.E_U));
    rep.max_dep = std::max(rep.max_dep, std::abs(r.e_p - base.e_p));
    rep.max_dgt = std::max(rep.max_dgt, std::abs(r.g_t - base.g_t));
  }
  rep.pass = rep.max_dE < tol && rep.max_dep < tol && rep.max_dgt < tol;
  return rep;
}

double composition_average(double x_U, double x_V, double reference) {
  return x_U + x_V - x_U * x_V / reference;
}

std::vector<double> thermalization_curve(double x_U, double reference, int n_max) {
  std::vector<double> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(reference * (1 - std::pow(1 - x_U / reference, n)));
  return out;
}

ThermalizationMc thermalization_mc(const Mat& U, int N, int n_max, int histories, std::uint64_t seed) {
  check_bipartite(U, N);
  if (n_max < 1 || histories < 2) throw std::invalid_argument("thermalization_mc: need n_max >= 1, histories >= 2");
  std::vector<std::vector<double>> vals(n_max);
  for (int h = 0; h < histories; ++h) {
    Rng rng = substream(seed, h);
    Mat W = Mat::Identity(U.rows(), U.cols());
    for (int n = 0; n < n_max; ++n) {
      W = linalg::kron(cue(rng, N), cue(rng, N)) * U * W;
      vals[n].push_back(entangling_power(W, N).e_p);
    }
  }
  ThermalizationMc out;
  for (const auto& v : vals) {
    auto m = stats::mean_se(v);
    out.mean.push_back(m.mean);
    out.se.push_back(m.se);
  }
  return out;
}

double lambda_parameter(int N, double b) {
  double j0 = std::cyl_bessel_j(0.0, N * b / (2 * kPi));
  return static_cast<double>(N) * N / (4 * kPi * kPi) * (1 - j0 * j0);
}

double lambda_small_b(int N, double b) { return std::pow(static_cast<double>(N), 4) * b * b / (32 * std::pow(kPi, 4)); }

Vec coupling_phases(const CoupledMapParams& p) {
  const int N = p.N;
  Vec d(static_cast<Eigen::Index>(N) * N);
  const double amp = N * p.b / (2 * kPi);
  for (int a = 0; a < N; ++a)
    for (int c = 0; c < N; ++c) {
      double qa = (a + p.alpha) / N, qc = (c + p.alpha) / N;
      d[a * N + c] = std::polar(1.0, amp * std::cos(2 * kPi * (qa + qc)));
    }
  return d;
}

QuantumMap build_coupled_map(const CoupledMapParams& p) {
  if (static_cast<long long>(p.N) * p.N > kMaxCoupledDenseDim)
    throw std::invalid_argument("build_coupled_map: N^2 exceeds the dense-operator guard");
  Mat ua = build_standard_map({p.N, p.K1, p.alpha, p.beta}).U;
  Mat ub = build_standard_map({p.N, p.K2, p.alpha, p.beta}).U;
  Mat local = linalg::kron(ua, ub);
  Vec d = coupling_phases(p);
  for (Eigen::Index c = 0; c < d.size(); ++c) local.col(c) *= d[c];
  return {local, MapParams{p.N, p.K1, p.alpha, p.beta}, MapKind::Coupled};
}

double coupling_entangling_power(const CoupledMapParams& p) {
  // U_b = sum u(a,c) |a><a| (x) |c><c|: U_b^R is u embedded on the diagonal
  // pairs, and U_b^Gamma is diagonal unimodular so E(U_b S) = E(S).
  const int N = p.N;
  Vec d = coupling_phases(p);
  Mat u(N, N);
  for (int a = 0; a < N; ++a)
    for (int c = 0; c < N; ++c) u(a, c) = d[a * N + c];
  Mat uu = u * u.adjoint();
  const double n4 = std::pow(static_cast<double>(N), 4);
  double e_u = 1.0 - uu.squaredNorm() / n4;
  return e_u / swap_entanglement(N);
}

double coupling_entangling_power_bessel(int N, double b) {
  const double x = b * N / (2 * kPi);
  double s = std::pow(std::cyl_bessel_j(0.0, x), 4);
  for (int k = 1; k < 200; ++k) {
    double j = std::cyl_bessel_j(static_cast<double>(k), x);
    s += 2 * std::pow(j, 4);
    if (k > x + 10 && std::abs(j) < 1e-16) break;
  }
  return 1.0 - s;
}

double markov_s2(double e_p, int N, double t) { return -std::log(2.0 / N + std::pow(1 - e_p, t)); }

double markov_time(double e_p, int N) { return -std::log(static_cast<double>(N)) / std::log(1 - e_p); }

EntanglementSeries entanglement_evolution(const CoupledMapParams& p, InitialKind kind, int T, std::uint64_t seed,
                                          const std::array<double, 4>& point) {
  const int N = p.N;
  if (T < 0) throw std::invalid_argument("entanglement_evolution: T must be >= 0");
  Vec a, b;
  if (kind == InitialKind::CoherentProduct) {
    a = coherent_state(N, point[0], point[1], p.alpha);
    b = coherent_state(N, point[2], point[3], p.alpha);
  } else {
    Rng rng(seed);
    a = haar_state(rng, N);
    b = haar_state(rng, N);
  }
  // psi(a, c) stored as an N x N matrix, row index on subsystem A
  Mat psi = a * b.transpose();
  Vec d = coupling_phases(p);
  StandardMapStepper sa({N, p.K1, p.alpha, p.beta});
  StandardMapStepper sb({N, p.K2, p.alpha, p.beta});

  EntanglementSeries out;
  out.e_p = coupling_entangling_power(p);
  out.t_star = markov_time(out.e_p, N);
  Vec col(N);
  for (int t = 0; t <= T; ++t) {
    if (t > 0) {
      for (int i = 0; i < N; ++i)
        for (int c = 0; c < N; ++c) psi(i, c) *= d[i * N + c];
      for (int c = 0; c < N; ++c) {
        col = psi.col(c);
        sa.apply(col);
        psi.col(c) = col;
      }
      for (int i = 0; i < N; ++i) {
        col = psi.row(i).transpose();
        sb.apply(col);
        psi.row(i) = col.transpose();
      }
    }
    RVec sv = linalg::svdvals(psi / psi.norm());
    std::vector<double> lam;
    for (double s : sv) lam.push_back(s * s);
    out.t.push_back(t);
    out.S_vN.push_back(von_neumann(lam));
    out.S2.push_back(renyi_entropy(lam, 2.0));
    out.markov_S2.push_back(markov_s2(out.e_p, N, t));
  }
  return out;
}

PerturbativeReference perturbative_references(double Lambda, double t, bool cue) {
  if (Lambda < 0) throw std::invalid_argument("perturbative_references: Lambda must be >= 0");
  const double r = std::sqrt(Lambda);
  PerturbativeReference ref;
  ref.S_L_avg = std::pow(kPi, 1.5) * r / 2;
  ref.S_vN_avg = std::pow(kPi, 1.5) * r;
  ref.S_L_quench = 4 * kPi * t * r;
  ref.saturation = cue ? 5 * std::pow(kPi, 1.5) / 8 * r : 5 * std::sqrt(kPi / 8) * r;
  return ref;
}

}  // namespace qchaos
