#include "qchaos/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qchaos/ensembles.hpp"
#include "qchaos/linalg.hpp"
#include "qchaos/rng.hpp"
#include "qchaos/stats.hpp"
#include "qchaos/tolerances.hpp"

namespace qchaos {

namespace {

constexpr double kPi = std::numbers::pi;

Mat coefficient_matrix(const Vec& psi, int N1, int N2) {
  if (N1 < 1 || N2 < 1 || psi.size() != static_cast<Eigen::Index>(N1) * N2)
    throw std::invalid_argument("state dimension does not factor as N1 * N2");
  Mat a(N1, N2);
  for (int i = 0; i < N1; ++i)
    for (int k = 0; k < N2; ++k) a(i, k) = psi[i * N2 + k];
  return a;
}

}  // namespace

Mat reduced_state(const Vec& psi, int N1, int N2) {
  Mat a = coefficient_matrix(psi, N1, N2);
  return a * a.adjoint();
}

SchmidtData schmidt(const Vec& psi, int N1, int N2) {
  Mat a = coefficient_matrix(psi, N1, N2) / psi.norm();
  RVec sv = linalg::svdvals(a);
  SchmidtData s;
  s.N1 = N1;
  s.N2 = N2;
  for (double v : sv) s.lambda.push_back(v * v);
  s.S_vN = von_neumann(s.lambda);
  s.S_L = tsallis_entropy(s.lambda, 2.0);
  return s;
}

double von_neumann(const std::vector<double>& lambda) {
  double h = 0.0;
  for (double l : lambda)
    if (l > 0) h -= l * std::log(l);
  return h;
}

double renyi_entropy(const std::vector<double>& lambda, double q) {
  if (q < 0) throw std::invalid_argument("renyi_entropy: q must be >= 0");
  if (std::abs(q - 1.0) < 1e-12) return von_neumann(lambda);
  double tr = 0.0;
  for (double l : lambda)
    if (l > 0) tr += std::pow(l, q);
  return std::log(tr) / (1 - q);
}

double tsallis_entropy(const std::vector<double>& lambda, double q) {
  if (q < 0) throw std::invalid_argument("tsallis_entropy: q must be >= 0");
  if (std::abs(q - 1.0) < 1e-12) return von_neumann(lambda);
  double tr = 0.0;
  for (double l : lambda)
    if (l > 0) tr += std::pow(l, q);
  return (1 - tr) / (q - 1);
}

EntropyRecord entropies(const SchmidtData& s, const std::vector<double>& q_list) {
  EntropyRecord e;
  e.S_vN = s.S_vN;
  e.S_L = s.S_L;
  e.q = q_list;
  for (double q : q_list) {
    e.renyi.push_back(renyi_entropy(s.lambda, q));
    e.tsallis.push_back(tsallis_entropy(s.lambda, q));
  }
  return e;
}

double page_average(int N1, int N2) {
  if (N1 < 1 || N2 < 1) throw std::invalid_argument("page_average: dimensions must be >= 1");
  if (N1 > N2) std::swap(N1, N2);
  double s = 0.0;
  for (long k = static_cast<long>(N1) * N2; k > N2; --k) s += 1.0 / k;
  return s - (N1 - 1.0) / (2.0 * N2);
}

double lubkin_purity(int N1, int N2) { return (N1 + N2) / (1.0 + static_cast<double>(N1) * N2); }

double lubkin_linear_entropy(int N1, int N2) { return 1.0 - lubkin_purity(N1, N2); }

std::array<double, 2> mp_support(double Q) {
  if (Q < 1) throw std::invalid_argument("mp_support: Q must be >= 1");
  double c = 1 + 1 / Q, w = 2 / std::sqrt(Q);
  return {std::max(c - w, 0.0), c + w};
}

double mp_density(double Q, double x) {
  auto [lo, hi] = mp_support(Q);
  if (x <= lo || x >= hi) return 0.0;
  return Q / (2 * kPi) * std::sqrt((hi - x) * (x - lo)) / x;
}

double mp_cdf(double Q, double x) {
  auto [lo, hi] = mp_support(Q);
  if (x <= lo) return 0.0;
  if (x >= hi) return 1.0;
  // substitute x = lo + (hi - lo) sin^2(theta) to remove the edge singularities
  const double w = hi - lo;
  double theta = std::asin(std::sqrt((x - lo) / w));
  auto f = [&](double t) {
    double s = std::sin(t), c = std::cos(t);
    double y = lo + w * s * s;
    return mp_density(Q, y) * 2 * w * s * c;
  };
  return std::min(1.0, stats::integrate(f, 0.0, theta));
}

Mat partial_transpose(const Mat& rho, int N1, int N2) {
  const Eigen::Index D = static_cast<Eigen::Index>(N1) * N2;
  if (rho.rows() != D || rho.cols() != D) throw std::invalid_argument("partial_transpose: dimension mismatch");
  Mat out(D, D);
  for (int i = 0; i < N1; ++i)
    for (int j = 0; j < N1; ++j)
      out.block(i * N2, j * N2, N2, N2) = rho.block(i * N2, j * N2, N2, N2).transpose();
  return out;
}

double pt_third_moment_avg(int N1, int N2, int N3) {
  const double a = N1, b = N2, c = N3;
  const double abc = a * b * c;
  return (a * a + b * b + c * c + 3 * abc) / ((abc + 1) * (abc + 2));
}

PTSpectrum pt_spectrum(const Mat& rho, int N1, int N2, int N3) {
  PTSpectrum p;
  p.N1 = N1;
  p.N2 = N2;
  p.N3 = N3;
  RVec mu = linalg::eigvalsh(partial_transpose(rho, N1, N2));
  p.mu.assign(mu.data(), mu.data() + mu.size());
  for (double m : p.mu) p.trace_norm += std::abs(m);
  auto n = negativity(p);
  p.negativity = n.N;
  p.log_negativity = n.E_LN;
  if (N3 > 0) p.model_radius = 2 * std::sqrt(static_cast<double>(N1) * N2 / N3);
  return p;
}

Negativity negativity(const PTSpectrum& pt) {
  double tn = 0.0;
  bool negative = false;
  for (double m : pt.mu) {
    tn += std::abs(m);
    if (m < -tol::kClamp) negative = true;
  }
  if (!negative) return {0.0, 0.0};
  return {std::max(0.0, (tn - 1) / 2), std::max(0.0, std::log(tn))};
}

double SemicircleModel::density(double x) const {
  double d = x - center;
  if (std::abs(d) >= radius) return 0.0;
  return 2 / (kPi * radius * radius) * std::sqrt(radius * radius - d * d);
}

double SemicircleModel::cdf(double x) const {
  double u = (x - center) / radius;
  if (u <= -1) return 0.0;
  if (u >= 1) return 1.0;
  return 0.5 + (u * std::sqrt(1 - u * u) + std::asin(u)) / kPi;
}

SemicircleModel pt_semicircle_model(int N1, int N2, int N3) {
  if (N1 < 1 || N2 < 1 || N3 < 1) throw std::invalid_argument("pt_semicircle_model: dimensions must be >= 1");
  SemicircleModel m;
  const double ratio = static_cast<double>(N1) * N2 / N3;
  m.radius = 2 * std::sqrt(ratio);
  m.threshold_N3 = 4.0 * N1 * N2;
  m.npt = N3 < m.threshold_N3;
  m.eln_deep = m.npt ? std::max(0.0, std::log(8 / (3 * kPi) * std::sqrt(ratio))) : 0.0;
  return m;
}

Mat reduced_state_ab(const Vec& psi, int N1, int N2, int N3) {
  Mat a = coefficient_matrix(psi, N1 * N2, N3);
  Mat rho = a * a.adjoint();
  return rho / rho.trace().real();
}

ConcurrenceData concurrence(const Mat& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw std::invalid_argument("concurrence: 4x4 density matrix required");
  if (linalg::hermiticity_residual(rho) > 1e-8) throw std::invalid_argument("concurrence: input not Hermitian");
  Mat yy = Mat::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  Mat tilde = yy * rho.conjugate() * yy;
  Mat sq = linalg::sqrtm_psd(0.5 * (rho + rho.adjoint()));
  Mat h = sq * tilde * sq;
  RVec ev = linalg::eigvalsh(0.5 * (h + h.adjoint()));
  ConcurrenceData d;
  for (int k = 0; k < 4; ++k) d.lambda[k] = std::max(ev[3 - k], 0.0);
  d.c = std::sqrt(d.lambda[0]) - std::sqrt(d.lambda[1]) - std::sqrt(d.lambda[2]) - std::sqrt(d.lambda[3]);
  d.C = std::max(0.0, d.c);
  return d;
}

PreconcurrenceStats preconcurrence_statistics(int L, int samples, std::uint64_t seed) {
  if (L < 2 || L > 20) throw std::invalid_argument("preconcurrence_statistics: L must be in [2, 20]");
  if (samples < 1) throw std::invalid_argument("preconcurrence_statistics: samples must be >= 1");
  PreconcurrenceStats st;
  st.L = L;
  const int rest = 1 << (L - 2);
  int positive = 0;
  for (int k = 0; k < samples; ++k) {
    Rng rng = substream(seed, k);
    Vec psi = haar_state(rng, 4 * rest);
    double c = concurrence(reduced_state_ab(psi, 2, 2, rest)).c;
    st.c.push_back(c);
    if (c > 0) ++positive;
  }
  st.p_positive = static_cast<double>(positive) / samples;
  st.se = std::sqrt(st.p_positive * (1 - st.p_positive) / samples);
  return st;
}

std::vector<double> xmin_scaled_statistic(int N3, int samples, std::uint64_t seed) {
  if (N3 < 1 || samples < 1) throw std::invalid_argument("xmin_scaled_statistic: N3 and samples must be >= 1");
  std::vector<double> out;
  out.reserve(samples);
  const double scale = std::sqrt(static_cast<double>(N3));
  for (int k = 0; k < samples; ++k) {
    Rng rng = substream(seed, k);
    Vec psi = haar_state(rng, 4 * N3);
    Mat rho = reduced_state_ab(psi, 2, 2, N3);
    double lmin = linalg::eigvalsh(partial_transpose(rho, 2, 2))[0];
    out.push_back(scale * (lmin - 0.25));
  }
  return out;
}

}  // namespace qchaos
