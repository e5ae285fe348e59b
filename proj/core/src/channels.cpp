#include "qchaos/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qchaos/ensembles.hpp"
#include "qchaos/linalg.hpp"
#include "qchaos/rng.hpp"
#include "qchaos/stats.hpp"
#include "qchaos/tolerances.hpp"

namespace qchaos {

namespace {

void sort_by_modulus(Vec& ev) {
  std::vector<cplx> v(ev.data(), ev.data() + ev.size());
  std::stable_sort(v.begin(), v.end(), [](cplx a, cplx b) { return std::abs(a) > std::abs(b); });
  for (Eigen::Index i = 0; i < ev.size(); ++i) ev(i) = v[i];
}

double trace_norm_hermitian(const Mat& a) {
  RVec ev = linalg::eigvalsh(0.5 * (a + a.adjoint()));
  return ev.cwiseAbs().sum();
}

double quantile(std::vector<double> v, double q) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  double pos = q * static_cast<double>(v.size() - 1);
  auto lo = static_cast<std::size_t>(std::floor(pos));
  std::size_t hi = std::min(lo + 1, v.size() - 1);
  double f = pos - static_cast<double>(lo);
  return v[lo] * (1.0 - f) + v[hi] * f;
}

}  // namespace

KrausSet make_kraus(std::vector<Mat> ops) {
  if (ops.empty()) throw std::invalid_argument("make_kraus: empty Kraus set");
  KrausSet k;
  k.N_out = static_cast<int>(ops.front().rows());
  k.N_in = static_cast<int>(ops.front().cols());
  for (const auto& m : ops)
    if (m.rows() != k.N_out || m.cols() != k.N_in) throw std::invalid_argument("make_kraus: inconsistent shapes");
  k.K = std::move(ops);
  return k;
}

double trace_preservation_residual(const KrausSet& k) {
  Mat s = Mat::Zero(k.N_in, k.N_in);
  for (const auto& m : k.K) s.noalias() += m.adjoint() * m;
  return linalg::max_abs(s - Mat::Identity(k.N_in, k.N_in));
}

Mat kraus_to_superop(const KrausSet& k) {
  Mat psi = Mat::Zero(static_cast<Eigen::Index>(k.N_out) * k.N_out, static_cast<Eigen::Index>(k.N_in) * k.N_in);
  for (const auto& m : k.K) psi.noalias() += linalg::kron(m, m.conjugate());
  return psi;
}

Mat superop_to_choi(const Mat& psi, int N_out, int N_in) {
  if (psi.rows() != N_out * N_out || psi.cols() != N_in * N_in)
    throw std::invalid_argument("superop_to_choi: shape mismatch");
  Mat d(N_out * N_in, N_out * N_in);
  for (int m = 0; m < N_out; ++m)
    for (int mu = 0; mu < N_out; ++mu)
      for (int n = 0; n < N_in; ++n)
        for (int nu = 0; nu < N_in; ++nu) d(m * N_in + n, mu * N_in + nu) = psi(m * N_out + mu, n * N_in + nu);
  return d;
}

Mat choi_to_superop(const Mat& choi, int N_out, int N_in) {
  if (choi.rows() != N_out * N_in || choi.cols() != N_out * N_in)
    throw std::invalid_argument("choi_to_superop: shape mismatch");
  Mat psi(N_out * N_out, N_in * N_in);
  for (int m = 0; m < N_out; ++m)
    for (int mu = 0; mu < N_out; ++mu)
      for (int n = 0; n < N_in; ++n)
        for (int nu = 0; nu < N_in; ++nu) psi(m * N_out + mu, n * N_in + nu) = choi(m * N_in + n, mu * N_in + nu);
  return psi;
}

KrausSet choi_to_kraus(const Mat& choi, int N_out, int N_in, double tol) {
  auto [w, v] = linalg::eigh(0.5 * (choi + choi.adjoint()));
  if (w.minCoeff() < -tol) throw NotCompletelyPositive("Choi matrix eigenvalue " + std::to_string(w.minCoeff()));
  // drop numerically zero weights relative to the largest
  const double cut = std::max(tol, 1e-12 * w.maxCoeff());
  std::vector<Mat> ops;
  for (Eigen::Index i = w.size() - 1; i >= 0; --i) {
    if (w(i) <= cut) break;
    Mat k(N_out, N_in);
    const double s = std::sqrt(w(i));
    for (int m = 0; m < N_out; ++m)
      for (int n = 0; n < N_in; ++n) k(m, n) = s * v(m * N_in + n, i);
    ops.push_back(std::move(k));
  }
  if (ops.empty()) throw NotCompletelyPositive("Choi matrix has no positive eigenvalue");
  return make_kraus(std::move(ops));
}

Mat apply_channel(const KrausSet& k, const Mat& rho) {
  Mat out = Mat::Zero(k.N_out, k.N_out);
  for (const auto& m : k.K) out.noalias() += m * rho * m.adjoint();
  return out;
}

Mat choi_trace_out(const Mat& choi, int N_out, int N_in) { return linalg::ptrace_a(choi, N_out, N_in); }

Mat choi_trace_in(const Mat& choi, int N_out, int N_in) { return linalg::ptrace_b(choi, N_out, N_in); }

Vec superop_spectrum(const Mat& psi) {
  Vec ev = linalg::eigvals(psi);
  sort_by_modulus(ev);
  return ev;
}

ChannelBundle make_bundle(KrausSet k, bool with_spectrum) {
  ChannelBundle c;
  c.superop = kraus_to_superop(k);
  c.choi = superop_to_choi(c.superop, k.N_out, k.N_in);
  if (with_spectrum && k.N_in == k.N_out) {
    c.spectrum = superop_spectrum(c.superop);
    c.gap = c.spectrum.size() > 1 ? 1.0 - std::abs(c.spectrum(1)) : 1.0;
  }
  c.kraus = std::move(k);
  return c;
}

void validate_cptp(const ChannelBundle& c) {
  const int no = c.kraus.N_out, ni = c.kraus.N_in;
  RVec w = linalg::eigvalsh(0.5 * (c.choi + c.choi.adjoint()));
  if (w.minCoeff() < -tol::kChoi) throw NotCompletelyPositive("Choi eigenvalue " + std::to_string(w.minCoeff()));
  Mat tra = choi_trace_out(c.choi, no, ni);
  if (linalg::max_abs(tra - Mat::Identity(ni, ni)) > tol::kChoi)
    throw NumericalValidationError("channel is not trace preserving");
}

KrausSet random_kraus(int N, int M, std::uint64_t seed) {
  if (N < 1 || M < 1) throw std::invalid_argument("random_kraus: N and M must be >= 1");
  Rng rng(seed);
  // columns of V acting on |n> (x) |0>_env; row index a*M + j
  Mat w = haar_isometry(rng, N * M, N);
  std::vector<Mat> ops(M, Mat(N, N));
  for (int a = 0; a < N; ++a)
    for (int j = 0; j < M; ++j) ops[j].row(a) = w.row(a * M + j);
  return make_kraus(std::move(ops));
}

ChannelBundle random_channel(int N, int M, std::uint64_t seed, bool with_spectrum) {
  return make_bundle(random_kraus(N, M, seed), with_spectrum);
}

Mat random_choi_ginibre(int N, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(seed, attempt);
    Mat g = ginibre(rng, N * N, N * N);
    Mat d0 = g * g.adjoint();
    Mat y = choi_trace_out(d0, N, N);
    RVec ev = linalg::eigvalsh(y);
    if (ev.minCoeff() <= 1e-12 * ev.maxCoeff()) continue;  // singular Y, redraw
    Mat s = linalg::kron(Mat::Identity(N, N), linalg::inv_sqrtm_psd(y));
    Mat d = s * d0 * s;
    return 0.5 * (d + d.adjoint());
  }
}

std::vector<Mat> gell_mann_basis(int N) {
  std::vector<Mat> b;
  b.push_back(Mat::Identity(N, N) / std::sqrt(static_cast<double>(N)));
  const double h = std::sqrt(0.5);
  for (int j = 0; j < N; ++j)
    for (int k = j + 1; k < N; ++k) {
      Mat s = Mat::Zero(N, N);
      s(j, k) = s(k, j) = h;
      b.push_back(s);
      Mat a = Mat::Zero(N, N);
      a(j, k) = cplx(0, -h);
      a(k, j) = cplx(0, h);
      b.push_back(a);
    }
  for (int l = 1; l < N; ++l) {
    Mat d = Mat::Zero(N, N);
    const double c = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int j = 0; j < l; ++j) d(j, j) = c;
    d(l, l) = -l * c;
    b.push_back(d);
  }
  return b;
}

BlochAffine bloch_affine(const KrausSet& k) {
  if (k.N_in != k.N_out) throw std::invalid_argument("bloch_affine: channel must be square");
  const int N = k.N_in, D = N * N - 1;
  auto basis = gell_mann_basis(N);
  BlochAffine out;
  out.C.resize(D, D);
  out.kappa.resize(D);
  Mat img0 = apply_channel(k, basis[0]);
  for (int i = 1; i <= D; ++i) out.kappa(i - 1) = (basis[i] * img0).trace().real();
  for (int j = 1; j <= D; ++j) {
    Mat img = apply_channel(k, basis[j]);
    for (int i = 1; i <= D; ++i) out.C(i - 1, j - 1) = (basis[i] * img).trace().real();
  }
  return out;
}

ChannelBundle mixed_unitary_channel(const std::vector<double>& weights, const std::vector<Mat>& unitaries,
                                    bool with_spectrum) {
  if (weights.size() != unitaries.size() || weights.empty())
    throw std::invalid_argument("mixed_unitary_channel: weights and unitaries differ in length");
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("mixed_unitary_channel: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("mixed_unitary_channel: weights must sum to 1");
  std::vector<Mat> ops;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (unitaries[j].rows() != unitaries[0].rows()) throw std::invalid_argument("mixed_unitary_channel: dims differ");
    if (weights[j] > 0.0) ops.push_back(std::sqrt(weights[j]) * unitaries[j]);
  }
  return make_bundle(make_kraus(std::move(ops)), with_spectrum);
}

double kesten_density(int M, double x) {
  if (M < 2) throw std::invalid_argument("kesten_density: M must be >= 2");
  const double m = M;
  const double b = 4.0 * (m - 1.0) / m;
  if (x <= 0.0 || x >= b) return 0.0;
  const double num = 4.0 * m * (m - 1.0) * x - m * m * x * x;
  return std::sqrt(std::max(num, 0.0)) / (m * x - x * x) / (2.0 * M_PI);
}

double kesten_cdf(int M, double x) {
  if (M < 2) throw std::invalid_argument("kesten_cdf: M must be >= 2");
  const double b = 4.0 * (M - 1.0) / M;
  if (x <= 0.0) return 0.0;
  if (x >= b) return 1.0;
  // x = b sin^2(t) removes both square-root endpoints
  auto f = [&](double t) {
    double s = std::sin(t), c = std::cos(t);
    return kesten_density(M, b * s * s) * 2.0 * b * s * c;
  };
  return stats::integrate(f, 0.0, std::asin(std::sqrt(x / b)));
}

std::vector<double> kesten_sample(int M, int N, int realizations, std::uint64_t seed) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(N) * realizations);
  for (int r = 0; r < realizations; ++r) {
    Rng rng = substream(seed, r);
    Mat s = Mat::Zero(N, N);
    for (int j = 0; j < M; ++j) s += cue(rng, N);
    s /= std::sqrt(static_cast<double>(M));
    RVec sv = linalg::svdvals(s);
    for (Eigen::Index i = 0; i < sv.size(); ++i) out.push_back(sv(i) * sv(i));
  }
  return out;
}

RingRadii ring_radii(double p, int M) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("ring_radii: p must lie in [0,1]");
  if (M < 1) throw std::invalid_argument("ring_radii: M must be >= 1");
  RingRadii r;
  const double a = (1.0 - p) * (1.0 - p), b = p * p / M;
  r.R_plus = std::sqrt(a + b);
  r.disk = a - b <= 0.0;
  r.R_minus = r.disk ? 0.0 : std::sqrt(a - b);
  const double sm = std::sqrt(static_cast<double>(M));
  r.p_c = sm / (sm + 1.0);
  return r;
}

ChannelBundle diluted_unitary(double p, int M, int N, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("diluted_unitary: p must lie in [0,1]");
  Rng rng(seed);
  Mat u = cue(rng, N);
  KrausSet noise = random_kraus(N, M, splitmix64(seed));
  std::vector<Mat> ops;
  if (p < 1.0) ops.push_back(std::sqrt(1.0 - p) * u);
  if (p > 0.0)
    for (auto& k : noise.K) ops.push_back(std::sqrt(p) * k);
  return make_bundle(make_kraus(std::move(ops)));
}

KrausSet complementary_channel(int N, int M, std::uint64_t seed) {
  if (N < 1 || M < 1) throw std::invalid_argument("complementary_channel: N and M must be >= 1");
  Rng rng(seed);
  // same isometry layout as random_kraus, traced over the system instead
  Mat w = haar_isometry(rng, N * M, N);
  std::vector<Mat> ops(N, Mat(M, N));
  for (int a = 0; a < N; ++a)
    for (int j = 0; j < M; ++j) ops[a].row(j) = w.row(a * M + j);
  return make_kraus(std::move(ops));
}

RingRadii complementary_ring_radii(int N, int M) {
  if (N < 1 || M < 1) throw std::invalid_argument("complementary_ring_radii: N and M must be >= 1");
  const double n = N, m = M;
  RingRadii r;
  double inner2;
  if (M >= N) {
    r.R_plus = 1.0 / std::sqrt(n);
    inner2 = 1.0 / n - n / (m * m);
  } else {
    r.R_plus = std::sqrt(n) / m;
    inner2 = n / (m * m) - 1.0 / n;
  }
  r.disk = inner2 <= 0.0;
  r.R_minus = r.disk ? 0.0 : std::sqrt(inner2);
  r.p_c = 0.0;
  return r;
}

Vec complementary_spectrum_model(const KrausSet& comp, std::uint64_t seed) {
  Mat psi = kraus_to_superop(comp);
  Mat p = linalg::sqrtm_psd(psi.adjoint() * psi);
  Rng rng(seed);
  Mat w = cue(rng, static_cast<int>(p.rows()));
  Vec ev = linalg::eigvals(p * w);
  sort_by_modulus(ev);
  return ev;
}

ChannelBundle measured_map_spectrum(const Mat& U, int M_meas, std::uint64_t seed) {
  const int N = static_cast<int>(U.rows());
  if (M_meas < 1 || M_meas > N) throw std::invalid_argument("measured_map_spectrum: need 1 <= M <= N");
  Rng rng(seed);
  Mat w = cue(rng, N);
  std::vector<Mat> ops;
  int start = 0;
  for (int j = 0; j < M_meas; ++j) {
    int len = N / M_meas + (j < N % M_meas ? 1 : 0);
    Mat blk = w.middleCols(start, len);
    ops.push_back(blk * blk.adjoint() * U);
    start += len;
  }
  return make_bundle(make_kraus(std::move(ops)));
}

Mat fixed_point(const ChannelBundle& c) {
  const int N = c.kraus.N_in;
  auto [ev, vec] = linalg::eig(c.superop);
  Eigen::Index best = 0;
  double dist = 1e300;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev(i) - cplx(1.0)) < dist) {
      dist = std::abs(ev(i) - cplx(1.0));
      best = i;
    }
  Mat rho(N, N);
  for (int m = 0; m < N; ++m)
    for (int n = 0; n < N; ++n) rho(m, n) = vec(m * N + n, best);
  rho = 0.5 * (rho + rho.adjoint().eval());
  return rho / rho.trace();
}

ConvergenceFit convergence_rate(const ChannelBundle& c, const Mat& rho0, int T, double floor) {
  ConvergenceFit f;
  Mat star = fixed_point(c);
  Mat rho = rho0;
  for (int t = 1; t <= T; ++t) {
    rho = apply_channel(c.kraus, rho);
    double d = 0.5 * trace_norm_hermitian(rho - star);
    if (d < floor) break;
    f.t.push_back(t);
    f.distance.push_back(d);
  }
  if (f.t.size() >= 2) {
    std::vector<double> y(f.distance.size());
    std::transform(f.distance.begin(), f.distance.end(), y.begin(), [](double d) { return std::log(d); });
    f.rate = -stats::linear_fit(f.t, y).slope;
  }
  if (c.spectrum.size() > 1) f.predicted = -std::log(std::abs(c.spectrum(1)));
  return f;
}

RingSummary summarize_ring(const Vec& spectrum, const RingRadii& radii, double margin, bool drop_leading) {
  std::vector<double> mod;
  for (Eigen::Index i = drop_leading ? 1 : 0; i < spectrum.size(); ++i) mod.push_back(std::abs(spectrum(i)));
  RingSummary s;
  if (mod.empty()) return s;
  s.q_low = quantile(mod, 0.01);
  s.q_high = quantile(mod, 0.99);
  s.classification = s.q_low > 0.2 * s.q_high ? "ring" : "disk";
  const double lo = radii.R_minus - margin, hi = radii.R_plus + margin;
  auto inside = std::count_if(mod.begin(), mod.end(), [&](double r) { return r >= lo && r <= hi; });
  s.inside_fraction = static_cast<double>(inside) / static_cast<double>(mod.size());
  return s;
}

}  // namespace qchaos
