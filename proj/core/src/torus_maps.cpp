#include "qchaos/torus_maps.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "fft.hpp"
#include "qchaos/linalg.hpp"
#include "qchaos/rng.hpp"

namespace qchaos {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI(0.0, 1.0);

double wrap(double x) {
  x -= std::floor(x);
  return x >= 1.0 ? 0.0 : x;
}

template <class Step, class Jac>
double tangent_growth(Step step, Jac jac, int n_steps, int n_traj, std::uint64_t seed) {
  if (n_steps < 1 || n_traj < 1) throw std::invalid_argument("lyapunov: iteration counts must be positive");
  double total = 0.0;
  for (int t = 0; t < n_traj; ++t) {
    Rng rng = substream(seed, t);
    PhasePoint x{rng.uniform(), rng.uniform()};
    Eigen::Vector2d v(1.0, 0.0);
    double acc = 0.0;
    for (int s = 0; s < n_steps; ++s) {
      v = jac(x) * v;
      double nv = v.norm();
      acc += std::log(nv);
      v /= nv;
      x = step(x);
    }
    total += acc / n_steps;
  }
  return total / n_traj;
}

}  // namespace

PhasePoint classical_standard_step(PhasePoint x, double K) {
  double p = wrap(x.p - K / (2 * kPi) * std::sin(2 * kPi * x.q));
  return {wrap(x.q + p), p};
}

PhasePoint classical_baker_step(PhasePoint x) {
  if (x.q < 0.5) return {wrap(2 * x.q), x.p / 2};
  return {wrap(2 * x.q - 1), (x.p + 1) / 2};
}

Eigen::Matrix2d standard_jacobian(PhasePoint x, double K) {
  double c = K * std::cos(2 * kPi * x.q);
  Eigen::Matrix2d j;
  j << 1 - c, 1, -c, 1;
  return j;
}

Eigen::Matrix2d baker_jacobian(PhasePoint) {
  Eigen::Matrix2d j;
  j << 2, 0, 0, 0.5;
  return j;
}

double classical_lyapunov(double K, int n_steps, int n_traj, std::uint64_t seed) {
  return tangent_growth([K](PhasePoint x) { return classical_standard_step(x, K); },
                        [K](PhasePoint x) { return standard_jacobian(x, K); }, n_steps, n_traj, seed);
}

double baker_lyapunov(int n_steps, int n_traj, std::uint64_t seed) {
  return tangent_growth(classical_baker_step, baker_jacobian, n_steps, n_traj, seed);
}

double chirikov_lyapunov(double K) { return std::log(K / 2) + 1.0 / (K * K - 4); }

Mat dft_matrix(int N, double alpha, double beta) {
  if (N < 1) throw std::invalid_argument("dft_matrix: N must be >= 1");
  Mat f(N, N);
  const double s = 1.0 / std::sqrt(static_cast<double>(N));
  for (int m = 0; m < N; ++m)
    for (int n = 0; n < N; ++n) {
      // reduce the phase argument modulo N to keep it accurate for large N
      double arg = std::fmod((n + alpha) * (m + beta), static_cast<double>(N));
      f(m, n) = std::polar(s, -2 * kPi * arg / N);
    }
  return f;
}

namespace {

std::vector<cplx> kick_phases(const MapParams& p) {
  std::vector<cplx> d(p.N);
  for (int n = 0; n < p.N; ++n)
    d[n] = std::exp(kI * (p.N * p.K / (2 * kPi)) * std::cos(2 * kPi * (n + p.alpha) / p.N));
  return d;
}

std::vector<cplx> free_phases(const MapParams& p) {
  std::vector<cplx> d(p.N);
  for (int m = 0; m < p.N; ++m) {
    double a = std::fmod((m + p.beta) * (m + p.beta), 2.0 * p.N);
    d[m] = std::exp(-kI * kPi * a / static_cast<double>(p.N));
  }
  return d;
}

void check_params(const MapParams& p) {
  if (p.N < 2) throw std::invalid_argument("map: N must be >= 2");
}

}  // namespace

QuantumMap build_standard_map(const MapParams& p) {
  check_params(p);
  const int N = p.N;
  auto dk = kick_phases(p);
  auto df = free_phases(p);
  // F^dag D_F F depends on n - m only:
  // c(d) = e^{2 pi i d beta/N} / N * sum_m D_F(m) e^{2 pi i d m/N}
  std::vector<cplx> root(N), g(N);
  for (int j = 0; j < N; ++j) root[j] = std::polar(1.0, 2 * kPi * j / N);
  for (int d = 0; d < N; ++d) {
    cplx acc = 0;
    for (int m = 0; m < N; ++m) acc += df[m] * root[static_cast<long long>(d) * m % N];
    g[d] = acc / static_cast<double>(N);
  }
  std::vector<cplx> c(2 * N - 1);  // index d + N - 1
  for (int d = -(N - 1); d < N; ++d) c[d + N - 1] = std::polar(1.0, 2 * kPi * d * p.beta / N) * g[(d + N) % N];
  Mat u(N, N);
  for (int m = 0; m < N; ++m)
    for (int n = 0; n < N; ++n) u(n, m) = c[n - m + N - 1] * dk[m];
  return {u, p, MapKind::Standard};
}

QuantumMap build_baker_map(int N) {
  if (N < 2 || N % 2) throw std::invalid_argument("baker map requires even N >= 2");
  Mat half = dft_matrix(N / 2, 0.5, 0.5);
  Mat block = Mat::Zero(N, N);
  block.topLeftCorner(N / 2, N / 2) = half;
  block.bottomRightCorner(N / 2, N / 2) = half;
  Mat u = dft_matrix(N, 0.5, 0.5).adjoint() * block;
  return {u, MapParams{N, 0.0, 0.5, 0.5}, MapKind::Baker};
}

struct StandardMapStepper::Impl {
  explicit Impl(int n) : fft(n) {}
  detail::Fft fft;
  std::vector<cplx> first;  // D_K and pre-twiddle of F
  std::vector<cplx> mid;    // post-twiddle of F, D_F, pre-twiddle of F^dag
  std::vector<cplx> last;   // post-twiddle of F^dag
  std::vector<cplx> pre;    // pre-twiddle of F alone
};

StandardMapStepper::StandardMapStepper(const MapParams& p) : params_(p) {
  check_params(p);
  const int N = p.N;
  impl_ = std::make_unique<Impl>(N);
  auto df = free_phases(p);
  impl_->pre.resize(N);
  impl_->mid.resize(N);
  impl_->last.resize(N);
  const double s = 1.0 / N;
  for (int k = 0; k < N; ++k) {
    impl_->pre[k] = std::polar(1.0, -2 * kPi * k * p.beta / N);
    cplx post_f = std::polar(1.0, -2 * kPi * p.alpha * (k + p.beta) / N);
    cplx pre_b = std::polar(1.0, 2 * kPi * p.alpha * k / N);
    impl_->mid[k] = post_f * df[k] * pre_b;
    impl_->last[k] = std::polar(s, 2 * kPi * (k + p.alpha) * p.beta / N);
  }
  set_K(p.K);
}

StandardMapStepper::~StandardMapStepper() = default;
StandardMapStepper::StandardMapStepper(StandardMapStepper&&) noexcept = default;
StandardMapStepper& StandardMapStepper::operator=(StandardMapStepper&&) noexcept = default;

void StandardMapStepper::set_K(double K) {
  params_.K = K;
  auto dk = kick_phases(params_);
  impl_->first.resize(params_.N);
  for (int n = 0; n < params_.N; ++n) impl_->first[n] = dk[n] * impl_->pre[n];
}

void StandardMapStepper::apply(Vec& psi) {
  const int N = params_.N;
  if (psi.size() != N) throw std::invalid_argument("StandardMapStepper: state dimension mismatch");
  cplx* buf = impl_->fft.data();
  for (int n = 0; n < N; ++n) buf[n] = impl_->first[n] * psi[n];
  impl_->fft.forward();
  for (int m = 0; m < N; ++m) buf[m] *= impl_->mid[m];
  impl_->fft.backward();
  for (int n = 0; n < N; ++n) psi[n] = impl_->last[n] * buf[n];
}

PureState apply_standard_map(const PureState& psi, const MapParams& p) {
  StandardMapStepper stepper(p);
  Vec out = psi;
  stepper.apply(out);
  return out;
}

PureState coherent_state(int N, double q0, double p0, double alpha) {
  if (N < 1) throw std::invalid_argument("coherent_state: N must be >= 1");
  Vec psi(N);
  for (int n = 0; n < N; ++n) {
    double qn = (n + alpha) / N;
    cplx acc = 0.0;
    for (int nu = -3; nu <= 3; ++nu) {
      double d = qn - q0 + nu;
      double ph = 2 * kPi * std::fmod(N * p0 * (qn + nu), 1.0);
      acc += std::exp(-kPi * N * d * d) * std::polar(1.0, ph);
    }
    psi[n] = acc;
  }
  return psi / psi.norm();
}

Mat parity_operator(int N) {
  Mat p = Mat::Zero(N, N);
  for (int n = 0; n < N; ++n) p(N - 1 - n, n) = 1.0;
  return p;
}

ParitySectors parity_split(const Mat& U, double tol) {
  const int N = static_cast<int>(U.rows());
  if (U.rows() != U.cols() || N < 2) throw std::invalid_argument("parity_split: square operator required");
  // [U, P]_{ij} = U_{i,N-1-j} - U_{N-1-i,j}
  double resid = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) resid = std::max(resid, std::abs(U(i, N - 1 - j) - U(N - 1 - i, j)));
  if (resid > tol) throw SymmetryViolation("operator does not commute with parity, residual " + std::to_string(resid));

  const int half = N / 2;
  const int ne = N - half;
  const double r = 1.0 / std::sqrt(2.0);
  ParitySectors s;
  s.basis_even = Mat::Zero(N, ne);
  s.basis_odd = Mat::Zero(N, half);
  for (int k = 0; k < half; ++k) {
    s.basis_even(k, k) = r;
    s.basis_even(N - 1 - k, k) = r;
    s.basis_odd(k, k) = r;
    s.basis_odd(N - 1 - k, k) = -r;
  }
  if (N % 2) s.basis_even(half, half) = 1.0;
  s.even = s.basis_even.adjoint() * U * s.basis_even;
  s.odd = s.basis_odd.adjoint() * U * s.basis_odd;
  return s;
}

}  // namespace qchaos
