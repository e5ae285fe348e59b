#include "qchaos/state_measures.hpp"

#include <cmath>
#include <numbers>

#include "fft.hpp"

namespace qchaos {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kEuler = std::numbers::egamma;
}  // namespace

Participation participation(const Vec& psi) {
  double norm2 = psi.squaredNorm();
  if (!(norm2 > 0)) throw std::invalid_argument("participation: zero state");
  double ipr = 0.0;
  for (Eigen::Index j = 0; j < psi.size(); ++j) {
    double t = std::norm(psi[j]) / norm2;
    ipr += t * t;
  }
  return {ipr, 1.0 / ipr};
}

double shannon_entropy(const Vec& psi) {
  double norm2 = psi.squaredNorm();
  double h = 0.0;
  for (Eigen::Index j = 0; j < psi.size(); ++j) {
    double t = std::norm(psi[j]) / norm2;
    if (t > 0) h -= t * std::log(t);
  }
  return h;
}

double ipr_haar_complex(int N) { return 2.0 / (N + 1); }
double ipr_haar_real(int N) { return 3.0 / (N + 2); }
double shannon_haar_complex(int N) { return std::log(N) - (1 - kEuler); }
double shannon_haar_real(int N) { return std::log(N) - (2 - kEuler - std::log(2.0)); }

HusimiGrid husimi(const Vec& psi, double alpha, double beta) {
  const int N = static_cast<int>(psi.size());
  if (N < 1) throw std::invalid_argument("husimi: empty state");
  // window w(d), d = n - i in (-N, N), stored at d + N - 1
  std::vector<cplx> w(2 * N - 1);
  for (int d = -(N - 1); d <= N - 1; ++d) {
    cplx acc = 0.0;
    for (int nu = -3; nu <= 3; ++nu) {
      double x = d + static_cast<double>(N) * nu;
      acc += std::exp(-kPi * x * x / N) * std::polar(1.0, 2 * kPi * beta * nu);
    }
    w[d + N - 1] = acc;
  }
  double norm2 = 0.0;
  for (int n = 0; n < N; ++n) norm2 += std::norm(w[n + N - 1]);

  std::vector<cplx> twist(N);
  for (int n = 0; n < N; ++n) twist[n] = std::polar(1.0, -2 * kPi * beta * n / N) * psi[n];

  HusimiGrid g;
  g.N = N;
  g.alpha = alpha;
  g.beta = beta;
  g.W.resize(N, N);
  detail::Fft fft(N);
  cplx* buf = fft.data();
  const double scale = 1.0 / (norm2 * N);
  double mass = 0.0;
  for (int i = 0; i < N; ++i) {
    for (int n = 0; n < N; ++n) buf[n] = std::conj(w[n - i + N - 1]) * twist[n];
    fft.forward();
    for (int j = 0; j < N; ++j) {
      double v = std::norm(buf[j]) * scale;
      g.W(i, j) = v;
      mass += v;
    }
  }
  g.raw_mass = mass;
  g.W /= mass;
  return g;
}

double wehrl_entropy(const HusimiGrid& grid, EntropyUnit unit) {
  double h = 0.0;
  for (Eigen::Index k = 0; k < grid.W.size(); ++k) {
    double v = grid.W.data()[k];
    if (v > 0) h -= v * std::log(v);
  }
  return unit == EntropyUnit::Bits ? h / std::log(2.0) : h;
}

double wehrl_random_state(int N) { return 2 * std::log(N) - (1 - kEuler); }

PhasePoint husimi_centroid(const HusimiGrid& g) {
  cplx zq = 0.0, zp = 0.0;
  for (int i = 0; i < g.N; ++i)
    for (int j = 0; j < g.N; ++j) {
      double v = g.W(i, j);
      zq += v * std::polar(1.0, 2 * kPi * (i + g.alpha) / g.N);
      zp += v * std::polar(1.0, 2 * kPi * (j + g.beta) / g.N);
    }
  auto to_unit = [](cplx z) {
    double a = std::arg(z) / (2 * kPi);
    return a < 0 ? a + 1 : a;
  };
  return {to_unit(zq), to_unit(zp)};
}

std::vector<double> entropy_trajectory(const StepFn& step, Vec psi0, int T, const StateMeasure& measure) {
  if (T < 0) throw std::invalid_argument("entropy_trajectory: T must be >= 0");
  std::vector<double> out;
  out.reserve(T + 1);
  out.push_back(measure(psi0));
  for (int t = 1; t <= T; ++t) {
    step(psi0);
    out.push_back(measure(psi0));
  }
  return out;
}

double ehrenfest_time(double N, double lambda) {
  if (!(lambda > 0) || !(N > 0)) throw std::invalid_argument("ehrenfest_time: N and lambda must be positive");
  return std::log(N) / lambda;
}

}  // namespace qchaos
