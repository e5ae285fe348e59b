#include "qchaos/spectral_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qchaos/linalg.hpp"
#include "qchaos/stats.hpp"
#include "qchaos/tolerances.hpp"

namespace qchaos {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;
}  // namespace

EigenphaseSpectrum spectrum_from_phases(std::vector<double> phi) {
  if (phi.empty()) throw std::invalid_argument("spectrum_from_phases: empty spectrum");
  for (double& p : phi) {
    p = std::fmod(p, kTwoPi);
    if (p < 0) p += kTwoPi;
    if (p >= kTwoPi) p = 0.0;
  }
  std::sort(phi.begin(), phi.end());
  EigenphaseSpectrum sp;
  sp.N = static_cast<int>(phi.size());
  sp.phi = std::move(phi);
  const int N = sp.N;
  sp.x.resize(N);
  for (int k = 0; k < N; ++k) sp.x[k] = N * sp.phi[k] / kTwoPi;
  sp.s.resize(N);
  for (int k = 0; k + 1 < N; ++k) sp.s[k] = sp.x[k + 1] - sp.x[k];
  sp.s[N - 1] = sp.x[0] + N - sp.x[N - 1];
  for (int k = 0; k < N && N > 1; ++k) {
    double a = sp.s[k];
    double b = sp.s[(k + 1) % N];
    if (a < tol::kZeroSpacing) ++sp.zero_spacings;
    if (a < tol::kZeroSpacing || b < tol::kZeroSpacing) {
      ++sp.excluded_ratios;
      continue;
    }
    sp.r.push_back(std::min(a / b, b / a));
  }
  return sp;
}

EigenphaseSpectrum eigenphases(const Mat& U, double tol) {
  if (U.rows() != U.cols()) throw std::invalid_argument("eigenphases: square matrix required");
  double res = linalg::unitarity_residual(U);
  if (!(res < tol)) throw NumericalValidationError("eigenphases: input not unitary, residual " + std::to_string(res));
  RVec ph = linalg::unitary_eigenphases(U);
  std::vector<double> phi(ph.data(), ph.data() + ph.size());
  return spectrum_from_phases(std::move(phi));
}

double wigner_surmise(int beta, double s) {
  if (s < 0) return 0.0;
  switch (beta) {
    case 0: return std::exp(-s);
    case 1: return kPi / 2 * s * std::exp(-kPi * s * s / 4);
    case 2: return 32 / (kPi * kPi) * s * s * std::exp(-4 * s * s / kPi);
    case 4: return std::pow(2.0, 18) / (729.0 * kPi * kPi * kPi) * std::pow(s, 4) * std::exp(-64 * s * s / (9 * kPi));
    default: throw std::invalid_argument("wigner_surmise: beta must be 0, 1, 2 or 4");
  }
}

double poisson_pdf(double s) { return s < 0 ? 0.0 : std::exp(-s); }

double surmise_cdf(int beta, double s) {
  if (s <= 0) return 0.0;
  switch (beta) {
    case 0: return 1 - std::exp(-s);
    case 1: return 1 - std::exp(-kPi * s * s / 4);
    case 2: return std::erf(2 * s / std::sqrt(kPi)) - 4 * s / kPi * std::exp(-4 * s * s / kPi);
    case 4: return stats::integrate([](double t) { return wigner_surmise(4, t); }, 0.0, s);
    default: throw std::invalid_argument("surmise_cdf: beta must be 0, 1, 2 or 4");
  }
}

RatioStats ratio_statistics(const EigenphaseSpectrum& spec) {
  return ratio_statistics(std::vector<EigenphaseSpectrum>{spec});
}

RatioStats ratio_statistics(const std::vector<EigenphaseSpectrum>& specs) {
  RatioStats out;
  for (const auto& sp : specs) {
    out.r.insert(out.r.end(), sp.r.begin(), sp.r.end());
    out.excluded += sp.excluded_ratios;
  }
  auto m = stats::mean_se(out.r);
  out.mean = m.mean;
  out.se = m.se;
  return out;
}

std::vector<double> nns_spacings(const std::vector<EigenphaseSpectrum>& specs) {
  std::vector<double> s;
  for (const auto& sp : specs) s.insert(s.end(), sp.s.begin(), sp.s.end());
  return s;
}

SffTable spectral_form_factor(const std::vector<EigenphaseSpectrum>& specs, int n_max) {
  if (specs.empty()) throw std::invalid_argument("spectral_form_factor: empty ensemble");
  if (n_max < 1) throw std::invalid_argument("spectral_form_factor: n_max must be >= 1");
  const int N = specs.front().N;
  for (const auto& sp : specs)
    if (sp.N != N) throw std::invalid_argument("spectral_form_factor: dimension mismatch");
  SffTable t;
  t.N = N;
  const double m = static_cast<double>(specs.size());
  for (int n = 1; n <= n_max; ++n) {
    double sum = 0.0, sum2 = 0.0;
    for (const auto& sp : specs) {
      double re = 0.0, im = 0.0;
      for (double p : sp.phi) {
        double a = std::fmod(n * p, kTwoPi);
        re += std::cos(a);
        im += std::sin(a);
      }
      double v = (re * re + im * im) / N;
      sum += v;
      sum2 += v * v;
    }
    double mean = sum / m;
    double var = specs.size() > 1 ? (sum2 - m * mean * mean) / (m - 1) : 0.0;
    t.n.push_back(n);
    t.tau.push_back(static_cast<double>(n) / N);
    t.K.push_back(mean);
    t.se.push_back(std::sqrt(std::max(var, 0.0) / m));
  }
  return t;
}

double sff_point(const EigenphaseSpectrum& spec, int n) {
  cplx tr = 0.0;
  for (double p : spec.phi) tr += std::polar(1.0, std::fmod(n * p, kTwoPi));
  return std::norm(tr) / spec.N;
}

SffTable spectral_form_factor(const std::vector<Mat>& unitaries, int n_max) {
  std::vector<EigenphaseSpectrum> specs;
  specs.reserve(unitaries.size());
  for (const auto& u : unitaries) specs.push_back(eigenphases(u));
  return spectral_form_factor(specs, n_max);
}

double sff_theory(int beta, double tau) {
  if (tau < 0) throw std::invalid_argument("sff_theory: tau must be >= 0");
  switch (beta) {
    case 0: return 1.0;
    case 1:
      if (tau <= 1) return 2 * tau - tau * std::log1p(2 * tau);
      return 2 - tau * std::log((2 * tau + 1) / (2 * tau - 1));
    case 2: return std::min(tau, 1.0);
    default: throw std::invalid_argument("sff_theory: beta must be 0, 1 or 2");
  }
}

}  // namespace qchaos
