#include "qchaos/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>

#include "qchaos/bipartite.hpp"
#include "qchaos/ensembles.hpp"
#include "qchaos/linalg.hpp"
#include "qchaos/rng.hpp"

namespace qchaos {

namespace {

double entropy_of_state(const Mat& rho) {
  RVec ev = linalg::eigvalsh(0.5 * (rho + rho.adjoint()));
  return linalg::entropy_of(ev);
}

// standard error of the sample standard deviation, moment based
double sd_standard_error(const std::vector<double>& x, double mean, double sd) {
  const double n = static_cast<double>(x.size());
  if (n < 4 || sd <= 0) return 0.0;
  double m4 = 0.0;
  for (double v : x) m4 += std::pow(v - mean, 4);
  m4 /= n;
  double var_s2 = (m4 - std::pow(sd, 4) * (n - 3.0) / (n - 1.0)) / n;
  return std::sqrt(std::max(var_s2, 0.0)) / (2.0 * sd);
}

void fill_moments(ConcentrationReport& r) {
  auto ms = stats::mean_se(r.samples);
  r.mean = ms.mean;
  double ss = 0.0;
  for (double v : r.samples) ss += (v - r.mean) * (v - r.mean);
  r.sd = r.samples.size() > 1 ? std::sqrt(ss / static_cast<double>(r.samples.size() - 1)) : 0.0;
  r.sd_se = sd_standard_error(r.samples, r.mean, r.sd);
}

}  // namespace

bool ConcentrationReport::bounds_hold() const {
  for (std::size_t i = 0; i < empirical.size(); ++i)
    if (empirical[i] > bound[i]) return false;
  return true;
}

ConcentrationReport hoeffding_demo(int n, const std::vector<double>& eps, int trials, std::uint64_t seed) {
  if (n < 1 || trials < 1) throw std::invalid_argument("hoeffding_demo: n and trials must be >= 1");
  Rng rng(seed);
  std::binomial_distribution<int> binom(n, 0.5);
  ConcentrationReport r;
  r.dim = n;
  r.eta = 1.0;
  r.eps = eps;
  r.samples.resize(trials);
  for (int t = 0; t < trials; ++t) r.samples[t] = (2.0 * binom(rng.engine()) - n) / n;
  for (double e : eps) {
    auto c = std::count_if(r.samples.begin(), r.samples.end(), [&](double z) { return std::abs(z) >= e - 1e-15; });
    r.empirical.push_back(static_cast<double>(c) / trials);
    r.bound.push_back(2.0 * std::exp(-n * e * e / 2.0));
  }
  fill_moments(r);
  return r;
}

double equator_density(int n, double theta) {
  if (n < 1) throw std::invalid_argument("equator_density: n must be >= 1");
  if (theta < 0.0 || theta > M_PI) return 0.0;
  // integral of sin^{n-1} over [0, pi] is B(1/2, n/2)
  return std::pow(std::sin(theta), n - 1) / boost::math::beta(0.5, 0.5 * n);
}

double equator_cdf(int n, double theta) {
  if (theta <= 0.0) return 0.0;
  if (theta >= M_PI) return 1.0;
  // (1 - cos theta)/2 is Beta(n/2, n/2) distributed
  return boost::math::ibeta(0.5 * n, 0.5 * n, 0.5 * (1.0 - std::cos(theta)));
}

EquatorReport fat_equator(int n, int samples, std::uint64_t seed, int bins) {
  if (n < 1 || samples < 1) throw std::invalid_argument("fat_equator: n and samples must be >= 1");
  Rng rng(seed);
  EquatorReport r;
  r.n = n;
  r.theta.resize(samples);
  std::vector<double> x1(samples);
  std::vector<double> x(n + 1);
  for (int s = 0; s < samples; ++s) {
    double norm2 = 0.0;
    for (auto& v : x) {
      v = rng.normal();
      norm2 += v * v;
    }
    double norm = std::sqrt(norm2);
    r.theta[s] = std::acos(std::clamp(x[n] / norm, -1.0, 1.0));
    x1[s] = x[0] / norm;
  }
  r.hist = stats::histogram(r.theta, bins, 0.0, M_PI);
  r.ks = stats::ks_statistic(r.theta, [n](double t) { return equator_cdf(n, t); });
  for (double e = 0.05; e < 1.0; e += 0.05) {
    auto c = std::count_if(x1.begin(), x1.end(), [&](double v) { return std::abs(v) > e; });
    r.eps.push_back(e);
    r.band_empirical.push_back(static_cast<double>(c) / samples);
    r.band_bound.push_back(2.0 * std::exp(-n * e * e / 2.0));
  }
  return r;
}

double levy_entropy_bound(int N, double eps) {
  if (N < 2) throw std::invalid_argument("levy_entropy_bound: N must be >= 2");
  const double l = M_PI * std::log(static_cast<double>(N));
  return 2.0 * std::exp(-(static_cast<double>(N) * N - 1.0) * eps * eps / (8.0 * l * l));
}

ConcentrationReport entropy_concentration(int N, int samples, std::uint64_t seed, const std::vector<double>& eps) {
  if (N < 2 || samples < 2) throw std::invalid_argument("entropy_concentration: need N >= 2, samples >= 2");
  ConcentrationReport r;
  r.dim = N;
  // printed bound is 2 exp(-(n-1) eps^2 / (2 eta^2)) with n - 1 = N^2 - 1
  r.eta = 2.0 * M_PI * std::log(static_cast<double>(N));
  r.eps = eps;
  r.samples.resize(samples);
  for (int s = 0; s < samples; ++s) {
    Rng rng = substream(seed, s);
    Vec psi = haar_state(rng, N * N);
    r.samples[s] = entropies(schmidt(psi, N, N)).S_vN;
  }
  fill_moments(r);
  for (double e : eps) {
    auto c = std::count_if(r.samples.begin(), r.samples.end(), [&](double v) { return std::abs(v - r.mean) >= e; });
    r.empirical.push_back(static_cast<double>(c) / samples);
    r.bound.push_back(levy_entropy_bound(N, e));
  }
  return r;
}

double output_entropy(const KrausSet& channel, const Vec& psi) {
  Vec v = psi / psi.norm();
  return entropy_of_state(apply_channel(channel, v * v.adjoint()));
}

MinEntropyResult min_output_entropy(const KrausSet& channel, int restarts, int iters, std::uint64_t seed) {
  if (restarts < 1 || iters < 0) throw std::invalid_argument("min_output_entropy: restarts >= 1, iters >= 0");
  const int N = channel.N_in;
  const double h = 1e-5;
  MinEntropyResult best;
  best.value = std::numeric_limits<double>::infinity();
  bool all_converged = true;

  auto f = [&](const Vec& v) { return output_entropy(channel, v); };

  for (int r = 0; r < restarts; ++r) {
    Rng rng = substream(seed, r);
    Vec psi = haar_state(rng, N);
    double val = f(psi);
    double step = 0.1;
    bool conv = false;
    for (int it = 0; it < iters && !conv; ++it) {
      // gradient over real and imaginary parts
      Vec g(N);
      for (int k = 0; k < N; ++k) {
        Vec p = psi, m = psi;
        p(k) += h;
        m(k) -= h;
        double gr = (f(p) - f(m)) / (2 * h);
        p = psi;
        m = psi;
        p(k) += cplx(0, h);
        m(k) -= cplx(0, h);
        double gi = (f(p) - f(m)) / (2 * h);
        g(k) = cplx(gr, gi);
      }
      // project out the radial direction
      g -= psi * psi.dot(g).real();
      double gn = g.norm();
      if (gn < 1e-9) {
        conv = true;
        break;
      }
      bool moved = false;
      while (step > 1e-12) {
        Vec trial = psi - step * g / gn;
        trial /= trial.norm();
        double tv = f(trial);
        if (tv < val) {
          conv = val - tv < 1e-12;
          psi = trial;
          val = tv;
          step *= 1.5;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) conv = true;
    }
    all_converged = all_converged && conv;
    if (val < best.value) {
      best.value = val;
      best.state = psi;
    }
    best.best_after_restart.push_back(best.value);
  }
  best.value = std::max(best.value, 0.0);
  best.converged = all_converged;
  return best;
}

RVec tensor_image_spectrum(const KrausSet& channel) {
  if (channel.N_in != channel.N_out) throw std::invalid_argument("tensor_image_spectrum: square channel required");
  const int M = channel.M();
  const double N = channel.N_in;
  // A[k][i] = K_k^dag K_i; G_{(ij),(kl)} = Tr(A_ki A_jl) / N
  std::vector<std::vector<Mat>> a(M, std::vector<Mat>(M));
  for (int k = 0; k < M; ++k)
    for (int i = 0; i < M; ++i) a[k][i] = channel.K[k].adjoint() * channel.K[i];
  Mat g(M * M, M * M);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j)
      for (int k = 0; k < M; ++k)
        for (int l = 0; l < M; ++l)
          g(i * M + j, k * M + l) = a[k][i].cwiseProduct(a[j][l].transpose()).sum() / N;
  return linalg::eigvalsh(0.5 * (g + g.adjoint()));
}

BhReport bh_inequality_check(int N, int M, int samples, std::uint64_t seed) {
  if (N < 1 || M < 1 || samples < 1) throw std::invalid_argument("bh_inequality_check: positive sizes required");
  BhReport r;
  r.N = N;
  r.M = M;
  r.bound = 2.0 * std::log(static_cast<double>(M)) - std::log(static_cast<double>(M)) / M;
  int pass_s = 0, pass_n = 0;
  for (int s = 0; s < samples; ++s) {
    Rng rng = substream(seed, s);
    std::vector<Mat> ops;
    for (int j = 0; j < M; ++j) ops.push_back(cue(rng, N) / std::sqrt(static_cast<double>(M)));
    RVec ev = tensor_image_spectrum(make_kraus(std::move(ops)));
    double S = linalg::entropy_of(ev);
    double lmax = ev.maxCoeff();
    r.entropy.push_back(S);
    r.lambda_max.push_back(lmax);
    if (S <= r.bound + 1e-12) ++pass_s;
    if (lmax >= 1.0 / M - 1e-9) ++pass_n;
  }
  r.entropy_pass_fraction = static_cast<double>(pass_s) / samples;
  r.norm_pass_fraction = static_cast<double>(pass_n) / samples;
  return r;
}

double holevo_fixed_ensemble(const KrausSet& channel, const std::vector<Mat>& states, const std::vector<double>& probs) {
  if (states.size() != probs.size() || states.empty())
    throw std::invalid_argument("holevo_fixed_ensemble: states and probs differ in length");
  Mat avg = Mat::Zero(channel.N_out, channel.N_out);
  double mix = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (probs[i] < 0) throw std::invalid_argument("holevo_fixed_ensemble: negative probability");
    Mat out = apply_channel(channel, states[i]);
    avg += probs[i] * out;
    mix += probs[i] * entropy_of_state(out);
  }
  return std::max(entropy_of_state(avg) - mix, 0.0);
}

}  // namespace qchaos
