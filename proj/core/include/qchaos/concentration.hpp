#pragma once

#include <cstdint>
#include <vector>

#include "qchaos/channels.hpp"
#include "qchaos/stats.hpp"
#include "qchaos/types.hpp"

namespace qchaos {

// Empirical deviation probabilities next to an analytic upper bound on an
// epsilon grid. `eta` is the Lipschitz constant implied by the bound.
struct ConcentrationReport {
  int dim = 0;
  double eta = 0.0;
  std::vector<double> eps;
  std::vector<double> empirical;
  std::vector<double> bound;
  double mean = 0.0;
  double sd = 0.0;
  double sd_se = 0.0;
  std::vector<double> samples;

  bool bounds_hold() const;
};

// P(|zeta_n|/n >= eps) for sums of n fair +-1 variables vs 2 exp(-n eps^2/2).
ConcentrationReport hoeffding_demo(int n, const std::vector<double>& eps, int trials, std::uint64_t seed);

// Polar-angle density sin^{n-1}(theta) of uniform points on S^n in R^{n+1}.
double equator_density(int n, double theta);
double equator_cdf(int n, double theta);

struct EquatorReport {
  int n = 0;
  std::vector<double> theta;
  stats::Histogram hist;
  double ks = 0.0;
  std::vector<double> eps;
  std::vector<double> band_empirical;  // P(|x_1| > eps)
  std::vector<double> band_bound;      // 2 exp(-n eps^2/2)
};

EquatorReport fat_equator(int n, int samples, std::uint64_t seed, int bins = 60);

// Entanglement entropy of Haar states on N x N against
// 2 exp(-(N^2-1) eps^2 / (8 (pi ln N)^2)).
double levy_entropy_bound(int N, double eps);
ConcentrationReport entropy_concentration(int N, int samples, std::uint64_t seed,
                                          const std::vector<double>& eps = {0.05, 0.1, 0.2, 0.3, 0.5});

struct MinEntropyResult {
  double value = 0.0;
  Vec state;
  bool converged = false;
  std::vector<double> best_after_restart;  // non-increasing
};

// Multi-start projected descent over pure inputs with central-difference
// gradients (step 1e-5).
MinEntropyResult min_output_entropy(const KrausSet& channel, int restarts = 64, int iters = 200,
                                    std::uint64_t seed = 1);
double output_entropy(const KrausSet& channel, const Vec& psi);

struct BhReport {
  int N = 0;
  int M = 0;
  double bound = 0.0;  // 2 ln M - ln M / M
  std::vector<double> entropy;
  std::vector<double> lambda_max;
  double entropy_pass_fraction = 0.0;
  double norm_pass_fraction = 0.0;
};

// Spectrum of (Phi (x) conj Phi)(|phi+><phi+|) as the Gram matrix of the
// M^2 vectors (K_i (x) conj K_j)|phi+>.
RVec tensor_image_spectrum(const KrausSet& channel);
// Sampled channels are random mixed-unitary maps (1/M) sum U_i rho U_i^dag.
BhReport bh_inequality_check(int N, int M, int samples, std::uint64_t seed);

double holevo_fixed_ensemble(const KrausSet& channel, const std::vector<Mat>& states, const std::vector<double>& probs);

}  // namespace qchaos
