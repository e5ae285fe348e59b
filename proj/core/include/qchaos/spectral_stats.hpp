#pragma once

#include <numbers>
#include <vector>

#include "qchaos/types.hpp"

namespace qchaos {

// Sorted eigenphases phi in [0, 2pi), unfolded x = N phi / 2pi, cyclic
// spacings s (last wraps to first) and cyclic ratios r.
struct EigenphaseSpectrum {
  int N = 0;
  std::vector<double> phi;
  std::vector<double> x;
  std::vector<double> s;
  std::vector<double> r;
  int zero_spacings = 0;  // spacings below 1e-12
  int excluded_ratios = 0;  // ratios touching a zero spacing
};

EigenphaseSpectrum spectrum_from_phases(std::vector<double> phi);
// Throws NumericalValidationError if U is not unitary to `tol`.
EigenphaseSpectrum eigenphases(const Mat& U, double tol = 1e-8);

inline constexpr double kRatioPoisson = 0.38629436111989061883;  // 2 ln2 - 1
inline constexpr double kRatioGOE = 0.53589838486224541294;      // 4 - 2 sqrt3
inline constexpr double kRatioGUE = 2 * std::numbers::sqrt3 / std::numbers::pi - 0.5;
inline constexpr double kRatioGSE = 32 * std::numbers::sqrt3 / (15 * std::numbers::pi) - 0.5;

// beta = 1, 2, 4 give the Wigner surmises; beta = 0 gives Poisson e^{-s}.
double wigner_surmise(int beta, double s);
double poisson_pdf(double s);
double surmise_cdf(int beta, double s);

struct RatioStats {
  double mean = 0.0;
  double se = 0.0;
  std::vector<double> r;
  int excluded = 0;
};

RatioStats ratio_statistics(const EigenphaseSpectrum& spec);
// Pools ratios of independent spectra (symmetry sectors, K-window samples).
RatioStats ratio_statistics(const std::vector<EigenphaseSpectrum>& specs);

// All cyclic unfolded spacings of the given spectra, concatenated.
std::vector<double> nns_spacings(const std::vector<EigenphaseSpectrum>& specs);

struct SffTable {
  int N = 0;
  std::vector<int> n;
  std::vector<double> tau;
  std::vector<double> K;
  std::vector<double> se;
};

// K(n) = <|Tr U^n|^2>/N for n = 1..n_max from eigenphases.
SffTable spectral_form_factor(const std::vector<EigenphaseSpectrum>& specs, int n_max);
SffTable spectral_form_factor(const std::vector<Mat>& unitaries, int n_max);

// |Tr U^n|^2 / N for a single spectrum; n = 0 gives N.
double sff_point(const EigenphaseSpectrum& spec, int n);

// beta = 0 Poisson, 1 GOE, 2 GUE.
double sff_theory(int beta, double tau);

}  // namespace qchaos
