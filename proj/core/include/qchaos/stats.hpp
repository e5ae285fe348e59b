#pragma once

#include <functional>
#include <vector>

namespace qchaos::stats {

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
  double sd = 0.0;
  std::size_t n = 0;
};

MeanSe mean_se(const std::vector<double>& x);

// One-sample Kolmogorov-Smirnov distance against a continuous CDF.
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);
// Two-sample KS distance.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

struct Histogram {
  std::vector<double> edges;
  std::vector<double> counts;
  std::vector<double> density;

  std::vector<double> centers() const;
};

// Freedman-Diaconis bin width unless `bins` > 0.
Histogram histogram(const std::vector<double>& x, int bins = 0, double lo = 0.0, double hi = 0.0);

// Chi-square goodness of fit of counts against equal expected occupancy;
// returns the upper-tail p-value.
double chi2_uniform_pvalue(const std::vector<double>& counts);

// Ordinary least squares slope and intercept of y on x.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
};
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

// Adaptive Gauss-Kronrod integral of f over [a, b]; b may be +inf.
double integrate(const std::function<double(double)>& f, double a, double b);

}  // namespace qchaos::stats
