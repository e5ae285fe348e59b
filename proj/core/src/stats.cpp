#include "qchaos/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace qchaos::stats {

MeanSe mean_se(const std::vector<double>& x) {
  MeanSe r;
  r.n = x.size();
  if (x.empty()) return r;
  r.mean = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
  if (x.size() > 1) {
    double ss = 0.0;
    for (double v : x) ss += (v - r.mean) * (v - r.mean);
    r.sd = std::sqrt(ss / (x.size() - 1));
    r.se = r.sd / std::sqrt(static_cast<double>(x.size()));
  }
  return r;
}

double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    double f = cdf(sample[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  const double na = a.size(), nb = b.size();
  while (i < a.size() && j < b.size()) {
    double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  return d;
}

std::vector<double> Histogram::centers() const {
  std::vector<double> c;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) c.push_back(0.5 * (edges[i] + edges[i + 1]));
  return c;
}

Histogram histogram(const std::vector<double>& x, int bins, double lo, double hi) {
  if (x.empty()) throw std::invalid_argument("histogram: empty sample");
  std::vector<double> s = x;
  std::sort(s.begin(), s.end());
  if (!(hi > lo)) {
    lo = s.front();
    hi = s.back();
    if (hi <= lo) hi = lo + 1.0;
  }
  if (bins <= 0) {
    auto q = [&](double f) { return s[static_cast<std::size_t>(f * (s.size() - 1))]; };
    double iqr = q(0.75) - q(0.25);
    double width = 2.0 * iqr / std::cbrt(static_cast<double>(s.size()));
    bins = width > 0 ? static_cast<int>(std::ceil((hi - lo) / width)) : 1;
    bins = std::clamp(bins, 1, 1000);
  }
  Histogram h;
  h.edges.resize(bins + 1);
  for (int i = 0; i <= bins; ++i) h.edges[i] = lo + (hi - lo) * i / bins;
  h.counts.assign(bins, 0.0);
  for (double v : s) {
    if (v < lo || v > hi) continue;
    int k = static_cast<int>((v - lo) / (hi - lo) * bins);
    h.counts[std::min(k, bins - 1)] += 1.0;
  }
  const double w = (hi - lo) / bins;
  for (double c : h.counts) h.density.push_back(c / (s.size() * w));
  return h;
}

double chi2_uniform_pvalue(const std::vector<double>& counts) {
  if (counts.size() < 2) throw std::invalid_argument("chi2_uniform_pvalue: need at least two bins");
  double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  double expected = total / counts.size();
  double chi2 = 0.0;
  for (double c : counts) chi2 += (c - expected) * (c - expected) / expected;
  boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, chi2));
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("linear_fit: need >= 2 paired points");
  const double n = x.size();
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  return f;
}

double integrate(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-12);
}

}  // namespace qchaos::stats
