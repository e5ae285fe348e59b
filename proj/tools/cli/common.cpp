#include "common.hpp"

#include <cmath>
#include <stdexcept>

#include "qchaos/ensembles.hpp"
#include "qchaos/rng.hpp"

namespace qchaos::cli {

void add_map_options(Command& c, const std::string& map_default, int N, double K, const std::string& alpha,
                     const std::string& beta, std::vector<std::string> maps) {
  c.params.text(c.app, "map", map_default, "map or ensemble", std::move(maps));
  c.params.integer(c.app, "N", N, "Hilbert space dimension");
  c.params.real(c.app, "K", K, "kick strength");
  c.params.text(c.app, "alpha", alpha, "position Floquet phase (number or 'golden')");
  c.params.text(c.app, "beta", beta, "momentum Floquet phase (number or 'golden')");
}

MapParams map_params(const Params& p) {
  if (p.i("N") < 2) throw std::invalid_argument("--N must be >= 2");
  return {p.i("N"), p.r("K"), parse_beta(p.s("alpha")), parse_beta(p.s("beta"))};
}

Mat map_unitary(const Params& p, double K, std::uint64_t seed) {
  MapParams mp = map_params(p);
  const std::string& m = p.s("map");
  if (m == "standard") {
    mp.K = K;
    return build_standard_map(mp).U;
  }
  if (m == "baker") {
    if (mp.N % 2) throw std::invalid_argument("baker map needs even N");
    return build_baker_map(mp.N).U;
  }
  if (m == "cue") return sample_cue(mp.N, seed).m;
  if (m == "coe") return sample_coe(mp.N, seed).m;
  throw std::invalid_argument("unknown map " + m);
}

std::vector<EigenphaseSpectrum> sample_spectra(const Context& ctx, int samples, double dK, bool parity) {
  if (samples < 1) throw std::invalid_argument("--samples must be >= 1");
  const Params& p = ctx.p;
  std::vector<std::vector<EigenphaseSpectrum>> per(samples);
  parallel_for(samples, ctx.workers(), [&](int k) {
    Rng rng = substream(ctx.seed(), k);
    double K = p.r("K");
    if (samples > 1) K += dK * (rng.uniform() - 0.5);
    Mat U = map_unitary(p, K, rng.engine()());
    if (parity) {
      auto sec = parity_split(U);
      per[k] = {eigenphases(sec.even), eigenphases(sec.odd)};
    } else {
      per[k] = {eigenphases(U)};
    }
  });
  std::vector<EigenphaseSpectrum> out;
  for (auto& v : per)
    for (auto& s : v) out.push_back(std::move(s));
  return out;
}

svg::Series phase_points(const std::string& name, const std::vector<double>& phi) {
  svg::Series s{name, svg::Style::Points, {}, {}};
  for (double f : phi) {
    s.x.push_back(std::cos(f));
    s.y.push_back(std::sin(f));
  }
  return s;
}

}  // namespace qchaos::cli
