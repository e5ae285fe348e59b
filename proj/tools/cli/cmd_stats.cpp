#include <cmath>

#include "common.hpp"
#include "qchaos/stats.hpp"

namespace qchaos::cli {

namespace {

void add_sampling_options(Command& c, int samples) {
  c.params.integer(c.app, "samples", samples, "unitaries (K window draws for the standard map)");
  c.params.real(c.app, "dK", 0.5, "K window width");
  c.params.flag(c.app, "parity", "split into reflection sectors (needs alpha = 1/2, beta = 0)");
}

Json ks_block(const std::vector<double>& s) {
  Json j;
  for (int beta : {0, 1, 2, 4})
    j[beta == 0 ? "poisson" : beta == 1 ? "goe" : beta == 2 ? "gue" : "gse"] =
        stats::ks_statistic(s, [beta](double x) { return surmise_cdf(beta, x); });
  return j;
}

Result stats_nns(const Context& ctx) {
  const Params& p = ctx.p;
  auto specs = sample_spectra(ctx, p.i("samples"), p.r("dK"), p.f("parity"));
  auto s = nns_spacings(specs);
  Result r;
  r.name = "stats_nns";
  auto h = stats::histogram(s, 60, 0.0, 4.0);
  {
    auto& t = r.table("histogram");
    auto c = h.centers();
    std::vector<double> po, goe, gue;
    for (double x : c) {
      po.push_back(wigner_surmise(0, x));
      goe.push_back(wigner_surmise(1, x));
      gue.push_back(wigner_surmise(2, x));
    }
    t.add("s", c);
    t.add("density", h.density);
    t.add("poisson", po);
    t.add("goe", goe);
    t.add("gue", gue);
  }
  r.summary["spacings"] = s.size();
  r.summary["ks"] = ks_block(s);
  svg::Panel pan{"nearest-neighbour spacings", "s", "P(s)", {histogram_series("data", s, 60, 0, 4)}};
  for (int beta : {0, 1, 2})
    pan.series.push_back(curve_series(beta == 0 ? "Poisson" : beta == 1 ? "GOE" : "GUE",
                                      [beta](double x) { return wigner_surmise(beta, x); }, 0, 4));
  r.figure = {"spacing distribution", {pan}, 1};
  return r;
}

Result stats_ratio(const Context& ctx) {
  const Params& p = ctx.p;
  auto specs = sample_spectra(ctx, p.i("samples"), p.r("dK"), p.f("parity"));
  auto rs = ratio_statistics(specs);
  Result r;
  r.name = "stats_ratio";
  {
    auto& t = r.table("ratios");
    t.add("r", rs.r);
  }
  r.summary["r_mean"] = rs.mean;
  r.summary["r_se"] = rs.se;
  r.summary["excluded"] = rs.excluded;
  r.summary["reference"] = {{"poisson", kRatioPoisson}, {"goe", kRatioGOE}, {"gue", kRatioGUE}, {"gse", kRatioGSE}};
  svg::Panel pan{"spacing ratios", "r", "P(r)", {histogram_series("data", rs.r, 40, 0, 1)}};
  r.figure = {"ratio distribution", {pan}, 1};
  return r;
}

Result stats_sff(const Context& ctx) {
  const Params& p = ctx.p;
  auto specs = sample_spectra(ctx, p.i("samples"), p.r("dK"), p.f("parity"));
  int nmax = p.i("nmax");
  if (nmax < 1) nmax = 2 * specs.front().N;
  auto t = spectral_form_factor(specs, nmax);
  const std::string& m = p.s("map");
  const int beta = m == "coe" ? 1 : p.f("parity") ? 1 : 2;
  std::vector<double> theory, n(t.n.begin(), t.n.end());
  for (double tau : t.tau) theory.push_back(sff_theory(beta, tau));
  Result r;
  r.name = "stats_sff";
  {
    auto& tb = r.table("sff");
    tb.add("n", n);
    tb.add("tau", t.tau);
    tb.add("K", t.K);
    tb.add("se", t.se);
    tb.add("theory", theory);
  }
  r.summary["spectra"] = specs.size();
  r.summary["theory_beta"] = beta;
  svg::Panel pan{"spectral form factor", "tau", "K(tau)",
                 {series("data", svg::Style::Line, t.tau, t.K), series("RMT", svg::Style::Line, t.tau, theory)}};
  r.figure = {"form factor", {pan}, 1};
  return r;
}

}  // namespace

void register_stats(CLI::App& root, Registry& reg) {
  auto* g = add_group(root, "stats", "spectral statistics");
  {
    auto& c = reg.add(g, "nns", "nearest-neighbour spacing distribution", stats_nns);
    add_map_options(c, "standard", 1000, 10.0, "golden", "golden");
    add_sampling_options(c, 1);
  }
  {
    auto& c = reg.add(g, "ratio", "mean spacing ratio", stats_ratio);
    add_map_options(c, "standard", 1000, 10.0, "golden", "golden");
    add_sampling_options(c, 1);
  }
  {
    auto& c = reg.add(g, "sff", "spectral form factor", stats_sff);
    add_map_options(c, "standard", 300, 10.0, "golden", "golden");
    add_sampling_options(c, 50);
    c.params.integer(c.app, "nmax", 0, "largest power (0 means 2N)");
  }
}

}  // namespace qchaos::cli
