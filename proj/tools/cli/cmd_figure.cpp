// Figure-class experiments. Defaults are desk scale; every figure finishes in
// a few minutes on one core.
#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "qchaos/bipartite.hpp"
#include "qchaos/channels.hpp"
#include "qchaos/concentration.hpp"
#include "qchaos/designs.hpp"
#include "qchaos/ensembles.hpp"
#include "qchaos/linalg.hpp"
#include "qchaos/operator_ent.hpp"
#include "qchaos/state_measures.hpp"
#include "qchaos/stats.hpp"

namespace qchaos::cli {

namespace {

using Density = std::function<double(double)>;

// Histogram table with optional reference densities evaluated at bin centres.
void hist_table(Result& r, const std::string& key, const std::vector<double>& x, int bins, double lo, double hi,
                const std::vector<std::pair<std::string, Density>>& refs = {}) {
  std::vector<double> c, d;
  svg::density_histogram(x, bins, lo, hi, c, d);
  auto& t = r.table(key);
  t.add("x", c);
  t.add("density", d);
  for (const auto& [name, f] : refs) {
    std::vector<double> y;
    for (double v : c) y.push_back(f(v));
    t.add(name, y);
  }
}

svg::Panel hist_panel(const std::string& title, const std::string& xl, const std::vector<double>& x, int bins,
                      double lo, double hi, const std::vector<std::pair<std::string, Density>>& refs = {}) {
  svg::Panel p{title, xl, "density", {histogram_series("data", x, bins, lo, hi)}};
  for (const auto& [name, f] : refs) p.series.push_back(curve_series(name, f, lo, hi));
  return p;
}

std::vector<double> iota(std::size_t n, double start = 0) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = start + static_cast<double>(i);
  return v;
}

// Spectra of standard maps with K drawn from a window around K.
std::vector<EigenphaseSpectrum> window_spectra(int N, double K, double dK, double alpha, double beta, int samples,
                                               std::uint64_t seed, int workers) {
  std::vector<EigenphaseSpectrum> out(samples);
  parallel_for(samples, workers, [&](int k) {
    Rng rng = substream(seed, k);
    double Kk = samples > 1 ? K + dK * (rng.uniform() - 0.5) : K;
    out[k] = eigenphases(build_standard_map({N, Kk, alpha, beta}).U);
  });
  return out;
}

// ---------------------------------------------------------------------------

Result fig_nns(const Context& ctx) {
  const Params& p = ctx.p;
  const int N = p.i("N"), S = p.i("samples");
  Result r;
  r.name = "fig3-nns";
  r.figure.title = "nearest-neighbour spacing distributions";
  struct Case {
    const char* key;
    double K;
    int beta;
  };
  for (Case c : {Case{"regular", p.r("K_regular"), 0}, Case{"chaotic", p.r("K_chaotic"), 2}}) {
    auto s = nns_spacings(window_spectra(N, c.K, 0.5, kGolden, kGolden, S, ctx.seed() + c.beta, ctx.workers()));
    const int beta = c.beta;
    std::vector<std::pair<std::string, Density>> refs = {
        {"poisson", [](double x) { return wigner_surmise(0, x); }},
        {"gue", [](double x) { return wigner_surmise(2, x); }}};
    hist_table(r, c.key, s, 50, 0, 4, refs);
    r.summary[c.key] = {{"K", c.K},
                        {"spacings", s.size()},
                        {"ks_expected", stats::ks_statistic(s, [beta](double x) { return surmise_cdf(beta, x); })}};
    r.figure.panels.push_back(hist_panel(std::string(c.key) + " K=" + io::fmt(c.K), "s", s, 50, 0, 4, refs));
  }
  return r;
}

Result fig_sff(const Context& ctx) {
  const Params& p = ctx.p;
  Result r;
  r.name = "fig4-sff";
  r.figure.title = "spectral form factor";
  {
    const int N = p.i("N_cue"), S = p.i("samples_cue");
    std::vector<EigenphaseSpectrum> specs(S);
    parallel_for(S, ctx.workers(), [&](int k) { specs[k] = eigenphases(sample_cue(N, substream(ctx.seed(), k).engine()()).m); });
    auto t = spectral_form_factor(specs, 2 * N);
    std::vector<double> th;
    for (double tau : t.tau) th.push_back(sff_theory(2, tau));
    auto& tb = r.table("cue");
    tb.add("tau", t.tau);
    tb.add("K", t.K);
    tb.add("se", t.se);
    tb.add("theory", th);
    r.figure.panels.push_back({"CUE N=" + std::to_string(N), "tau", "K",
                               {series("CUE", svg::Style::Line, t.tau, t.K), series("min(tau,1)", svg::Style::Line, t.tau, th)}});
  }
  {
    const int N = p.i("N_map"), S = p.i("samples_map");
    auto specs = window_spectra(N, p.r("K"), 0.5, kGolden, kGolden, S, ctx.seed() + 1, ctx.workers());
    auto t = spectral_form_factor(specs, 2 * N);
    std::vector<double> th;
    for (double tau : t.tau) th.push_back(sff_theory(2, tau));
    auto& tb = r.table("standard_map");
    tb.add("tau", t.tau);
    tb.add("K", t.K);
    tb.add("se", t.se);
    tb.add("theory", th);
    r.figure.panels.push_back({"standard map N=" + std::to_string(N), "tau", "K",
                               {series("map", svg::Style::Line, t.tau, t.K), series("GUE", svg::Style::Line, t.tau, th)}});
  }
  r.summary["N_cue"] = p.i("N_cue");
  r.summary["N_map"] = p.i("N_map");
  return r;
}

Result fig_pr(const Context& ctx) {
  const Params& p = ctx.p;
  const int N = p.i("N");
  Result r;
  r.name = "fig5-pr";
  r.figure.title = "participation ratios of Floquet eigenvectors";
  struct Case {
    const char* key;
    double a, b, ref;
  };
  for (Case c : {Case{"tr_broken", kGolden, kGolden, 0.5}, Case{"tr_parity", 0.5, 0.0, 1.0 / 3}}) {
    Mat v = linalg::eig(build_standard_map({N, p.r("K"), c.a, c.b}).U).second;
    std::vector<double> pr;
    for (Eigen::Index k = 0; k < v.cols(); ++k) pr.push_back(participation(v.col(k).normalized()).pr / N);
    hist_table(r, c.key, pr, 40, 0, 1);
    r.summary[c.key] = {{"pr_over_N_mean", stats::mean_se(pr).mean}, {"reference", c.ref}};
    r.figure.panels.push_back(hist_panel(c.key, "PR/N", pr, 40, 0, 1));
  }
  return r;
}

Result fig_wehrl(const Context& ctx) {
  const Params& p = ctx.p;
  const int N = p.i("N");
  Result r;
  r.name = "fig6-wehrl";
  r.figure.title = "Wehrl entropy growth";
  const double plateau = wehrl_random_state(N) / std::log(2.0);
  svg::Panel pan{"Wehrl entropy", "t", "bits", {}};
  std::vector<double> hb, hs;
  {
    Mat U = build_baker_map(N).U;
    const int T = static_cast<int>(std::floor(4 * ehrenfest_time(N, std::log(2.0))));
    hb = entropy_trajectory([&](Vec& v) { v = U * v; }, coherent_state(N, 1.0 / 3, 2.0 / 3, 0.5), T,
                            [](const Vec& v) { return wehrl_entropy(husimi(v, 0.5, 0.5), EntropyUnit::Bits); });
  }
  {
    StandardMapStepper st({N, p.r("K"), 0.0, 0.0});
    const int T = static_cast<int>(std::floor(4 * ehrenfest_time(N, chirikov_lyapunov(p.r("K")))));
    hs = entropy_trajectory([&](Vec& v) { st.apply(v); }, coherent_state(N, 0.0, 0.0), T,
                            [](const Vec& v) { return wehrl_entropy(husimi(v), EntropyUnit::Bits); });
  }
  {
    auto& t = r.table("baker");
    t.add("t", iota(hb.size()));
    t.add("wehrl_bits", hb);
  }
  {
    auto& t = r.table("standard");
    t.add("t", iota(hs.size()));
    t.add("wehrl_bits", hs);
  }
  auto slope = [](const std::vector<double>& h, int a, int b) {
    std::vector<double> x, y;
    for (int t = a; t <= std::min<int>(b, h.size() - 1); ++t) {
      x.push_back(t);
      y.push_back(h[t]);
    }
    return stats::linear_fit(x, y).slope;
  };
  r.summary["baker_slope"] = slope(hb, 1, 8);
  r.summary["standard_slope"] = slope(hs, 1, 2);
  r.summary["standard_slope_reference"] = std::log2(4 + std::sqrt(15.0));
  r.summary["random_state_bits"] = plateau;
  const double T = static_cast<double>(std::max(hb.size(), hs.size()));
  pan.series = {series("baker", svg::Style::Line, iota(hb.size()), hb),
                series("standard K=" + io::fmt(p.r("K")), svg::Style::Line, iota(hs.size()), hs),
                series("random state", svg::Style::Line, {0.0, T}, {plateau, plateau})};
  r.figure.panels.push_back(pan);
  r.figure.columns = 1;
  return r;
}

Result fig_delta2(const Context& ctx) {
  const Params& p = ctx.p;
  const int N = p.i("N"), M = p.i("M"), H = p.i("histories");
  std::vector<double> Ks = {0.25, 0.5, 1, 2, 3, 4, 6, 8, 10};
  std::vector<double> mean(Ks.size()), sd(Ks.size());
  Vec fid = coherent_state(N, 1.0 / 3, 2.0 / 3, 0.0);
  parallel_for(static_cast<int>(Ks.size()), ctx.workers(), [&](int i) {
    auto d = delta2_histories({N, Ks[i], 0.0, kGolden}, 0.05, M, 10, p.i("stride"), fid, H, ctx.seed() + i);
    mean[i] = d.mean;
    sd[i] = d.sd;
  });
  Result r;
  r.name = "fig7-delta2";
  {
    auto& t = r.table("sweep");
    t.add("K", Ks);
    t.add("delta2_mean", mean);
    t.add("delta2_sd", sd);
  }
  std::vector<double> lg;
  for (double m : mean) lg.push_back(std::log10(std::max(std::abs(m), 1e-6)));
  r.summary["N"] = N;
  r.summary["M"] = M;
  r.summary["delta2_at_K_max"] = mean.back();
  r.figure = {"2-design deviation of trajectory ensembles",
              {{"|delta2| vs K", "K", "log10 |delta2|", {series("delta2", svg::Style::Points, Ks, lg)}}},
              1};
  return r;
}

Result fig_mp_pt(const Context& ctx) {
  const Params& p = ctx.p;
  Result r;
  r.name = "fig8-mp-pt";
  r.figure.title = "Schmidt and partial-transpose spectra";
  const int N1 = p.i("N1"), S = p.i("samples");
  for (int Q : {1, 4}) {
    std::vector<std::vector<double>> per(S);
    parallel_for(S, ctx.workers(), [&](int s) {
      Rng rng = substream(ctx.seed() + Q, s);
      for (double l : schmidt(haar_state(rng, N1 * N1 * Q), N1, N1 * Q).lambda) per[s].push_back(N1 * l);
    });
    std::vector<double> x;
    for (auto& v : per) x.insert(x.end(), v.begin(), v.end());
    const double q = Q;
    auto sup = mp_support(q);
    std::vector<std::pair<std::string, Density>> refs = {{"mp", [q](double v) { return mp_density(q, v); }}};
    hist_table(r, "mp_Q" + std::to_string(Q), x, 50, 0, sup[1] * 1.05, refs);
    r.summary["mp_Q" + std::to_string(Q)] = {{"ks", stats::ks_statistic(x, [q](double v) { return mp_cdf(q, v); })}};
    r.figure.panels.push_back(hist_panel("Marchenko-Pastur Q=" + std::to_string(Q), "x", x, 50, 0, sup[1] * 1.05, refs));
  }
  {
    const int A = p.i("pt_N1"), B = p.i("pt_N2"), C = p.i("pt_N3"), SP = p.i("pt_samples");
    std::vector<std::vector<double>> per(SP);
    parallel_for(SP, ctx.workers(), [&](int s) {
      Rng rng = substream(ctx.seed() + 99, s);
      for (double mu : pt_spectrum(reduced_state_ab(haar_state(rng, A * B * C), A, B, C), A, B, C).mu)
        per[s].push_back(A * B * mu);
    });
    std::vector<double> x;
    for (auto& v : per) x.insert(x.end(), v.begin(), v.end());
    auto model = pt_semicircle_model(A, B, C);
    std::vector<std::pair<std::string, Density>> refs = {{"semicircle", [model](double v) { return model.density(v); }}};
    const double lo = 1 - 1.3 * model.radius, hi = 1 + 1.3 * model.radius;
    hist_table(r, "pt", x, 50, lo, hi, refs);
    r.summary["pt"] = {{"ks", stats::ks_statistic(x, [&](double v) { return model.cdf(v); })},
                       {"radius", model.radius},
                       {"npt_threshold_N3", model.threshold_N3}};
    r.figure.panels.push_back(hist_panel("partial transpose N3=" + std::to_string(C), "x", x, 50, lo, hi, refs));
  }
  return r;
}

Result fig_concurrence(const Context& ctx) {
  const Params& p = ctx.p;
  const int S = p.i("samples"), Lmax = p.i("L_max");
  Result r;
  r.name = "fig9-concurrence";
  r.figure.title = "two-qubit pre-concurrence in random states";
  std::vector<double> Ls, pos;
  svg::Panel hist{"pre-concurrence", "c", "density", {}};
  for (int L = 3; L <= Lmax; ++L) {
    const int B = 16;
    std::vector<PreconcurrenceStats> blocks(B);
    parallel_for(B, ctx.workers(), [&](int b) {
      blocks[b] = preconcurrence_statistics(L, S / B + (b < S % B), substream(ctx.seed() + L, b).engine()());
    });
    std::vector<double> c;
    for (auto& b : blocks) c.insert(c.end(), b.c.begin(), b.c.end());
    Ls.push_back(L);
    pos.push_back(std::count_if(c.begin(), c.end(), [](double v) { return v > 0; }) / static_cast<double>(c.size()));
    if (L <= 5) {
      hist_table(r, "L" + std::to_string(L), c, 50, -0.6, 0.6);
      hist.series.push_back(histogram_series("L=" + std::to_string(L), c, 50, -0.6, 0.6));
    }
  }
  {
    auto& t = r.table("positive_fraction");
    t.add("L", Ls);
    t.add("p_positive", pos);
  }
  for (std::size_t i = 0; i < Ls.size(); ++i) r.summary["p_positive_L" + io::fmt(Ls[i])] = pos[i];
  r.figure.panels = {hist, {"P(C > 0)", "L", "P", {series("P(C>0)", svg::Style::Points, Ls, pos)}}};
  return r;
}

Result fig_xmin(const Context& ctx) {
  const Params& p = ctx.p;
  const int S = p.i("samples");
  Result r;
  r.name = "fig10-xmin";
  r.figure.title = "smallest partial-transpose eigenvalue";
  svg::Panel hist{"scaled x_min", "x_min", "density", {}};
  std::vector<std::vector<double>> xs;
  for (int n3 : {64, 256, 1024}) {
    xs.push_back(xmin_scaled_statistic(n3, S, ctx.seed() + n3));
    hist_table(r, "N3_" + std::to_string(n3), xs.back(), 50, -3, 1);
    hist.series.push_back(histogram_series("N3=" + std::to_string(n3), xs.back(), 50, -3, 1));
  }
  double worst = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) worst = std::max(worst, stats::ks_two_sample(xs[a], xs[b]));
  std::vector<double> n3s, lp;
  const int SN = p.i("npt_samples");
  for (int n3 : {4, 6, 8, 10, 12, 16}) {
    auto x = xmin_scaled_statistic(n3, SN, ctx.seed() + 1000 + n3);
    const double cut = -std::sqrt(static_cast<double>(n3)) / 4;
    double f = std::count_if(x.begin(), x.end(), [&](double v) { return v < cut; }) / static_cast<double>(SN);
    if (f > 0) {
      n3s.push_back(n3);
      lp.push_back(std::log(f));
    }
  }
  {
    auto& t = r.table("npt");
    t.add("N3", n3s);
    t.add("log_p_npt", lp);
  }
  double gamma = n3s.size() >= 2 ? -stats::linear_fit(n3s, lp).slope : 0.0;
  r.summary["collapse_worst_ks"] = worst;
  r.summary["gamma"] = gamma;
  r.figure.panels = {hist, {"P[NPT] decay", "N3", "ln P", {series("ln P[NPT]", svg::Style::Points, n3s, lp)}}};
  return r;
}

Result fig_coupled(const Context& ctx) {
  const Params& p = ctx.p;
  CoupledMapParams cp;
  cp.N = p.i("N");
  cp.b = p.r("b");
  const int T = p.i("T");
  std::vector<double> Ks = {0, 1, 3, 10};
  Result r;
  r.name = "fig11-coupled-entropy";
  r.figure.title = "entanglement growth in coupled standard maps";
  const double sat = std::log(cp.N / 2.0);
  for (auto kind : {InitialKind::CoherentProduct, InitialKind::RandomProduct}) {
    const bool coh = kind == InitialKind::CoherentProduct;
    std::vector<EntanglementSeries> runs(Ks.size());
    parallel_for(static_cast<int>(Ks.size()), ctx.workers(), [&](int i) {
      CoupledMapParams q = cp;
      q.K1 = q.K2 = Ks[i];
      runs[i] = entanglement_evolution(q, kind, T, ctx.seed());
    });
    std::vector<double> t(runs[0].t.begin(), runs[0].t.end());
    svg::Panel pan{coh ? "coherent product start" : "random product start", "t", "S_2", {}};
    auto& tb = r.table(coh ? "coherent" : "random");
    tb.add("t", t);
    for (std::size_t i = 0; i < Ks.size(); ++i) {
      tb.add("S2_K" + io::fmt(Ks[i]), runs[i].S2);
      pan.series.push_back(series("K=" + io::fmt(Ks[i]), svg::Style::Line, t, runs[i].S2));
    }
    tb.add("markov_S2", runs[0].markov_S2);
    pan.series.push_back(series("Markov", svg::Style::Line, t, runs[0].markov_S2));
    pan.series.push_back(series("ln(N/2)", svg::Style::Line, {0.0, t.back()}, {sat, sat}));
    r.figure.panels.push_back(pan);
    r.summary[coh ? "coherent" : "random"] = {{"final_S2_K0", runs[0].S2.back()}, {"final_S2_K10", runs.back().S2.back()}};
    r.summary["e_p"] = runs[0].e_p;
    r.summary["t_star"] = runs[0].t_star;
  }
  r.summary["ln_N_over_2"] = sat;
  return r;
}

Result fig_channels(const Context& ctx) {
  const Params& p = ctx.p;
  const int N = p.i("N");
  Result r;
  r.name = "fig12-channel-spectra";
  r.figure.title = "channel spectra";
  struct Case {
    double p;
    int M;
  };
  auto circle = [](const std::string& name, double R) {
    svg::Series s{name, svg::Style::Line, {}, {}};
    for (int k = 0; k <= 96; ++k) {
      s.x.push_back(R * std::cos(2 * M_PI * k / 96));
      s.y.push_back(R * std::sin(2 * M_PI * k / 96));
    }
    return s;
  };
  auto points = [](const Vec& ev) {
    svg::Series s{"eigenvalues", svg::Style::Points, {}, {}};
    for (auto z : ev) {
      s.x.push_back(z.real());
      s.y.push_back(z.imag());
    }
    return s;
  };
  std::vector<Case> cases = {{0.57, 9}, {0.71, 23}, {0.89, 40}};
  std::vector<ChannelBundle> bundles(cases.size());
  parallel_for(static_cast<int>(cases.size()), ctx.workers(), [&](int i) {
    bundles[i] = diluted_unitary(cases[i].p, cases[i].M, N, substream(ctx.seed(), i).engine()());
  });
  for (std::size_t i = 0; i < cases.size(); ++i) {
    auto radii = ring_radii(cases[i].p, cases[i].M);
    auto s = summarize_ring(bundles[i].spectrum, radii, 0.05);
    std::string key = "diluted_p" + io::fmt(cases[i].p) + "_M" + std::to_string(cases[i].M);
    add_spectrum_table(r, key, bundles[i].spectrum);
    r.summary[key] = {{"classification", radii.disk ? "disk" : "ring"},
                      {"empirical_classification", s.classification},
                      {"inside_fraction", s.inside_fraction},
                      {"R_minus", radii.R_minus},
                      {"R_plus", radii.R_plus}};
    svg::Panel pan{"p=" + io::fmt(cases[i].p) + " M=" + std::to_string(cases[i].M), "Re", "Im",
                   {points(bundles[i].spectrum), circle("R+", radii.R_plus)}, true, true};
    if (!radii.disk) pan.series.push_back(circle("R-", radii.R_minus));
    r.figure.panels.push_back(pan);
  }
  {
    const int CN = p.i("comp_N"), CM = p.i("comp_M");
    auto comp = complementary_channel(CN, CM, ctx.seed() + 7);
    Vec ev = complementary_spectrum_model(comp, ctx.seed() + 8);
    auto radii = complementary_ring_radii(CN, CM);
    auto s = summarize_ring(ev, radii, 0.05);
    add_spectrum_table(r, "complementary", ev);
    r.summary["complementary"] = {{"inside_fraction", s.inside_fraction},
                                  {"R_minus", radii.R_minus},
                                  {"R_plus", radii.R_plus}};
    r.figure.panels.push_back({"complementary N=" + std::to_string(CN) + " M=" + std::to_string(CM), "Re", "Im",
                               {points(ev), circle("R+", radii.R_plus), circle("R-", radii.R_minus)}, true, true});
  }
  return r;
}

Result fig_equator(const Context& ctx) {
  const Params& p = ctx.p;
  const int S = p.i("samples");
  Result r;
  r.name = "fig13-equator";
  r.figure.title = "concentration on spheres";
  svg::Panel hist{"polar angle", "theta", "density", {}};
  for (int n : {2, 10, 50}) {
    auto e = fat_equator(n, S, ctx.seed() + n);
    std::vector<std::pair<std::string, Density>> refs = {{"law", [n](double t) { return equator_density(n, t); }}};
    hist_table(r, "n" + std::to_string(n), e.theta, 60, 0, M_PI, refs);
    r.summary["n" + std::to_string(n)] = {{"ks", e.ks}};
    hist.series.push_back(histogram_series("n=" + std::to_string(n), e.theta, 60, 0, M_PI));
    hist.series.push_back(curve_series("law n=" + std::to_string(n), refs[0].second, 0, M_PI));
  }
  std::vector<double> eps;
  for (double e = 0.05; e <= 1.0 + 1e-9; e += 0.05) eps.push_back(e);
  svg::Panel hoeff{"Hoeffding", "eps", "log10 P", {}};
  for (int n : {10, 100, 1000}) {
    auto c = hoeffding_demo(n, eps, S, ctx.seed() + 5000 + n);
    auto& t = r.table("hoeffding_n" + std::to_string(n));
    t.add("eps", c.eps);
    t.add("empirical", c.empirical);
    t.add("bound", c.bound);
    std::vector<double> le;
    for (double v : c.empirical) le.push_back(std::log10(std::max(v, 1e-12)));
    hoeff.series.push_back(series("n=" + std::to_string(n), svg::Style::Points, c.eps, le));
    r.summary["hoeffding_n" + std::to_string(n)] = {{"bounds_hold", c.bounds_hold()}};
  }
  r.figure.panels = {hist, hoeff};
  return r;
}

Result fig_entropy_conc(const Context& ctx) {
  const Params& p = ctx.p;
  const int S = p.i("samples");
  Result r;
  r.name = "fig14-entropy-conc";
  r.figure.title = "concentration of entanglement entropy";
  svg::Panel hist{"S_vN - Page", "S - <S>", "density", {}};
  std::vector<double> Ns = {2, 4, 8, 16}, sds(4), ses(4);
  std::vector<ConcentrationReport> reps(4);
  parallel_for(4, ctx.workers(), [&](int i) { reps[i] = entropy_concentration(static_cast<int>(Ns[i]), S, ctx.seed() + i); });
  for (int i = 0; i < 4; ++i) {
    std::vector<double> c = reps[i].samples;
    for (double& v : c) v -= reps[i].mean;
    hist_table(r, "N" + io::fmt(Ns[i]), c, 50, -0.8, 0.4);
    hist.series.push_back(histogram_series("N=" + io::fmt(Ns[i]), c, 50, -0.8, 0.4));
    sds[i] = reps[i].sd;
    ses[i] = reps[i].sd_se;
    r.summary["N" + io::fmt(Ns[i])] = {{"mean", reps[i].mean}, {"sd", reps[i].sd}, {"page", page_average(static_cast<int>(Ns[i]), static_cast<int>(Ns[i]))},
                                       {"bounds_hold", reps[i].bounds_hold()}};
  }
  {
    auto& t = r.table("sd");
    t.add("N", Ns);
    t.add("sd", sds);
    t.add("sd_se", ses);
  }
  r.figure.panels = {hist, {"spread", "N", "sd", {series("sd", svg::Style::Points, Ns, sds)}}};
  return r;
}

}  // namespace

void register_figure(CLI::App& root, Registry& reg) {
  auto* g = add_group(root, "figure", "figure-class experiments");
  {
    auto& c = reg.add(g, "fig3-nns", "spacing distributions, regular and chaotic", fig_nns);
    c.params.integer(c.app, "N", 1000, "dimension");
    c.params.integer(c.app, "samples", 4, "K window draws per panel");
    c.params.real(c.app, "K_regular", 0.5, "regular kick strength");
    c.params.real(c.app, "K_chaotic", 10.0, "chaotic kick strength");
  }
  {
    auto& c = reg.add(g, "fig4-sff", "spectral form factor, CUE and standard map", fig_sff);
    c.params.integer(c.app, "N_cue", 100, "CUE dimension");
    c.params.integer(c.app, "samples_cue", 500, "CUE samples");
    c.params.integer(c.app, "N_map", 500, "map dimension");
    c.params.integer(c.app, "samples_map", 30, "K window draws");
    c.params.real(c.app, "K", 10.0, "window centre");
  }
  {
    auto& c = reg.add(g, "fig5-pr", "eigenvector participation ratios", fig_pr);
    c.params.integer(c.app, "N", 750, "dimension");
    c.params.real(c.app, "K", 10.0, "kick strength");
  }
  {
    auto& c = reg.add(g, "fig6-wehrl", "Wehrl entropy growth, baker and standard map", fig_wehrl);
    c.params.integer(c.app, "N", 2038, "dimension (even)");
    c.params.real(c.app, "K", 10.0, "standard map kick strength");
  }
  {
    auto& c = reg.add(g, "fig7-delta2", "2-design deviation against K", fig_delta2);
    c.params.integer(c.app, "N", 128, "dimension");
    c.params.integer(c.app, "M", 128, "ensemble size");
    c.params.integer(c.app, "stride", 10, "steps between kept states");
    c.params.integer(c.app, "histories", 5, "kick histories per K");
  }
  {
    auto& c = reg.add(g, "fig8-mp-pt", "Marchenko-Pastur and partial-transpose spectra", fig_mp_pt);
    c.params.integer(c.app, "N1", 64, "Schmidt rank");
    c.params.integer(c.app, "samples", 10, "states per Q");
    c.params.integer(c.app, "pt_N1", 8, "first factor");
    c.params.integer(c.app, "pt_N2", 8, "second factor");
    c.params.integer(c.app, "pt_N3", 64, "environment");
    c.params.integer(c.app, "pt_samples", 60, "states");
  }
  {
    auto& c = reg.add(g, "fig9-concurrence", "pre-concurrence distributions", fig_concurrence);
    c.params.integer(c.app, "samples", 20000, "states per L");
    c.params.integer(c.app, "L_max", 7, "largest chain");
  }
  {
    auto& c = reg.add(g, "fig10-xmin", "x_min collapse and NPT decay", fig_xmin);
    c.params.integer(c.app, "samples", 4000, "states per N3 for the collapse");
    c.params.integer(c.app, "npt_samples", 20000, "states per N3 for the decay");
  }
  {
    auto& c = reg.add(g, "fig11-coupled-entropy", "entanglement growth in coupled maps", fig_coupled);
    c.params.integer(c.app, "N", 200, "local dimension");
    c.params.real(c.app, "b", 0.01, "coupling");
    c.params.integer(c.app, "T", 200, "steps");
  }
  {
    auto& c = reg.add(g, "fig12-channel-spectra", "diluted and complementary channel spectra", fig_channels);
    c.params.integer(c.app, "N", 50, "diluted channel dimension");
    c.params.integer(c.app, "comp_N", 14, "complementary input dimension");
    c.params.integer(c.app, "comp_M", 18, "complementary environment dimension");
  }
  {
    auto& c = reg.add(g, "fig13-equator", "polar-angle laws and Hoeffding bounds", fig_equator);
    c.params.integer(c.app, "samples", 100000, "samples per panel");
  }
  {
    auto& c = reg.add(g, "fig14-entropy-conc", "entanglement entropy histograms for growing N", fig_entropy_conc);
    c.params.integer(c.app, "samples", 4000, "states per N");
  }
}

}  // namespace qchaos::cli
