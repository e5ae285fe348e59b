#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "qchaos/bipartite.hpp"
#include "qchaos/ensembles.hpp"
#include "qchaos/linalg.hpp"
#include "qchaos/stats.hpp"

namespace qchaos::cli {

namespace {

void need(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

Result ent_schmidt(const Context& ctx) {
  const Params& p = ctx.p;
  const int N1 = p.i("N1"), N2 = p.i("N2"), S = p.i("samples");
  need(N1 >= 1 && N2 >= 1 && S >= 1, "need N1, N2, samples >= 1");
  std::vector<double> vn(S), sl(S), r2(S);
  parallel_for(S, ctx.workers(), [&](int s) {
    Rng rng = substream(ctx.seed(), s);
    auto e = entropies(schmidt(haar_state(rng, N1 * N2), N1, N2), {2.0});
    vn[s] = e.S_vN;
    sl[s] = e.S_L;
    r2[s] = e.renyi[0];
  });
  Result r;
  r.name = "ent_schmidt";
  {
    auto& t = r.table("samples");
    t.add("S_vN", vn);
    t.add("S_L", sl);
    t.add("S_2", r2);
  }
  auto a = stats::mean_se(vn), b = stats::mean_se(sl);
  r.summary["S_vN_mean"] = a.mean;
  r.summary["S_vN_se"] = a.se;
  r.summary["page"] = page_average(N1, N2);
  r.summary["S_L_mean"] = b.mean;
  r.summary["S_L_se"] = b.se;
  r.summary["lubkin"] = lubkin_linear_entropy(N1, N2);
  const double hi = std::log(static_cast<double>(std::min(N1, N2)));
  r.figure = {"entanglement of Haar states",
              {{"von Neumann", "S", "density", {histogram_series("S_vN", vn, 40, 0, hi)}},
               {"linear", "S_L", "density", {histogram_series("S_L", sl, 40, 0, 1)}}}};
  return r;
}

Result ent_page(const Context& ctx) {
  const Params& p = ctx.p;
  const int L = p.i("L"), S = p.i("samples");
  need(L >= 2 && L <= 14, "need 2 <= L <= 14");
  need(S >= 1, "need samples >= 1");
  std::vector<double> la, page, mc, se;
  for (int a = 1; a < L; ++a) {
    const int N1 = 1 << a, N2 = 1 << (L - a);
    std::vector<double> v(S);
    parallel_for(S, ctx.workers(), [&](int s) {
      Rng rng = substream(ctx.seed(), static_cast<std::uint64_t>(a) * 1000003u + s);
      v[s] = schmidt(haar_state(rng, N1 * N2), N1, N2).S_vN;
    });
    auto ms = stats::mean_se(v);
    la.push_back(a);
    page.push_back(page_average(N1, N2));
    mc.push_back(ms.mean);
    se.push_back(ms.se);
  }
  Result r;
  r.name = "ent_page";
  {
    auto& t = r.table("curve");
    t.add("L_A", la);
    t.add("page", page);
    t.add("mc_mean", mc);
    t.add("mc_se", se);
  }
  double worst = 0;
  for (std::size_t k = 0; k < mc.size(); ++k) worst = std::max(worst, std::abs(mc[k] - page[k]));
  r.summary["L"] = L;
  r.summary["max_abs_deviation"] = worst;
  r.figure = {"Page curve",
              {{"entanglement entropy", "L_A", "S",
                {series("Page", svg::Style::Line, la, page), series("Monte Carlo", svg::Style::Points, la, mc)}}},
              1};
  return r;
}

Result ent_mp(const Context& ctx) {
  const Params& p = ctx.p;
  const int N1 = p.i("N1"), S = p.i("samples");
  const double Q = p.r("Q");
  need(N1 >= 2 && S >= 1, "need N1 >= 2, samples >= 1");
  need(Q >= 1, "need Q >= 1");
  const int N2 = static_cast<int>(std::lround(Q * N1));
  std::vector<std::vector<double>> per(S);
  parallel_for(S, ctx.workers(), [&](int s) {
    Rng rng = substream(ctx.seed(), s);
    auto sd = schmidt(haar_state(rng, N1 * N2), N1, N2);
    for (double l : sd.lambda) per[s].push_back(N1 * l);
  });
  std::vector<double> x;
  for (auto& v : per) x.insert(x.end(), v.begin(), v.end());
  const double Qe = static_cast<double>(N2) / N1;
  auto sup = mp_support(Qe);
  Result r;
  r.name = "ent_mp";
  {
    auto& t = r.table("eigenvalues");
    t.add("x", x);
  }
  r.summary["N1"] = N1;
  r.summary["N2"] = N2;
  r.summary["Q"] = Qe;
  r.summary["ks"] = stats::ks_statistic(x, [Qe](double v) { return mp_cdf(Qe, v); });
  r.summary["support"] = {sup[0], sup[1]};
  svg::Panel pan{"Schmidt spectrum", "x = N1 lambda", "density", {histogram_series("data", x, 50, 0, sup[1] * 1.1)}};
  pan.series.push_back(curve_series("Marchenko-Pastur", [Qe](double v) { return mp_density(Qe, v); },
                                    std::max(sup[0], 1e-3), sup[1]));
  r.figure = {"Marchenko-Pastur law", {pan}, 1};
  return r;
}

Result ent_pt(const Context& ctx) {
  const Params& p = ctx.p;
  const int N1 = p.i("N1"), N2 = p.i("N2"), N3 = p.i("N3"), S = p.i("samples");
  need(N1 >= 2 && N2 >= 2 && N3 >= 1 && S >= 1, "need N1, N2 >= 2 and N3, samples >= 1");
  need(static_cast<long>(N1) * N2 * N3 <= (1L << 22), "N1 N2 N3 too large");
  std::vector<std::vector<double>> xs(S);
  std::vector<double> m3(S), eln(S), npt(S);
  parallel_for(S, ctx.workers(), [&](int s) {
    Rng rng = substream(ctx.seed(), s);
    Mat rho = reduced_state_ab(haar_state(rng, N1 * N2 * N3), N1, N2, N3);
    auto pt = pt_spectrum(rho, N1, N2, N3);
    double acc = 0;
    for (double mu : pt.mu) {
      xs[s].push_back(N1 * N2 * mu);
      acc += mu * mu * mu;
    }
    m3[s] = acc;
    eln[s] = pt.log_negativity;
    npt[s] = pt.mu.front() < 0 ? 1.0 : 0.0;
  });
  std::vector<double> x;
  for (auto& v : xs) x.insert(x.end(), v.begin(), v.end());
  auto model = pt_semicircle_model(N1, N2, N3);
  auto m = stats::mean_se(m3);
  const double th = pt_third_moment_avg(N1, N2, N3);
  Result r;
  r.name = "ent_pt";
  {
    auto& t = r.table("samples");
    t.add("third_moment", m3);
    t.add("log_negativity", eln);
    t.add("npt", npt);
  }
  {
    auto& t = r.table("spectrum");
    t.add("x", x);
  }
  r.summary["third_moment_mean"] = m.mean;
  r.summary["third_moment_theory"] = th;
  r.summary["third_moment_rel_dev"] = std::abs(m.mean - th) / th;
  r.summary["npt_fraction"] = stats::mean_se(npt).mean;
  r.summary["npt_threshold_N3"] = model.threshold_N3;
  r.summary["model_radius"] = model.radius;
  r.summary["ks_semicircle"] = stats::ks_statistic(x, [&](double v) { return model.cdf(v); });
  r.summary["log_negativity_mean"] = stats::mean_se(eln).mean;
  r.summary["log_negativity_deep"] = model.eln_deep;
  const double lo = 1 - 1.3 * model.radius, hi = 1 + 1.3 * model.radius;
  svg::Panel pan{"partial transpose", "x = N1 N2 mu", "density", {histogram_series("data", x, 50, lo, hi)}};
  pan.series.push_back(curve_series("semicircle", [&](double v) { return model.density(v); }, lo, hi));
  r.figure = {"partial transpose spectrum", {pan}, 1};
  return r;
}

Result ent_concurrence(const Context& ctx) {
  const Params& p = ctx.p;
  const int L = p.i("L"), S = p.i("samples");
  need(L >= 2 && L <= 12, "need 2 <= L <= 12");
  need(S >= 2, "need samples >= 2");
  // sample blocks keep the result independent of the worker count
  const int B = std::min(S, 64);
  std::vector<PreconcurrenceStats> blocks(B);
  parallel_for(B, ctx.workers(), [&](int b) {
    int n = S / B + (b < S % B ? 1 : 0);
    blocks[b] = preconcurrence_statistics(L, n, substream(ctx.seed(), b).engine()());
  });
  std::vector<double> c;
  for (auto& b : blocks) c.insert(c.end(), b.c.begin(), b.c.end());
  double pos = std::count_if(c.begin(), c.end(), [](double v) { return v > 0; }) / static_cast<double>(c.size());
  Result r;
  r.name = "ent_concurrence";
  {
    auto& t = r.table("preconcurrence");
    t.add("c", c);
  }
  r.summary["L"] = L;
  r.summary["samples"] = c.size();
  r.summary["p_positive"] = pos;
  r.summary["p_positive_se"] = std::sqrt(pos * (1 - pos) / c.size());
  auto mm = std::minmax_element(c.begin(), c.end());
  r.figure = {"pre-concurrence",
              {{"two-qubit marginal", "c", "density", {histogram_series("data", c, 50, *mm.first, *mm.second)}}},
              1};
  return r;
}

}  // namespace

void register_ent(CLI::App& root, Registry& reg) {
  auto* g = add_group(root, "ent", "bipartite entanglement");
  {
    auto& c = reg.add(g, "schmidt", "entropies of Haar states", ent_schmidt);
    c.params.integer(c.app, "N1", 8, "first factor");
    c.params.integer(c.app, "N2", 8, "second factor");
    c.params.integer(c.app, "samples", 10000, "states");
  }
  {
    auto& c = reg.add(g, "page", "Page curve over qubit bipartitions", ent_page);
    c.params.integer(c.app, "L", 10, "qubits");
    c.params.integer(c.app, "samples", 200, "states per cut");
  }
  {
    auto& c = reg.add(g, "mp", "Marchenko-Pastur law of Schmidt coefficients", ent_mp);
    c.params.integer(c.app, "N1", 64, "smaller factor");
    c.params.real(c.app, "Q", 4.0, "N2/N1");
    c.params.integer(c.app, "samples", 10, "states");
  }
  {
    auto& c = reg.add(g, "pt", "partial transpose of induced mixed states", ent_pt);
    c.params.integer(c.app, "N1", 8, "first factor");
    c.params.integer(c.app, "N2", 8, "second factor");
    c.params.integer(c.app, "N3", 64, "environment");
    c.params.integer(c.app, "samples", 100, "states");
  }
  {
    auto& c = reg.add(g, "concurrence", "two-qubit pre-concurrence in Haar qubit chains", ent_concurrence);
    c.params.integer(c.app, "L", 4, "qubits");
    c.params.integer(c.app, "samples", 100000, "states");
  }
}

}  // namespace qchaos::cli
