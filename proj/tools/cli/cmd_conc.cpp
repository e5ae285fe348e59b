#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "qchaos/channels.hpp"
#include "qchaos/concentration.hpp"
#include "qchaos/rng.hpp"
#include "qchaos/stats.hpp"

namespace qchaos::cli {

namespace {

void need(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void bound_table(Result& r, const ConcentrationReport& c) {
  auto& t = r.table("bounds");
  t.add("eps", c.eps);
  t.add("empirical", c.empirical);
  t.add("bound", c.bound);
}

svg::Panel bound_panel(const std::string& title, const ConcentrationReport& c) {
  std::vector<double> logb, loge;
  for (std::size_t k = 0; k < c.eps.size(); ++k) {
    logb.push_back(std::log10(std::max(c.bound[k], 1e-300)));
    loge.push_back(std::log10(std::max(c.empirical[k], 1e-12)));
  }
  return {title, "eps", "log10 P", {series("empirical", svg::Style::Points, c.eps, loge),
                                    series("bound", svg::Style::Line, c.eps, logb)}};
}

Result conc_hoeffding(const Context& ctx) {
  const Params& p = ctx.p;
  const int n = p.i("n"), T = p.i("trials");
  need(n >= 1 && T >= 1, "need n, trials >= 1");
  std::vector<double> eps;
  for (double e = 0.05; e <= 1.0 + 1e-9; e += 0.05) eps.push_back(e);
  auto c = hoeffding_demo(n, eps, T, ctx.seed());
  Result r;
  r.name = "conc_hoeffding";
  bound_table(r, c);
  r.summary["n"] = n;
  r.summary["bounds_hold"] = c.bounds_hold();
  r.summary["sd"] = c.sd;
  r.figure = {"Hoeffding bound", {bound_panel("sums of signs", c)}, 1};
  return r;
}

Result conc_levy(const Context& ctx) {
  const Params& p = ctx.p;
  const int N = p.i("N"), S = p.i("samples");
  need(N >= 2 && N <= 64 && S >= 2, "need 2 <= N <= 64 and samples >= 2");
  auto c = entropy_concentration(N, S, ctx.seed());
  Result r;
  r.name = "conc_levy";
  bound_table(r, c);
  {
    auto& t = r.table("samples");
    t.add("S_vN", c.samples);
  }
  r.summary["N"] = N;
  r.summary["mean"] = c.mean;
  r.summary["sd"] = c.sd;
  r.summary["sd_se"] = c.sd_se;
  r.summary["eta"] = c.eta;
  r.summary["bounds_hold"] = c.bounds_hold();
  auto mm = std::minmax_element(c.samples.begin(), c.samples.end());
  r.figure = {"entropy concentration",
              {{"entanglement entropy", "S", "density", {histogram_series("data", c.samples, 40, *mm.first, *mm.second)}},
               bound_panel("Levy bound", c)}};
  return r;
}

Result conc_smin(const Context& ctx) {
  const Params& p = ctx.p;
  const int N = p.i("N"), M = p.i("M");
  need(N >= 2 && N <= 32 && M >= 1, "need 2 <= N <= 32 and M >= 1");
  KrausSet k;
  if (p.s("channel") == "depolarizing") {
    const double q = p.r("q");
    need(q >= 0 && q <= 1, "need 0 <= q <= 1");
    // (1-q) rho + q 1/N via the mixed generalized Paulis
    std::vector<Mat> ops;
    ops.push_back(std::sqrt(1 - q + q / (N * N)) * Mat::Identity(N, N));
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        if (a == 0 && b == 0) continue;
        Mat w = Mat::Zero(N, N);
        for (int j = 0; j < N; ++j) w((j + a) % N, j) = std::polar(1.0, 2 * M_PI * b * j / N);
        ops.push_back(std::sqrt(q) / N * w);
      }
    k = make_kraus(std::move(ops));
  } else {
    k = random_kraus(N, M, ctx.seed());
  }
  auto res = min_output_entropy(k, p.i("restarts"), p.i("iters"), substream(ctx.seed(), 0).engine()());
  std::vector<double> idx(res.best_after_restart.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<double>(i + 1);
  Result r;
  r.name = "conc_smin";
  {
    auto& t = r.table("restarts");
    t.add("restart", idx);
    t.add("best", res.best_after_restart);
  }
  r.summary["S_min"] = res.value;
  r.summary["converged"] = res.converged;
  r.summary["log_M"] = std::log(static_cast<double>(k.M()));
  r.summary["log_N"] = std::log(static_cast<double>(N));
  svg::Panel pan{"best value after each restart", "restart", "S_min", {}};
  pan.series.push_back(series("best", svg::Style::Steps, idx, res.best_after_restart));
  r.figure = {"minimum output entropy", {pan}, 1};
  return r;
}

Result conc_bh(const Context& ctx) {
  const Params& p = ctx.p;
  const int N = p.i("N"), M = p.i("M"), S = p.i("samples");
  need(N >= 2 && N <= 128 && M >= 1 && S >= 1, "need 2 <= N <= 128, M >= 1, samples >= 1");
  const int B = std::min(S, 32);
  std::vector<BhReport> parts(B);
  parallel_for(B, ctx.workers(), [&](int b) {
    int n = S / B + (b < S % B ? 1 : 0);
    parts[b] = bh_inequality_check(N, M, n, substream(ctx.seed(), b).engine()());
  });
  std::vector<double> ent, lmax;
  for (auto& b : parts) {
    ent.insert(ent.end(), b.entropy.begin(), b.entropy.end());
    lmax.insert(lmax.end(), b.lambda_max.begin(), b.lambda_max.end());
  }
  const double bound = parts.front().bound;
  int ps = 0, pn = 0;
  for (std::size_t i = 0; i < ent.size(); ++i) {
    ps += ent[i] <= bound + 1e-12;
    pn += lmax[i] >= 1.0 / M - 1e-9;
  }
  Result r;
  r.name = "conc_bh";
  {
    auto& t = r.table("samples");
    t.add("entropy", ent);
    t.add("lambda_max", lmax);
  }
  r.summary["bound"] = bound;
  r.summary["entropy_pass_fraction"] = static_cast<double>(ps) / ent.size();
  r.summary["norm_pass_fraction"] = static_cast<double>(pn) / ent.size();
  std::vector<double> idx(ent.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<double>(i);
  r.figure = {"tensor-image entropy",
              {{"samples against the bound", "sample", "S",
                {series("entropy", svg::Style::Points, idx, ent),
                 series("bound", svg::Style::Line, {0.0, static_cast<double>(ent.size())}, {bound, bound})}}},
              1};
  return r;
}

}  // namespace

void register_conc(CLI::App& root, Registry& reg) {
  auto* g = add_group(root, "conc", "measure concentration");
  {
    auto& c = reg.add(g, "hoeffding", "sums of random signs against Hoeffding", conc_hoeffding);
    c.params.integer(c.app, "n", 100, "summands");
    c.params.integer(c.app, "trials", 100000, "trials");
  }
  {
    auto& c = reg.add(g, "levy", "entanglement entropy concentration", conc_levy);
    c.params.integer(c.app, "N", 8, "local dimension");
    c.params.integer(c.app, "samples", 4000, "states");
  }
  {
    auto& c = reg.add(g, "smin", "minimum output entropy by multi-start descent", conc_smin);
    c.params.text(c.app, "channel", "random", "channel", {"random", "depolarizing"});
    c.params.integer(c.app, "N", 4, "dimension");
    c.params.integer(c.app, "M", 2, "Kraus rank (random)");
    c.params.real(c.app, "q", 0.5, "depolarizing weight");
    c.params.integer(c.app, "restarts", 16, "random starts");
    c.params.integer(c.app, "iters", 200, "descent steps per start");
  }
  {
    auto& c = reg.add(g, "bh", "tensor-image entropy bound", conc_bh);
    c.params.integer(c.app, "N", 64, "dimension");
    c.params.integer(c.app, "M", 4, "unitaries per channel");
    c.params.integer(c.app, "samples", 50, "channels");
  }
}

}  // namespace qchaos::cli
