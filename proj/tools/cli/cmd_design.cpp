#include <cmath>

#include "common.hpp"
#include "qchaos/designs.hpp"
#include "qchaos/ensembles.hpp"
#include "qchaos/stats.hpp"

namespace qchaos::cli {

namespace {

Result design_delta2(const Context& ctx) {
  const Params& p = ctx.p;
  MapParams mp = map_params(p);
  Vec fid = coherent_state(mp.N, p.r("q0"), p.r("p0"), mp.alpha);
  const int H = p.i("histories");
  if (H < 1) throw std::invalid_argument("--histories must be >= 1");
  std::vector<double> d(H);
  parallel_for(H, ctx.workers(), [&](int h) {
    auto e = trajectory_ensemble(mp, p.r("dK"), p.i("M"), p.i("burn_in"), p.i("stride"), fid,
                                 substream(ctx.seed(), h).engine()());
    d[h] = delta2(e);
  });
  auto ms = stats::mean_se(d);
  Result r;
  r.name = "design_delta2";
  {
    auto& t = r.table("histories");
    std::vector<double> idx(H);
    for (int h = 0; h < H; ++h) idx[h] = h;
    t.add("history", idx);
    t.add("delta2", d);
  }
  r.summary["delta2_mean"] = ms.mean;
  r.summary["delta2_sd"] = ms.sd;
  r.summary["haar_expectation"] = 0.0;
  r.figure = {"2-design deviation",
              {{"per history", "history", "delta2", {series("delta2", svg::Style::Points, r.tables[0].second.columns[0], d)}}},
              1};
  return r;
}

Result design_frame(const Context& ctx) {
  const Params& p = ctx.p;
  const int N = p.i("N"), M = p.i("M"), t = p.i("t"), E = p.i("ensembles");
  if (N < 2 || M < 2 || t < 1 || E < 1) throw std::invalid_argument("need N >= 2, M >= 2, t >= 1, ensembles >= 1");
  if (M > kMaxEnsembleSize) throw std::invalid_argument("--M exceeds the ensemble size guard");
  std::vector<double> F(E), off(E);
  parallel_for(E, ctx.workers(), [&](int e) {
    Rng rng = substream(ctx.seed(), e);
    std::vector<Vec> members;
    for (int k = 0; k < M; ++k) members.push_back(haar_state(rng, N));
    auto se = make_state_ensemble(std::move(members));
    F[e] = frame_potential(se, t);
    off[e] = frame_potential_offdiag(se, t);
  });
  const double dt = symmetric_dimension(N, t);
  const double expected = 1.0 / M + (1.0 - 1.0 / M) / dt;
  auto ms = stats::mean_se(F);
  Result r;
  r.name = "design_frame";
  {
    auto& tb = r.table("ensembles");
    tb.add("F_t", F);
    tb.add("F_t_offdiag", off);
  }
  r.summary["F_t_mean"] = ms.mean;
  r.summary["F_t_se"] = ms.se;
  r.summary["expected"] = expected;
  r.summary["design_bound"] = 1.0 / dt;
  r.summary["z"] = ms.se > 0 ? (ms.mean - expected) / ms.se : 0.0;
  r.summary["offdiag_mean"] = stats::mean_se(off).mean;
  r.figure = {"frame potential",
              {{"offdiagonal F_t", "F_t", "density",
                {histogram_series("ensembles", off, 20, 0.5 / dt, 1.5 / dt)}}},
              1};
  return r;
}

}  // namespace

void register_design(CLI::App& root, Registry& reg) {
  auto* g = add_group(root, "design", "state designs");
  {
    auto& c = reg.add(g, "delta2", "2-design deviation of map trajectories", design_delta2);
    add_map_options(c, "standard", 128, 10.0, "0", "golden", {"standard"});
    c.params.real(c.app, "dK", 0.05, "kick-strength jitter width");
    c.params.integer(c.app, "M", 128, "ensemble size");
    c.params.integer(c.app, "burn_in", 10, "dropped initial states");
    c.params.integer(c.app, "stride", 10, "steps between kept states");
    c.params.integer(c.app, "histories", 10, "independent kick histories");
    c.params.real(c.app, "q0", 1.0 / 3, "fiducial position");
    c.params.real(c.app, "p0", 2.0 / 3, "fiducial momentum");
  }
  {
    auto& c = reg.add(g, "frame", "frame potential of Haar state ensembles", design_frame);
    c.params.integer(c.app, "N", 16, "dimension");
    c.params.integer(c.app, "M", 1000, "states per ensemble");
    c.params.integer(c.app, "t", 2, "design order");
    c.params.integer(c.app, "ensembles", 20, "independent ensembles");
  }
}

}  // namespace qchaos::cli
