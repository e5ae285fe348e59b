#include <cmath>

#include "common.hpp"
#include "qchaos/linalg.hpp"
#include "qchaos/state_measures.hpp"

namespace qchaos::cli {

namespace {

Result map_spectrum(const Context& ctx) {
  const Params& p = ctx.p;
  Mat U = map_unitary(p, p.r("K"), ctx.seed());
  Result r;
  r.name = "map_spectrum";
  auto spec = eigenphases(U);
  auto rs = ratio_statistics(spec);
  {
    auto& t = r.table("eigenphases");
    t.add("phi", spec.phi);
    t.add("x", spec.x);
    t.add("s", spec.s);
  }
  r.summary["N"] = spec.N;
  r.summary["unitarity_residual"] = linalg::unitarity_residual(U);
  r.summary["r_mean"] = rs.mean;
  r.summary["r_se"] = rs.se;
  r.summary["zero_spacings"] = spec.zero_spacings;
  svg::Panel circle{"eigenvalues", "Re", "Im", {phase_points("exp(i phi)", spec.phi)}, true, true};
  svg::Panel hist{"spacings", "s", "P(s)", {histogram_series("data", spec.s, 40, 0, 4)}};
  hist.series.push_back(curve_series("Poisson", [](double s) { return wigner_surmise(0, s); }, 0, 4));
  hist.series.push_back(curve_series("GUE", [](double s) { return wigner_surmise(2, s); }, 0, 4));
  r.figure = {"Floquet spectrum", {circle, hist}};
  return r;
}

Result map_evolve(const Context& ctx) {
  const Params& p = ctx.p;
  MapParams mp = map_params(p);
  const int T = p.i("T");
  if (T < 0) throw std::invalid_argument("--T must be >= 0");
  const std::string& m = p.s("map");
  StepFn step;
  Mat U;
  std::unique_ptr<StandardMapStepper> st;
  double a = mp.alpha, b = mp.beta;
  if (m == "standard") {
    st = std::make_unique<StandardMapStepper>(mp);
    step = [&](Vec& v) { st->apply(v); };
  } else {
    U = map_unitary(p, mp.K, ctx.seed());
    if (m == "baker") a = b = 0.5;
    step = [&](Vec& v) { v = U * v; };
  }
  Vec psi = coherent_state(mp.N, p.r("q0"), p.r("p0"), a);
  std::vector<double> t, wehrl, pr, shannon, norm;
  for (int k = 0; k <= T; ++k) {
    if (k) step(psi);
    t.push_back(k);
    wehrl.push_back(wehrl_entropy(husimi(psi, a, b), EntropyUnit::Bits));
    pr.push_back(participation(psi).pr);
    shannon.push_back(shannon_entropy(psi));
    norm.push_back(std::abs(psi.norm() - 1.0));
  }
  Result r;
  r.name = "map_evolve";
  {
    auto& tb = r.table("trajectory");
    tb.add("t", t);
    tb.add("wehrl_bits", wehrl);
    tb.add("pr", pr);
    tb.add("shannon", shannon);
    tb.add("norm_error", norm);
  }
  HusimiGrid h = husimi(psi, a, b);
  {
    std::vector<double> q, pp, w;
    for (int i = 0; i < mp.N; ++i)
      for (int j = 0; j < mp.N; ++j) {
        q.push_back((i + a) / mp.N);
        pp.push_back((j + b) / mp.N);
        w.push_back(h.W(i, j));
      }
    auto& tb = r.table("husimi");
    tb.add("q", q);
    tb.add("p", pp);
    tb.add("W", w);
  }
  PhasePoint c = husimi_centroid(h);
  r.summary["final_wehrl_bits"] = wehrl.back();
  r.summary["random_state_wehrl_bits"] = wehrl_random_state(mp.N) / std::log(2.0);
  r.summary["final_centroid"] = {c.q, c.p};
  r.summary["max_norm_error"] = *std::max_element(norm.begin(), norm.end());
  r.figure = {"evolution",
              {{"Wehrl entropy", "t", "bits", {series("W", svg::Style::Line, t, wehrl)}},
               {"participation", "t", "PR", {series("PR", svg::Style::Line, t, pr)}}}};
  return r;
}

}  // namespace

void register_map(CLI::App& root, Registry& reg) {
  auto* g = add_group(root, "map", "quantized torus maps");
  {
    auto& c = reg.add(g, "spectrum", "eigenphases of a Floquet operator", map_spectrum);
    add_map_options(c, "standard", 500, 10.0, "golden", "golden");
  }
  {
    auto& c = reg.add(g, "evolve", "coherent-state evolution", map_evolve);
    add_map_options(c, "standard", 512, 10.0, "0", "0", {"standard", "baker", "cue"});
    c.params.real(c.app, "q0", 1.0 / 3, "initial position");
    c.params.real(c.app, "p0", 2.0 / 3, "initial momentum");
    c.params.integer(c.app, "T", 20, "steps");
  }
}

}  // namespace qchaos::cli
