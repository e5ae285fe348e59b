#include <cmath>

#include "common.hpp"
#include "qchaos/linalg.hpp"
#include "qchaos/state_measures.hpp"
#include "qchaos/stats.hpp"

namespace qchaos::cli {

namespace {

// Normalized eigenvectors of the Floquet operator in the position basis.
Mat eigenvectors(const Context& ctx) {
  Mat U = map_unitary(ctx.p, ctx.p.r("K"), ctx.seed());
  Mat v = linalg::eig(U).second;
  v.colwise().normalize();
  return v;
}

Result state_pr(const Context& ctx) {
  Mat v = eigenvectors(ctx);
  const int N = static_cast<int>(v.rows());
  std::vector<double> pr(v.cols());
  for (Eigen::Index k = 0; k < v.cols(); ++k) pr[k] = participation(v.col(k)).pr / N;
  auto ms = stats::mean_se(pr);
  Result r;
  r.name = "state_pr";
  {
    auto& t = r.table("eigenvectors");
    t.add("pr_over_N", pr);
  }
  r.summary["N"] = N;
  r.summary["pr_over_N_mean"] = ms.mean;
  r.summary["pr_over_N_se"] = ms.se;
  r.summary["haar_complex"] = 1.0 / (ipr_haar_complex(N) * N);
  r.summary["haar_real"] = 1.0 / (ipr_haar_real(N) * N);
  r.figure = {"participation ratio",
              {{"eigenvector PR/N", "PR/N", "density", {histogram_series("data", pr, 40, 0, 1)}}},
              1};
  return r;
}

Result state_shannon(const Context& ctx) {
  Mat v = eigenvectors(ctx);
  const int N = static_cast<int>(v.rows());
  std::vector<double> h(v.cols());
  for (Eigen::Index k = 0; k < v.cols(); ++k) h[k] = shannon_entropy(v.col(k));
  auto ms = stats::mean_se(h);
  Result r;
  r.name = "state_shannon";
  {
    auto& t = r.table("eigenvectors");
    t.add("shannon", h);
  }
  r.summary["N"] = N;
  r.summary["shannon_mean"] = ms.mean;
  r.summary["shannon_se"] = ms.se;
  r.summary["haar_complex"] = shannon_haar_complex(N);
  r.summary["haar_real"] = shannon_haar_real(N);
  r.summary["log_N"] = std::log(static_cast<double>(N));
  double lo = std::log(static_cast<double>(N)) - 3, hi = std::log(static_cast<double>(N));
  r.figure = {"Shannon entropy", {{"eigenvector entropy", "H", "density", {histogram_series("data", h, 40, lo, hi)}}}, 1};
  return r;
}

Result state_wehrl(const Context& ctx) {
  const Params& p = ctx.p;
  MapParams mp = map_params(p);
  const std::string& m = p.s("map");
  double lambda = 0, a = mp.alpha, b = mp.beta;
  StepFn step;
  Mat U;
  std::unique_ptr<StandardMapStepper> st;
  if (m == "baker") {
    if (mp.N % 2) throw std::invalid_argument("baker map needs even N");
    U = build_baker_map(mp.N).U;
    step = [&](Vec& v) { v = U * v; };
    lambda = std::log(2.0);
    a = b = 0.5;
  } else {
    st = std::make_unique<StandardMapStepper>(mp);
    step = [&](Vec& v) { st->apply(v); };
    lambda = chirikov_lyapunov(mp.K);
  }
  const double tE = ehrenfest_time(mp.N, lambda);
  int T = p.i("T");
  if (T <= 0) T = static_cast<int>(std::floor(4 * tE));
  auto h = entropy_trajectory(step, coherent_state(mp.N, p.r("q0"), p.r("p0"), a), T,
                              [&](const Vec& v) { return wehrl_entropy(husimi(v, a, b), EntropyUnit::Bits); });
  std::vector<double> t(h.size());
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = static_cast<double>(k);
  const int f0 = p.i("fit_from"), f1 = std::min<int>(p.i("fit_to"), T);
  if (f0 < 0 || f1 <= f0) throw std::invalid_argument("need 0 <= fit_from < fit_to <= T");
  std::vector<double> fx(t.begin() + f0, t.begin() + f1 + 1), fy(h.begin() + f0, h.begin() + f1 + 1);
  auto fit = stats::linear_fit(fx, fy);
  const double plateau = wehrl_random_state(mp.N) / std::log(2.0);
  Result r;
  r.name = "state_wehrl";
  {
    auto& tb = r.table("trajectory");
    tb.add("t", t);
    tb.add("wehrl_bits", h);
  }
  r.summary["slope_bits_per_step"] = fit.slope;
  r.summary["lyapunov_bits"] = lambda / std::log(2.0);
  r.summary["ehrenfest_time"] = tE;
  r.summary["random_state_bits"] = plateau;
  r.summary["final_bits"] = h.back();
  svg::Panel pan{"Wehrl entropy", "t", "bits",
                 {series("data", svg::Style::Line, t, h),
                  series("random state", svg::Style::Line, {0.0, static_cast<double>(T)}, {plateau, plateau})}};
  r.figure = {"Wehrl entropy growth", {pan}, 1};
  return r;
}

}  // namespace

void register_state(CLI::App& root, Registry& reg) {
  auto* g = add_group(root, "state", "state localization measures");
  {
    auto& c = reg.add(g, "pr", "participation ratio of Floquet eigenvectors", state_pr);
    add_map_options(c, "standard", 750, 10.0, "golden", "golden");
  }
  {
    auto& c = reg.add(g, "shannon", "Shannon entropy of Floquet eigenvectors", state_shannon);
    add_map_options(c, "standard", 750, 10.0, "golden", "golden");
  }
  {
    auto& c = reg.add(g, "wehrl", "Wehrl entropy of an evolving coherent state", state_wehrl);
    add_map_options(c, "baker", 2038, 10.0, "0", "0", {"standard", "baker"});
    c.params.real(c.app, "q0", 1.0 / 3, "initial position");
    c.params.real(c.app, "p0", 2.0 / 3, "initial momentum");
    c.params.integer(c.app, "T", 0, "steps (0 means 4 Ehrenfest times)");
    c.params.integer(c.app, "fit_from", 1, "first step of the slope fit");
    c.params.integer(c.app, "fit_to", 8, "last step of the slope fit");
  }
}

}  // namespace qchaos::cli
