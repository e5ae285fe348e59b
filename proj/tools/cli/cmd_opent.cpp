#include <cmath>

#include "common.hpp"
#include "qchaos/designs.hpp"
#include "qchaos/ensembles.hpp"
#include "qchaos/operator_ent.hpp"

namespace qchaos::cli {

namespace {

Mat cnot_gate() {
  Mat u = Mat::Zero(4, 4);
  u(0, 0) = u(1, 1) = u(2, 3) = u(3, 2) = 1;
  return u;
}

// Two-party gate on C^N (x) C^N; N is inferred for file input.
std::pair<Mat, int> load_gate(const Context& ctx) {
  const Params& p = ctx.p;
  const std::string& g = p.s("gate");
  const int N = p.i("N");
  if (g == "swap") return {swap_operator(N), N};
  if (g == "cnot") return {cnot_gate(), 2};
  if (g == "cue") return {sample_cue(N * N, ctx.seed()).m, N};
  if (g == "coupled") {
    CoupledMapParams cp;
    cp.N = N;
    cp.b = p.r("b");
    cp.K1 = cp.K2 = p.r("K");
    return {build_coupled_map(cp).U, N};
  }
  // file
  const std::string& path = p.s("matrix");
  if (path.empty()) throw std::invalid_argument("--gate file needs --matrix");
  Mat u = path.size() > 4 && path.substr(path.size() - 4) == ".csv" ? io::read_matrix_csv(path)
                                                                     : io::read_matrix_binary(path);
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(u.rows()))));
  if (u.rows() != u.cols() || n * n != u.rows()) throw std::invalid_argument("gate must be square of size N^2");
  return {u, n};
}

void add_gate_options(Command& c, const std::string& def, int N) {
  c.params.text(c.app, "gate", def, "gate", {"swap", "cnot", "cue", "coupled", "file"});
  c.params.integer(c.app, "N", N, "local dimension");
  c.params.text(c.app, "matrix", "", "matrix file (row,col,re,im CSV or binary dump)");
  c.params.real(c.app, "b", 0.3, "coupling for --gate coupled");
  c.params.real(c.app, "K", 10.0, "kick strength for --gate coupled");
}

Result opent_ep(const Context& ctx) {
  auto [U, N] = load_gate(ctx);
  auto os = operator_entanglements(U, N);
  auto rec = entangling_power(U, N);
  Result r;
  r.name = "opent_ep";
  {
    auto& t = r.table("schmidt");
    t.add("lambda", os.lambda);
    t.add("mu", os.mu);
  }
  r.summary["N"] = N;
  r.summary["E_U"] = rec.E_U;
  r.summary["E_US"] = rec.E_US;
  r.summary["e_p"] = rec.e_p;
  r.summary["g_t"] = rec.g_t;
  r.summary["e_p_haar"] = rec.e_p_haar;
  r.summary["E_haar"] = rec.E_haar;
  r.summary["dual_unitary"] = is_dual_unitary(U, N);
  std::vector<double> k(os.lambda.size());
  for (std::size_t i = 0; i < k.size(); ++i) k[i] = static_cast<double>(i);
  r.figure = {"operator Schmidt values",
              {{"U and US", "index", "value",
                {series("U", svg::Style::Points, k, os.lambda), series("US", svg::Style::Points, k, os.mu)}}},
              1};
  return r;
}

Result opent_thermalize(const Context& ctx) {
  const Params& p = ctx.p;
  auto [U, N] = load_gate(ctx);
  const int n = p.i("nmax"), H = p.i("histories");
  if (n < 1 || H < 2) throw std::invalid_argument("need nmax >= 1 and histories >= 2");
  const double x = entangling_power(U, N).e_p;
  auto mc = thermalization_mc(U, N, n, H, ctx.seed());
  auto curve = thermalization_curve(x, haar_entangling_power(N), n);
  std::vector<double> steps(n);
  int within = 0;
  for (int k = 0; k < n; ++k) {
    steps[k] = k + 1;
    within += std::abs(mc.mean[k] - curve[k]) <= 3 * mc.se[k] + 1e-12;
  }
  Result r;
  r.name = "opent_thermalize";
  {
    auto& t = r.table("curve");
    t.add("n", steps);
    t.add("mc_mean", mc.mean);
    t.add("mc_se", mc.se);
    t.add("theory", curve);
  }
  r.summary["e_p"] = x;
  r.summary["e_p_haar"] = haar_entangling_power(N);
  r.summary["within_3_sigma"] = within;
  r.summary["steps"] = n;
  r.figure = {"entangling power under local scrambling",
              {{"e_p", "n", "e_p",
                {series("Monte Carlo", svg::Style::Points, steps, mc.mean),
                 series("recursion", svg::Style::Line, steps, curve)}}},
              1};
  return r;
}

Result opent_coupled(const Context& ctx) {
  const Params& p = ctx.p;
  CoupledMapParams cp;
  cp.N = p.i("N");
  cp.K1 = p.r("K1");
  cp.K2 = p.r("K2");
  cp.alpha = parse_beta(p.s("alpha"));
  cp.beta = parse_beta(p.s("beta"));
  cp.b = p.r("b");
  if (cp.N < 2 || p.i("T") < 1) throw std::invalid_argument("need N >= 2 and T >= 1");
  auto kind = p.s("init") == "random" ? InitialKind::RandomProduct : InitialKind::CoherentProduct;
  auto es = entanglement_evolution(cp, kind, p.i("T"), ctx.seed());
  std::vector<double> t(es.t.begin(), es.t.end());
  Result r;
  r.name = "opent_coupled";
  {
    auto& tb = r.table("entropy");
    tb.add("t", t);
    tb.add("S_vN", es.S_vN);
    tb.add("S_2", es.S2);
    tb.add("markov_S_2", es.markov_S2);
  }
  const double Lambda = lambda_parameter(cp.N, cp.b);
  r.summary["e_p"] = es.e_p;
  r.summary["t_star"] = es.t_star;
  r.summary["Lambda"] = Lambda;
  r.summary["ln_N_over_2"] = std::log(cp.N / 2.0);
  r.summary["final_S_2"] = es.S2.back();
  auto pr = perturbative_references(Lambda, 1.0, true);
  r.summary["perturbative_S_vN"] = pr.S_vN_avg;
  const double sat = std::log(cp.N / 2.0);
  r.figure = {"coupled maps",
              {{"entanglement growth", "t", "entropy",
                {series("S_vN", svg::Style::Line, t, es.S_vN), series("S_2", svg::Style::Line, t, es.S2),
                 series("Markov S_2", svg::Style::Line, t, es.markov_S2),
                 series("ln(N/2)", svg::Style::Line, {0.0, t.back()}, {sat, sat})}}},
              1};
  return r;
}

}  // namespace

void register_opent(CLI::App& root, Registry& reg) {
  auto* g = add_group(root, "opent", "operator entanglement");
  {
    auto& c = reg.add(g, "ep", "operator entanglement and entangling power of a gate", opent_ep);
    add_gate_options(c, "cnot", 2);
  }
  {
    auto& c = reg.add(g, "thermalize", "entangling power under random local unitaries", opent_thermalize);
    add_gate_options(c, "coupled", 8);
    c.params.integer(c.app, "nmax", 10, "compositions");
    c.params.integer(c.app, "histories", 300, "Monte Carlo histories");
  }
  {
    auto& c = reg.add(g, "coupled", "entanglement growth in coupled standard maps", opent_coupled);
    c.params.integer(c.app, "N", 200, "local dimension");
    c.params.real(c.app, "K1", 10.0, "first kick strength");
    c.params.real(c.app, "K2", 10.0, "second kick strength");
    c.params.text(c.app, "alpha", "0.5", "position phase");
    c.params.text(c.app, "beta", "golden", "momentum phase");
    c.params.real(c.app, "b", 0.01, "coupling");
    c.params.integer(c.app, "T", 300, "steps");
    c.params.text(c.app, "init", "coherent", "initial product state", {"coherent", "random"});
  }
}

}  // namespace qchaos::cli
