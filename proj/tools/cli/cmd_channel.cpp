#include <cmath>
#include <sstream>

#include "common.hpp"
#include "qchaos/channels.hpp"
#include "qchaos/ensembles.hpp"
#include "qchaos/linalg.hpp"
#include "qchaos/stats.hpp"

namespace qchaos::cli {

namespace {

void need(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

svg::Series spectrum_points(const std::string& name, const Vec& ev) {
  svg::Series s{name, svg::Style::Points, {}, {}};
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    s.x.push_back(ev[k].real());
    s.y.push_back(ev[k].imag());
  }
  return s;
}

svg::Series circle(const std::string& name, double R) {
  svg::Series s{name, svg::Style::Line, {}, {}};
  for (int k = 0; k <= 128; ++k) {
    double t = 2 * M_PI * k / 128;
    s.x.push_back(R * std::cos(t));
    s.y.push_back(R * std::sin(t));
  }
  return s;
}

double bulk_radius(const Vec& spectrum) {
  double m = 0;
  for (Eigen::Index k = 1; k < spectrum.size(); ++k) m = std::max(m, std::abs(spectrum[k]));
  return m;
}

void channel_summary(Result& r, const ChannelBundle& c) {
  validate_cptp(c);
  r.summary["N"] = c.kraus.N_in;
  r.summary["M"] = c.kraus.M();
  r.summary["tp_residual"] = trace_preservation_residual(c.kraus);
  r.summary["gap"] = c.gap;
  r.summary["bulk_radius"] = bulk_radius(c.spectrum);
  add_spectrum_table(r, "spectrum", c.spectrum);
}

Result channel_random(const Context& ctx) {
  const Params& p = ctx.p;
  const int N = p.i("N"), M = p.i("M");
  need(N >= 2 && M >= 1 && N <= 64, "need 2 <= N <= 64 and M >= 1");
  auto c = random_channel(N, M, ctx.seed());
  Result r;
  r.name = "channel_random";
  channel_summary(r, c);
  r.summary["predicted_bulk_radius"] = 1.0 / std::sqrt(static_cast<double>(M));
  r.figure = {"random channel",
              {{"superoperator spectrum", "Re", "Im",
                {spectrum_points("eigenvalues", c.spectrum), circle("1/sqrt(M)", 1 / std::sqrt(double(M)))}, true,
                true}},
              1};
  return r;
}

Mat pauli(int k) {
  Mat m(2, 2);
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    default: m << 1, 0, 0, -1;
  }
  return m;
}

Result channel_mixed(const Context& ctx) {
  const Params& p = ctx.p;
  std::vector<double> w;
  std::vector<Mat> us;
  int N = p.i("N");
  if (p.s("kind") == "pauli") {
    N = 2;
    w = {0.25, 0.25, 0.25, 0.25};
    for (int k = 0; k < 4; ++k) us.push_back(pauli(k));
  } else {
    const int M = p.i("M");
    need(N >= 2 && N <= 64 && M >= 1, "need 2 <= N <= 64 and M >= 1");
    Rng rng(ctx.seed());
    for (int k = 0; k < M; ++k) {
      us.push_back(cue(rng, N));
      w.push_back(1.0 / M);
    }
  }
  auto c = mixed_unitary_channel(w, us);
  Result r;
  r.name = "channel_mixed";
  channel_summary(r, c);
  if (p.s("kind") == "pauli") {
    auto b = bloch_affine(c.kraus);
    r.summary["bloch_C_max_abs"] = b.C.cwiseAbs().maxCoeff();
    r.summary["bloch_kappa_max_abs"] = b.kappa.cwiseAbs().maxCoeff();
    Mat rho(2, 2);
    rho << 0.8, cplx(0.1, 0.2), cplx(0.1, -0.2), 0.2;
    r.summary["depolarization_error"] = linalg::max_abs(apply_channel(c.kraus, rho) - Mat::Identity(2, 2) / 2.0);
  }
  r.figure = {"mixed unitary channel",
              {{"superoperator spectrum", "Re", "Im", {spectrum_points("eigenvalues", c.spectrum)}, true, true}},
              1};
  return r;
}

Result channel_diluted(const Context& ctx) {
  const Params& p = ctx.p;
  const int N = p.i("N"), M = p.i("M");
  const double pr = p.r("p");
  need(N >= 2 && N <= 64 && M >= 1, "need 2 <= N <= 64 and M >= 1");
  need(pr >= 0 && pr <= 1, "need 0 <= p <= 1");
  auto radii = ring_radii(pr, M);
  auto c = diluted_unitary(pr, M, N, ctx.seed());
  auto s = summarize_ring(c.spectrum, radii, p.r("margin"));
  Result r;
  r.name = "channel_diluted";
  channel_summary(r, c);
  r.summary["classification"] = radii.disk ? "disk" : "ring";
  r.summary["empirical_classification"] = s.classification;
  r.summary["R_minus"] = radii.R_minus;
  r.summary["R_plus"] = radii.R_plus;
  r.summary["p_c"] = radii.p_c;
  r.summary["inside_fraction"] = s.inside_fraction;
  svg::Panel pan{"diluted unitary", "Re", "Im", {spectrum_points("eigenvalues", c.spectrum), circle("R+", radii.R_plus)},
                 true, true};
  if (!radii.disk) pan.series.push_back(circle("R-", radii.R_minus));
  r.figure = {"diluted unitary channel", {pan}, 1};
  return r;
}

Result channel_complementary(const Context& ctx) {
  const Params& p = ctx.p;
  const int N = p.i("N"), M = p.i("M");
  need(N >= 2 && N <= 40 && M >= 1, "need 2 <= N <= 40 and M >= 1");
  auto comp = complementary_channel(N, M, ctx.seed());
  auto radii = complementary_ring_radii(N, M);
  Vec ev = complementary_spectrum_model(comp, substream(ctx.seed(), 0).engine()());
  auto s = summarize_ring(ev, radii, p.r("margin"));
  Result r;
  r.name = "channel_complementary";
  add_spectrum_table(r, "spectrum", ev);
  r.summary["N"] = N;
  r.summary["M"] = M;
  r.summary["tp_residual"] = trace_preservation_residual(comp);
  r.summary["R_minus"] = radii.R_minus;
  r.summary["R_plus"] = radii.R_plus;
  r.summary["inside_fraction"] = s.inside_fraction;
  r.summary["empirical_classification"] = s.classification;
  svg::Panel pan{"complementary channel", "Re", "Im",
                 {spectrum_points("eigenvalues", ev), circle("R+", radii.R_plus), circle("R-", radii.R_minus)}, true,
                 true};
  r.figure = {"complementary channel", {pan}, 1};
  return r;
}

Result channel_kesten(const Context& ctx) {
  const Params& p = ctx.p;
  const int M = p.i("M"), N = p.i("N"), R = p.i("realizations");
  need(M >= 2 && N >= 2 && R >= 1, "need M >= 2, N >= 2, realizations >= 1");
  auto x = kesten_sample(M, N, R, ctx.seed());
  const double top = 4.0 * (M - 1) / M;
  Result r;
  r.name = "channel_kesten";
  {
    auto& t = r.table("singular_values");
    t.add("x", x);
  }
  r.summary["ks"] = stats::ks_statistic(x, [M](double v) { return kesten_cdf(M, v); });
  r.summary["support"] = {0.0, top};
  svg::Panel pan{"Kesten law", "x", "density", {histogram_series("data", x, 50, 0, top)}};
  pan.series.push_back(curve_series("Kesten", [M](double v) { return kesten_density(M, v); }, 0, top));
  r.figure = {"sum of unitaries", {pan}, 1};
  return r;
}

Result channel_spectrum(const Context& ctx) {
  const Params& p = ctx.p;
  ChannelBundle c;
  const std::string& files = p.s("kraus");
  if (!files.empty()) {
    std::vector<Mat> ops;
    std::stringstream ss(files);
    std::string f;
    while (std::getline(ss, f, ','))
      if (!f.empty()) ops.push_back(io::read_matrix_csv(f));
    need(!ops.empty(), "--kraus lists no files");
    c = make_bundle(make_kraus(std::move(ops)));
  } else {
    Mat U = map_unitary(p, p.r("K"), ctx.seed());
    c = measured_map_spectrum(U, p.i("measurements"), substream(ctx.seed(), 0).engine()());
  }
  Result r;
  r.name = "channel_spectrum";
  channel_summary(r, c);
  r.figure = {"channel spectrum",
              {{"superoperator spectrum", "Re", "Im", {spectrum_points("eigenvalues", c.spectrum)}, true, true}},
              1};
  return r;
}

}  // namespace

void register_channel(CLI::App& root, Registry& reg) {
  auto* g = add_group(root, "channel", "quantum channels");
  {
    auto& c = reg.add(g, "random", "random channel from a Haar isometry", channel_random);
    c.params.integer(c.app, "N", 16, "dimension");
    c.params.integer(c.app, "M", 4, "Kraus rank");
  }
  {
    auto& c = reg.add(g, "mixed", "mixed unitary channel", channel_mixed);
    c.params.text(c.app, "kind", "haar", "unitaries", {"haar", "pauli"});
    c.params.integer(c.app, "N", 16, "dimension (haar)");
    c.params.integer(c.app, "M", 4, "members (haar)");
  }
  {
    auto& c = reg.add(g, "diluted", "unitary diluted by random noise", channel_diluted);
    c.params.real(c.app, "p", 0.57, "noise weight");
    c.params.integer(c.app, "M", 9, "noise Kraus rank");
    c.params.integer(c.app, "N", 50, "dimension");
    c.params.real(c.app, "margin", 0.05, "radial margin for the inside fraction");
  }
  {
    auto& c = reg.add(g, "complementary", "complementary channel of a random isometry", channel_complementary);
    c.params.integer(c.app, "N", 14, "input dimension");
    c.params.integer(c.app, "M", 18, "environment dimension");
    c.params.real(c.app, "margin", 0.05, "radial margin for the inside fraction");
  }
  {
    auto& c = reg.add(g, "kesten", "singular values of a sum of Haar unitaries", channel_kesten);
    c.params.integer(c.app, "M", 5, "unitaries");
    c.params.integer(c.app, "N", 400, "dimension");
    c.params.integer(c.app, "realizations", 1, "independent sums");
  }
  {
    auto& c = reg.add(g, "spectrum", "spectrum of a Kraus set or a measured map", channel_spectrum);
    c.params.text(c.app, "kraus", "", "comma-separated Kraus CSV files (row,col,re,im)");
    add_map_options(c, "baker", 32, 10.0, "0", "0", {"standard", "baker", "cue"});
    c.params.integer(c.app, "measurements", 2, "projectors in the measured map");
  }
}

}  // namespace qchaos::cli
