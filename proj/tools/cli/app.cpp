#include "app.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "qchaos/torus_maps.hpp"

namespace qchaos::cli {

void Params::real(CLI::App* app, const std::string& name, double def, const std::string& help) {
  reals_[name] = def;
  app->add_option("--" + name, reals_[name], help)->capture_default_str();
}

void Params::integer(CLI::App* app, const std::string& name, long def, const std::string& help) {
  ints_[name] = def;
  app->add_option("--" + name, ints_[name], help)->capture_default_str();
}

void Params::text(CLI::App* app, const std::string& name, std::string def, const std::string& help,
                  std::vector<std::string> choices) {
  texts_[name] = std::move(def);
  auto* o = app->add_option("--" + name, texts_[name], help)->capture_default_str();
  if (!choices.empty()) o->check(CLI::IsMember(choices));
}

void Params::flag(CLI::App* app, const std::string& name, const std::string& help) {
  flags_[name] = false;
  app->add_flag("--" + name, flags_[name], help);
}

Json Params::to_json() const {
  Json j = Json::object();
  for (const auto& [k, v] : reals_) j[k] = v;
  for (const auto& [k, v] : ints_) j[k] = v;
  for (const auto& [k, v] : texts_) j[k] = v;
  for (const auto& [k, v] : flags_) j[k] = v;
  return j;
}

Command& Registry::add(CLI::App* group, const std::string& name, const std::string& help, Runner run) {
  auto c = std::make_unique<Command>();
  c->app = group->add_subcommand(name, help);
  c->app->fallthrough();
  c->path = group->get_name() + " " + name;
  c->run = std::move(run);
  cmds_.push_back(std::move(c));
  return *cmds_.back();
}

CLI::App* add_group(CLI::App& root, const std::string& name, const std::string& help) {
  auto* g = root.add_subcommand(name, help);
  g->require_subcommand(1);
  g->fallthrough();
  return g;
}

void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
  workers = std::max(1, std::min(workers, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < n; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

namespace {

Json table_json(const io::Table& t) {
  Json j = Json::object();
  for (std::size_t c = 0; c < t.header.size(); ++c) j[t.header[c]] = t.columns[c];
  return j;
}

void write_text(const std::filesystem::path& p, const std::string& s) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + p.string());
  os << s;
}

}  // namespace

Json write_outputs(const Command& cmd, const Globals& g, const Result& r) {
  namespace fs = std::filesystem;
  fs::create_directories(g.out);
  Json outputs = Json::array();
  for (const auto& [key, table] : r.tables) {
    std::string file = r.name + "_" + key + (g.format == "json" ? ".json" : ".csv");
    write_text(fs::path(g.out) / file, g.format == "json" ? table_json(table).dump(1) + "\n" : io::to_csv(table));
    outputs.push_back(file);
  }
  if (!r.figure.panels.empty()) {
    std::string file = r.name + ".svg";
    write_text(fs::path(g.out) / file, svg::render(r.figure));
    outputs.push_back(file);
  }
  Json m;
  m["schema_version"] = kSchemaVersion;
  m["tool"] = "qchaos";
  m["version"] = QCHAOS_VERSION;
  m["command"] = cmd.path;
  m["seed"] = g.seed;
  m["format"] = g.format;
  m["params"] = cmd.params.to_json();
  m["outputs"] = outputs;
  m["summary"] = r.summary;
  write_text(fs::path(g.out) / "manifest.json", m.dump(2) + "\n");
  return m;
}

std::vector<double> to_vector(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

void add_spectrum_table(Result& r, const std::string& key, const Eigen::VectorXcd& ev) {
  std::vector<double> re(ev.size()), im(ev.size()), mod(ev.size());
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    re[k] = ev[k].real();
    im[k] = ev[k].imag();
    mod[k] = std::abs(ev[k]);
  }
  auto& t = r.table(key);
  t.add("re", re);
  t.add("im", im);
  t.add("modulus", mod);
}

svg::Series series(const std::string& name, svg::Style st, std::vector<double> x, std::vector<double> y) {
  return {name, st, std::move(x), std::move(y)};
}

svg::Series histogram_series(const std::string& name, const std::vector<double>& x, int bins, double lo, double hi) {
  svg::Series s{name, svg::Style::Steps, {}, {}};
  svg::density_histogram(x, bins, lo, hi, s.x, s.y);
  return s;
}

svg::Series curve_series(const std::string& name, const std::function<double(double)>& f, double lo, double hi,
                         int points) {
  svg::Series s{name, svg::Style::Line, {}, {}};
  for (int i = 0; i < points; ++i) {
    double x = lo + (hi - lo) * (i + 0.5) / points;
    s.x.push_back(x);
    s.y.push_back(f(x));
  }
  return s;
}

double parse_beta(const std::string& s) {
  if (s == "golden") return kGolden;
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("expected a number or 'golden', got '" + s + "'");
  }
}

}  // namespace qchaos::cli
