#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qchaos/io.hpp"
#include "svg.hpp"

namespace qchaos::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr int kExitInvalidArgs = 2;
inline constexpr int kExitValidation = 3;

using Json = nlohmann::json;

// Options of one subcommand, kept addressable so the manifest can list the
// resolved values. std::map nodes never move, so CLI11 can bind to them.
class Params {
 public:
  void real(CLI::App* app, const std::string& name, double def, const std::string& help);
  void integer(CLI::App* app, const std::string& name, long def, const std::string& help);
  void text(CLI::App* app, const std::string& name, std::string def, const std::string& help,
            std::vector<std::string> choices = {});
  void flag(CLI::App* app, const std::string& name, const std::string& help);

  double r(const std::string& k) const { return reals_.at(k); }
  int i(const std::string& k) const { return static_cast<int>(ints_.at(k)); }
  long l(const std::string& k) const { return ints_.at(k); }
  const std::string& s(const std::string& k) const { return texts_.at(k); }
  bool f(const std::string& k) const { return flags_.at(k); }

  Json to_json() const;

 private:
  std::map<std::string, double> reals_;
  std::map<std::string, long> ints_;
  std::map<std::string, std::string> texts_;
  std::map<std::string, bool> flags_;
};

struct Globals {
  std::uint64_t seed = 1;
  std::string out = "qchaos-out";
  std::string format = "csv";
  int workers = 1;
  std::string config;
};

struct Result {
  std::string name;  // file stem
  Json summary = Json::object();
  std::vector<std::pair<std::string, io::Table>> tables;
  svg::Figure figure;

  io::Table& table(const std::string& key) {
    tables.emplace_back(key, io::Table{});
    return tables.back().second;
  }
};

struct Context {
  const Globals& g;
  const Params& p;
  std::uint64_t seed() const { return g.seed; }
  int workers() const { return g.workers; }
};

using Runner = std::function<Result(const Context&)>;

struct Command {
  std::string path;  // "channel diluted"
  CLI::App* app = nullptr;
  Params params;
  Runner run;
};

// Registry of leaf commands; deque-like stability via unique_ptr.
class Registry {
 public:
  Command& add(CLI::App* group, const std::string& name, const std::string& help, Runner run);
  std::vector<std::unique_ptr<Command>>& all() { return cmds_; }

 private:
  std::vector<std::unique_ptr<Command>> cmds_;
};

// Runs fn(i) for i in [0, n) on up to `workers` threads. Callers derive all
// randomness from i, so the result is independent of the worker count.
void parallel_for(int n, int workers, const std::function<void(int)>& fn);

// Writes tables, SVG and manifest.json under g.out; returns the manifest.
Json write_outputs(const Command& cmd, const Globals& g, const Result& r);

// Creates a command group that requires one leaf and lets globals fall through.
CLI::App* add_group(CLI::App& root, const std::string& name, const std::string& help);

// Group registration, one per subcommand family.
void register_map(CLI::App& root, Registry& reg);
void register_stats(CLI::App& root, Registry& reg);
void register_state(CLI::App& root, Registry& reg);
void register_design(CLI::App& root, Registry& reg);
void register_ent(CLI::App& root, Registry& reg);
void register_opent(CLI::App& root, Registry& reg);
void register_channel(CLI::App& root, Registry& reg);
void register_conc(CLI::App& root, Registry& reg);
void register_figure(CLI::App& root, Registry& reg);

// Small helpers shared by the command files.
std::vector<double> to_vector(const Eigen::VectorXd& v);
void add_spectrum_table(Result& r, const std::string& key, const Eigen::VectorXcd& ev);
svg::Series series(const std::string& name, svg::Style st, std::vector<double> x, std::vector<double> y);
svg::Series histogram_series(const std::string& name, const std::vector<double>& x, int bins, double lo, double hi);
svg::Series curve_series(const std::string& name, const std::function<double(double)>& f, double lo, double hi,
                         int points = 200);
double parse_beta(const std::string& s);  // "golden" or a number

}  // namespace qchaos::cli
