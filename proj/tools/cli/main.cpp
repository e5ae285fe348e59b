#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "app.hpp"
#include "qchaos/types.hpp"

using namespace qchaos;
using namespace qchaos::cli;

namespace {

// Option names already given on the command line, without leading dashes.
std::set<std::string> given_keys(const std::vector<std::string>& args) {
  std::set<std::string> keys;
  for (const auto& a : args) {
    if (a.rfind("--", 0) != 0) continue;
    keys.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2));
  }
  return keys;
}

std::string config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return {};
}

// Config entries become --key=value unless the key was passed explicitly.
// A flag set to false is dropped.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  const std::string path = config_path(args);
  if (path.empty()) return args;
  io::KeyValue kv;
  try {
    kv = io::read_key_value_file(path);
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--config", e.what());
  }
  auto keys = given_keys(args);
  for (const auto& [k, v] : kv) {
    if (k == "config") throw CLI::ValidationError("--config", "config files cannot nest");
    if (keys.count(k)) continue;
    if (v == "false") continue;
    args.push_back(v == "true" ? "--" + k : "--" + k + "=" + v);
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qchaos: quantum chaos and random-matrix numerics"};
  app.set_version_flag("--version", QCHAOS_VERSION);
  app.require_subcommand(1);

  Globals g;
  g.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--seed", g.seed, "base seed")->capture_default_str();
  app.add_option("--out", g.out, "output directory")->capture_default_str();
  app.add_option("--format", g.format, "table format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--config", g.config, "flat key = value file mirroring the flags");

  Registry reg;
  register_map(app, reg);
  register_stats(app, reg);
  register_state(app, reg);
  register_design(app, reg);
  register_ent(app, reg);
  register_opent(app, reg);
  register_channel(app, reg);
  register_conc(app, reg);
  register_figure(app, reg);

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = merge_config(std::move(args));
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidArgs;
  }

  Command* cmd = nullptr;
  for (auto& c : reg.all())
    if (c->app->parsed()) cmd = c.get();
  if (!cmd) {
    std::cerr << "error: no command selected\n";
    return kExitInvalidArgs;
  }

  try {
    Result r = cmd->run(Context{g, cmd->params});
    Json manifest = write_outputs(*cmd, g, r);
    std::cout << manifest["summary"].dump(2) << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidArgs;
  } catch (const NumericalValidationError& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kExitValidation;
  } catch (const SymmetryViolation& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
