#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "gradealg/config.hpp"

using namespace gradealg;

namespace {

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Config:
    case ErrorKind::Io:
      return 2;
    case ErrorKind::Resource:
      return 3;
    default:
      return 1;
  }
}

nlohmann::json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open config file: " + path);
  nlohmann::json cfg;
  try {
    in >> cfg;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Config, std::string("config is not valid JSON: ") + e.what());
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"l1-algebras of graded operator models: property suites and experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  std::vector<std::int64_t> windows;

  const std::vector<std::string> ops = {"verify",   "invert", "project", "radius",
                                        "fredholm", "kgraph", "weights"};
  for (const auto& op : ops) {
    auto* sub = app.add_subcommand(op);
    sub->add_option("--config", config_path, "experiment config (JSON)")->required();
    sub->add_option("--seed", seed, "random seed recorded in the report");
    sub->add_option("--out", out_dir, "output directory for report.json / CSV");
    sub->add_option("--window", windows, "override window sizes")->delimiter(',');
  }

  CLI11_PARSE(app, argc, argv);
  const std::string op = app.get_subcommands().front()->get_name();

  RunOptions opts;
  opts.seed = seed;
  opts.windows = windows;
  if (const char* cap = std::getenv("GRADEALG_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(cap, &end, 10);
    if (end && *end == '\0' && v > 0) opts.cap = static_cast<std::size_t>(v);
  }

  try {
    Report rep = run_experiment(op, load_config(config_path), opts);
    for (const auto& path : rep.write(out_dir))
      std::cout << "wrote " << path << "\n";
    std::size_t failed = 0;
    for (const auto& c : rep.checks()) {
      if (!c.pass) {
        ++failed;
        std::cout << "[FAIL] " << c.name << " (" << c.anchor
                  << "): value=" << c.value << " tol=" << c.tolerance << "\n";
      }
    }
    std::cout << rep.checks().size() - failed << "/" << rep.checks().size()
              << " checks passed\n";
    return failed == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what()
              << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
