#include "gradealg/report.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gradealg/error.hpp"

namespace gradealg {

namespace {
// fixed float formatting keeps reports byte-identical across runs
std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
}  // namespace

void Report::add_check(const std::string& name, const std::string& anchor,
                       double value, double tolerance, bool pass) {
  if (anchor.empty())
    fail(ErrorKind::Config, "every check must carry a statement anchor");
  if (name.empty()) fail(ErrorKind::Config, "checks need a name");
  checks_.push_back({name, anchor, value, tolerance, pass});
}

void Report::add_residual_check(const std::string& name, const std::string& anchor,
                                double value, double tolerance) {
  add_check(name, anchor, value, tolerance, std::abs(value) <= tolerance);
}

bool Report::all_pass() const {
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    checks.push_back({{"name", c.name},
                      {"anchor", c.anchor},
                      {"value", c.value},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  nlohmann::json profiles = nlohmann::json::array();
  for (const auto& p : profiles_) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : p.rows)
      rows.push_back({{"shell_index", r.shell_index},
                      {"shell_sum", r.shell_sum},
                      {"shell_sup", r.shell_sup},
                      {"weight_value", r.weight_value}});
    profiles.push_back({{"name", p.name}, {"rows", rows}});
  }
  nlohmann::json out = {{"config", config_},
                        {"seed", seed_},
                        {"checks", checks},
                        {"profiles", profiles}};
  if (!details_.is_null()) out["details"] = details_;
  return out;
}

std::string Report::profile_csv(const ProfileTable& table) {
  std::string out = "shell_index,shell_sum,shell_sup,weight_value\n";
  for (const auto& r : table.rows) {
    char idx[32];
    std::snprintf(idx, sizeof(idx), "%" PRId64, r.shell_index);
    out += idx;
    out += ',' + fmt_double(r.shell_sum) + ',' + fmt_double(r.shell_sup) + ',' +
           fmt_double(r.weight_value) + '\n';
  }
  return out;
}

std::vector<std::string> Report::write(const std::string& out_dir) const {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) fail(ErrorKind::Io, "cannot create output directory " + out_dir);
  std::vector<std::string> paths;

  const std::string report_path = (fs::path(out_dir) / "report.json").string();
  std::ofstream jf(report_path);
  if (!jf) fail(ErrorKind::Io, "cannot write " + report_path);
  jf << to_json().dump(2) << "\n";
  paths.push_back(report_path);

  for (const auto& p : profiles_) {
    const std::string csv_path = (fs::path(out_dir) / (p.name + ".csv")).string();
    std::ofstream cf(csv_path);
    if (!cf) fail(ErrorKind::Io, "cannot write " + csv_path);
    cf << profile_csv(p);
    paths.push_back(csv_path);
  }
  return paths;
}

}  // namespace gradealg
