#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace gradealg {

// One verification check. Every check carries a short anchor naming the
// mathematical statement it exercises; registration rejects empty anchors.
struct Check {
  std::string name;
  std::string anchor;
  double value = 0;
  double tolerance = 0;
  bool pass = false;
};

struct ProfileRow {
  std::int64_t shell_index = 0;
  double shell_sum = 0;
  double shell_sup = 0;
  double weight_value = 0;
};

struct ProfileTable {
  std::string name;
  std::vector<ProfileRow> rows;
};

class Report {
 public:
  void add_check(const std::string& name, const std::string& anchor, double value,
                 double tolerance, bool pass);
  // convenience: pass iff |value| <= tolerance
  void add_residual_check(const std::string& name, const std::string& anchor,
                          double value, double tolerance);
  void add_profile(ProfileTable table) { profiles_.push_back(std::move(table)); }
  void set_config_echo(nlohmann::json cfg) { config_ = std::move(cfg); }
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  nlohmann::json& details() { return details_; }

  bool all_pass() const;
  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<ProfileTable>& profiles() const { return profiles_; }

  nlohmann::json to_json() const;
  static std::string profile_csv(const ProfileTable& table);
  // Writes report.json plus one <name>.csv per profile; returns the paths.
  std::vector<std::string> write(const std::string& out_dir) const;

 private:
  std::vector<Check> checks_;
  std::vector<ProfileTable> profiles_;
  nlohmann::json config_;
  nlohmann::json details_;
  std::uint64_t seed_ = 0;
};

}  // namespace gradealg
