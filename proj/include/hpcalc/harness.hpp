// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hpcalc {

using Config = std::map<std::string, std::string>;

// "key = value" lines; '#' starts a comment.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);
// Entries of overrides replace those of base.
Config merge_config(Config base, const Config& overrides);

double config_double(const Config& c, const std::string& key, double fallback);
long config_int(const Config& c, const std::string& key, long fallback);
std::uint64_t config_seed(const Config& c, std::uint64_t fallback);

struct Assertion {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct Report {
  std::string kind;  // "verify" or "experiment"
  std::string name;
  std::uint64_t seed = 0;
  Config config;
  std::vector<Assertion> assertions;
  std::vector<std::string> csv_header;
  std::vector<std::vector<double>> csv_rows;
  std::map<std::string, double> summary;

  // value <= bound
  void check_le(const std::string& what, double value, double bound);
  // lo <= value <= hi, recorded with bound = hi and value measured
  void check_in(const std::string& what, double value, double lo, double hi);
  bool all_pass() const;
  std::string json() const;
  std::string csv() const;
};

const std::vector<std::string>& verify_names();
const std::vector<std::string>& experiment_names();

// Throws Error(Configuration) for unknown names.
Report run_verify(const std::string& name, const Config& cfg);
Report run_experiment(const std::string& name, const Config& cfg);

}  // namespace hpcalc
