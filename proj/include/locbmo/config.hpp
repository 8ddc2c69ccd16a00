#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "locbmo/space.hpp"

namespace locbmo {

/// Validation failure carrying the JSON field path.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), field_path(path) {}
  std::string field_path;
};

struct PotentialSpec {
  std::string kind = "constant";  // constant | power | indicator | table
  double value = 1.0;
  double exponent = 2.0;
  double lo = 0.0, hi = 1.0;
  std::vector<double> table;
};

struct RhoSpec {
  std::string kind = "schrodinger";  // schrodinger | constant
  double value = 1.0;
};

struct ScaleGridSpec {
  std::optional<double> t_min, t_max;
  int count = 48;
};

struct BallFamilySpec {
  int center_budget = 0;  // 0 = all points
  int radius_count = 40;
};

struct SuiteMemberSpec {
  std::string id;
  std::string kind;  // constant | f_log | abs_fg | indicator | eigenvector | random
  double value = 1.0;
  double lo = 0.0, hi = 1.0;
  int index = 0;
  std::optional<std::uint64_t> seed;
  double bound = 1.0;
};

struct ScanSpec {
  double window = 2.0;
  double h = 0.04;
  int resolutions = 3;
  double radius_lo = 0.0;
  int radius_count = 40;
};

struct GeometrySpec {
  double c4 = 2.0;
  double tau = 2.0;
  int chain_ball_budget = 12;   // base balls sampled for the chain construction
  bool zed_model_probe = true;  // run the sub-spacing weak-geodesic sweep
};

struct Config {
  int schema_version = 1;
  std::optional<std::uint64_t> seed;
  SpaceSpec space;
  PotentialSpec potential;
  RhoSpec rho;
  ScaleGridSpec scale_grid;
  BallFamilySpec ball_family;
  double q = 1.0;
  std::vector<SuiteMemberSpec> suite;
  std::vector<double> lambda_list;
  std::vector<int> m_list = {1, 2, 3, 4, 5, 6, 7, 8};
  int k_lo = 2, k_hi = 20;
  ScanSpec scan;
  GeometrySpec geometry;

  nlohmann::json raw;

  static Config parse(const nlohmann::json& j);
  static Config from_file(const std::string& path);
  /// FNV-1a over the canonical dump; echoed into every output header.
  std::string hash() const;
};

std::string config_hash(const nlohmann::json& j);

}  // namespace locbmo
