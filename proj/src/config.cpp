#include "locbmo/config.hpp"

#include <fstream>

namespace locbmo {

namespace {

using nlohmann::json;

template <class T>
T get_field(const json& j, const std::string& base, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(base + key, "has the wrong type");
  }
}

template <class T>
T require_field(const json& j, const std::string& base, const char* key) {
  if (!j.contains(key)) throw ConfigError(base + key, "is required");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(base + key, "has the wrong type");
  }
}

SpaceSpec parse_space(const json& j) {
  SpaceSpec s;
  const std::string base = "space.";
  s.dim = get_field<int>(j, base, "dim", 1);
  s.extent = require_field<double>(j, base, "extent");
  s.spacing = require_field<double>(j, base, "spacing");
  if (s.dim != 1 && s.dim != 2) throw ConfigError("space.dim", "must be 1 or 2");
  if (!(s.extent > 0)) throw ConfigError("space.extent", "must be > 0");
  if (!(s.spacing > 0) || !(s.spacing < s.extent))
    throw ConfigError("space.spacing", "must satisfy 0 < spacing < extent");
  const auto metric = get_field<std::string>(j, base, "metric", "euclidean");
  try {
    s.metric = metric_from_string(metric);
  } catch (const std::invalid_argument&) {
    throw ConfigError("space.metric", "must be euclidean|sup_norm|graph_path");
  }
  if (j.contains("weight")) {
    const json& w = j.at("weight");
    const auto kind = get_field<std::string>(w, base + "weight.", "kind", "lebesgue");
    if (kind == "lebesgue") {
      s.weight.kind = WeightSpec::Kind::Lebesgue;
    } else if (kind == "counting") {
      s.weight.kind = WeightSpec::Kind::Counting;
    } else if (kind == "power") {
      s.weight.kind = WeightSpec::Kind::Power;
      s.weight.exponent = require_field<double>(w, base + "weight.", "exponent");
      if (!(s.weight.exponent > -1.0))
        throw ConfigError("space.weight.exponent", "must be > -1");
    } else {
      throw ConfigError("space.weight.kind", "must be lebesgue|power|counting");
    }
  }
  return s;
}

}  // namespace

Config Config::parse(const nlohmann::json& j) {
  Config c;
  c.raw = j;
  c.schema_version = get_field<int>(j, "", "schema_version", 1);
  if (c.schema_version != 1) throw ConfigError("schema_version", "unsupported (expected 1)");
  if (j.contains("seed")) c.seed = require_field<std::uint64_t>(j, "", "seed");
  if (!j.contains("space")) throw ConfigError("space", "is required");
  c.space = parse_space(j.at("space"));

  if (j.contains("potential")) {
    const json& p = j.at("potential");
    c.potential.kind = get_field<std::string>(p, "potential.", "kind", "constant");
    if (c.potential.kind == "constant") {
      c.potential.value = get_field<double>(p, "potential.", "value", 1.0);
      if (c.potential.value < 0) throw ConfigError("potential.value", "must be >= 0");
    } else if (c.potential.kind == "power") {
      c.potential.exponent = get_field<double>(p, "potential.", "exponent", 2.0);
    } else if (c.potential.kind == "indicator") {
      c.potential.lo = require_field<double>(p, "potential.", "lo");
      c.potential.hi = require_field<double>(p, "potential.", "hi");
      if (!(c.potential.lo < c.potential.hi))
        throw ConfigError("potential.lo", "must be < potential.hi");
    } else if (c.potential.kind == "table") {
      c.potential.table = require_field<std::vector<double>>(p, "potential.", "values");
    } else {
      throw ConfigError("potential.kind", "must be constant|power|indicator|table");
    }
  }
  if (j.contains("rho")) {
    const json& r = j.at("rho");
    c.rho.kind = get_field<std::string>(r, "rho.", "kind", "schrodinger");
    if (c.rho.kind == "constant") {
      c.rho.value = get_field<double>(r, "rho.", "value", 1.0);
      if (!(c.rho.value > 0)) throw ConfigError("rho.value", "must be > 0");
    } else if (c.rho.kind != "schrodinger") {
      throw ConfigError("rho.kind", "must be schrodinger|constant");
    }
  }
  if (j.contains("scale_grid")) {
    const json& g = j.at("scale_grid");
    if (g.contains("t_min")) c.scale_grid.t_min = require_field<double>(g, "scale_grid.", "t_min");
    if (g.contains("t_max")) c.scale_grid.t_max = require_field<double>(g, "scale_grid.", "t_max");
    c.scale_grid.count = get_field<int>(g, "scale_grid.", "count", 48);
    if (c.scale_grid.count < 2) throw ConfigError("scale_grid.count", "must be >= 2");
  }
  if (j.contains("ball_family")) {
    const json& b = j.at("ball_family");
    c.ball_family.center_budget = get_field<int>(b, "ball_family.", "center_budget", 0);
    c.ball_family.radius_count = get_field<int>(b, "ball_family.", "radius_count", 40);
    if (c.ball_family.radius_count < 2)
      throw ConfigError("ball_family.radius_count", "must be >= 2");
  }
  c.q = get_field<double>(j, "", "q", 1.0);
  if (!(c.q >= 1.0)) throw ConfigError("q", "must be >= 1");

  if (j.contains("suite")) {
    const json& arr = j.at("suite");
    if (!arr.is_array()) throw ConfigError("suite", "must be an array");
    int idx = 0;
    for (const auto& e : arr) {
      const std::string base = "suite[" + std::to_string(idx) + "].";
      SuiteMemberSpec m;
      m.id = require_field<std::string>(e, base, "id");
      m.kind = require_field<std::string>(e, base, "kind");
      if (m.kind == "constant") {
        m.value = get_field<double>(e, base, "value", 1.0);
      } else if (m.kind == "indicator") {
        m.lo = require_field<double>(e, base, "lo");
        m.hi = require_field<double>(e, base, "hi");
      } else if (m.kind == "eigenvector") {
        m.index = require_field<int>(e, base, "index");
        if (m.index < 0) throw ConfigError(base + "index", "must be >= 0");
      } else if (m.kind == "random") {
        m.seed = require_field<std::uint64_t>(e, base, "seed");
        m.bound = get_field<double>(e, base, "bound", 1.0);
        if (!(m.bound > 0)) throw ConfigError(base + "bound", "must be > 0");
      } else if (m.kind != "f_log" && m.kind != "abs_fg") {
        throw ConfigError(base + "kind",
                          "must be constant|f_log|abs_fg|indicator|eigenvector|random");
      }
      c.suite.push_back(m);
      ++idx;
    }
  }
  c.lambda_list = get_field<std::vector<double>>(j, "", "lambda_list", {});
  for (double l : c.lambda_list)
    if (!(l > 0)) throw ConfigError("lambda_list", "entries must be > 0");
  c.m_list = get_field<std::vector<int>>(j, "", "m_list", c.m_list);
  if (j.contains("k_range")) {
    const auto kr = require_field<std::vector<int>>(j, "", "k_range");
    if (kr.size() != 2 || kr[0] < 2 || kr[1] < kr[0])
      throw ConfigError("k_range", "must be [lo, hi] with 2 <= lo <= hi");
    c.k_lo = kr[0];
    c.k_hi = kr[1];
  }
  if (j.contains("scan")) {
    const json& s = j.at("scan");
    c.scan.window = get_field<double>(s, "scan.", "window", 2.0);
    c.scan.h = get_field<double>(s, "scan.", "h", 0.04);
    c.scan.resolutions = get_field<int>(s, "scan.", "resolutions", 3);
    c.scan.radius_lo = get_field<double>(s, "scan.", "radius_lo", 0.0);
    c.scan.radius_count = get_field<int>(s, "scan.", "radius_count", 40);
    if (!(c.scan.h > 0) || !(c.scan.h < c.scan.window))
      throw ConfigError("scan.h", "must satisfy 0 < h < window");
  }
  if (j.contains("geometry")) {
    const json& g = j.at("geometry");
    c.geometry.c4 = get_field<double>(g, "geometry.", "c4", 2.0);
    c.geometry.tau = get_field<double>(g, "geometry.", "tau", 2.0);
    c.geometry.chain_ball_budget = get_field<int>(g, "geometry.", "chain_ball_budget", 12);
    c.geometry.zed_model_probe = get_field<bool>(g, "geometry.", "zed_model_probe", true);
    if (!(c.geometry.c4 >= 1.0)) throw ConfigError("geometry.c4", "must be >= 1");
    if (!(c.geometry.tau > 1.0)) throw ConfigError("geometry.tau", "must be > 1");
  }
  return c;
}

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("(config)", "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("(config)", std::string("invalid JSON: ") + e.what());
  }
  return parse(j);
}

std::string config_hash(const nlohmann::json& j) {
  const std::string dump = j.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string Config::hash() const { return config_hash(raw); }

}  // namespace locbmo
