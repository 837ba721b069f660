#include "infogeo/config.hpp"

#include <set>

#include "infogeo/errors.hpp"

namespace infogeo {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key())) throw ConfigError("unknown key '" + it.key() + "' in " + where);
}

double positive_number(const json& v, const std::string& name) {
  if (!v.is_number()) throw ConfigError(name + " must be a number");
  const double x = v.get<double>();
  if (!(x > 0.0) || !std::isfinite(x)) throw ConfigError(name + " must be positive and finite");
  return x;
}

std::uint64_t unsigned_integer(const json& v, const std::string& name) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<long long>() < 0))
    throw ConfigError(name + " must be a non-negative integer");
  return v.get<std::uint64_t>();
}

ManifoldKind parse_manifold(const std::string& s) {
  if (s == "simplex") return ManifoldKind::simplex;
  if (s == "su_times_simplex") return ManifoldKind::su_times_simplex;
  if (s == "pure_states") return ManifoldKind::pure_states;
  if (s == "euclidean") return ManifoldKind::euclidean;
  throw ConfigError("unknown manifold '" + s + "'");
}

DivergenceKind parse_divergence(const std::string& s) {
  if (s == "kl") return DivergenceKind::kl;
  if (s == "umegaki") return DivergenceKind::umegaki;
  if (s == "quadratic") return DivergenceKind::quadratic;
  if (s == "none") return DivergenceKind::none;
  throw ConfigError("unknown divergence '" + s + "'");
}

DivergenceKind default_divergence(ManifoldKind m) {
  switch (m) {
    case ManifoldKind::simplex: return DivergenceKind::kl;
    case ManifoldKind::su_times_simplex: return DivergenceKind::umegaki;
    case ManifoldKind::euclidean: return DivergenceKind::quadratic;
    case ManifoldKind::pure_states: return DivergenceKind::none;
  }
  return DivergenceKind::none;
}

void check_compatibility(ManifoldKind m, DivergenceKind d) {
  if (d != default_divergence(m))
    throw ConfigError(std::string("divergence '") + divergence_name(d) + "' is not available on manifold '" +
                      manifold_name(m) + "'");
}

std::pair<std::size_t, std::size_t> dimension_range(ManifoldKind m) {
  switch (m) {
    case ManifoldKind::simplex: return {2, 64};
    case ManifoldKind::su_times_simplex: return {2, 6};
    case ManifoldKind::pure_states: return {2, 64};
    case ManifoldKind::euclidean: return {1, 64};
  }
  return {2, 2};
}

Scheme parse_scheme(const std::string& s) {
  if (s == "forward_mode") return Scheme::forward_mode;
  if (s == "richardson_central") return Scheme::richardson_central;
  throw ConfigError("unknown differentiation scheme '" + s + "'");
}

}  // namespace

const char* manifold_name(ManifoldKind m) {
  switch (m) {
    case ManifoldKind::simplex: return "simplex";
    case ManifoldKind::su_times_simplex: return "su_times_simplex";
    case ManifoldKind::pure_states: return "pure_states";
    case ManifoldKind::euclidean: return "euclidean";
  }
  return "?";
}

const char* divergence_name(DivergenceKind d) {
  switch (d) {
    case DivergenceKind::none: return "none";
    case DivergenceKind::kl: return "kl";
    case DivergenceKind::umegaki: return "umegaki";
    case DivergenceKind::quadratic: return "quadratic";
  }
  return "?";
}

const char* format_name(OutputFormat f) { return f == OutputFormat::json ? "json" : "csv"; }

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw ConfigError("unknown output format '" + s + "' (expected json or csv)");
}

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
  reject_unknown(doc,
                 {"manifold", "dimension", "divergence", "points", "scheme", "tolerances", "output_path",
                  "output_format"},
                 "configuration");
  RunConfig cfg;

  if (!doc.contains("manifold") || !doc["manifold"].is_string()) throw ConfigError("'manifold' (string) is required");
  cfg.manifold = parse_manifold(doc["manifold"].get<std::string>());

  if (!doc.contains("dimension")) throw ConfigError("'dimension' is required");
  cfg.dimension = unsigned_integer(doc["dimension"], "dimension");
  const auto [lo, hi] = dimension_range(cfg.manifold);
  if (cfg.dimension < lo || cfg.dimension > hi)
    throw ConfigError("dimension " + std::to_string(cfg.dimension) + " is outside [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "] for manifold '" + manifold_name(cfg.manifold) + "'");

  cfg.divergence = default_divergence(cfg.manifold);
  if (doc.contains("divergence")) {
    if (!doc["divergence"].is_string()) throw ConfigError("'divergence' must be a string");
    cfg.divergence = parse_divergence(doc["divergence"].get<std::string>());
  }
  check_compatibility(cfg.manifold, cfg.divergence);

  if (doc.contains("points")) {
    const json& pts = doc["points"];
    if (pts.is_array()) {
      if (pts.empty()) throw ConfigError("'points' list is empty");
      cfg.explicit_points = pts;
      cfg.count = pts.size();
    } else if (pts.is_object()) {
      reject_unknown(pts, {"random", "count", "seed"}, "points");
      if (pts.contains("random") && !(pts["random"].is_boolean() && pts["random"].get<bool>()))
        throw ConfigError("'points.random' must be true when present");
      if (pts.contains("count")) cfg.count = unsigned_integer(pts["count"], "points.count");
      if (pts.contains("seed")) cfg.seed = unsigned_integer(pts["seed"], "points.seed");
      if (cfg.count == 0 || cfg.count > 100000) throw ConfigError("points.count must be in [1, 100000]");
    } else {
      throw ConfigError("'points' must be a list of points or {count, seed}");
    }
  }

  if (doc.contains("scheme")) {
    const json& s = doc["scheme"];
    if (!s.is_object()) throw ConfigError("'scheme' must be an object");
    reject_unknown(s, {"type", "base_step", "relative_tolerance"}, "scheme");
    if (s.contains("type")) {
      if (!s["type"].is_string()) throw ConfigError("scheme.type must be a string");
      cfg.scheme.scheme = parse_scheme(s["type"].get<std::string>());
    }
    if (s.contains("base_step")) cfg.scheme.base_step = positive_number(s["base_step"], "scheme.base_step");
    if (s.contains("relative_tolerance"))
      cfg.scheme.relative_tolerance = positive_number(s["relative_tolerance"], "scheme.relative_tolerance");
    cfg.scheme.validate();
  }

  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    if (!t.is_object()) throw ConfigError("'tolerances' must be an object");
    reject_unknown(t,
                   {"absolute", "relative", "quantum_relative", "vanishing", "antisymmetry", "duality", "degeneracy",
                    "gradient"},
                   "tolerances");
    auto set = [&](const char* key, double& field) {
      if (t.contains(key)) field = positive_number(t[key], std::string("tolerances.") + key);
    };
    set("absolute", cfg.tolerances.absolute);
    set("relative", cfg.tolerances.relative);
    set("quantum_relative", cfg.tolerances.quantum_relative);
    set("vanishing", cfg.tolerances.vanishing);
    set("antisymmetry", cfg.tolerances.antisymmetry);
    set("duality", cfg.tolerances.duality);
    set("degeneracy", cfg.tolerances.degeneracy);
    set("gradient", cfg.tolerances.gradient);
  }

  if (doc.contains("output_path")) {
    if (!doc["output_path"].is_string() || doc["output_path"].get<std::string>().empty())
      throw ConfigError("'output_path' must be a non-empty string");
    cfg.output_path = doc["output_path"].get<std::string>();
  }
  if (doc.contains("output_format")) {
    if (!doc["output_format"].is_string()) throw ConfigError("'output_format' must be a string");
    cfg.format = parse_format(doc["output_format"].get<std::string>());
  }
  return cfg;
}

RunConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("configuration is not valid JSON: ") + e.what());
  }
  return parse_config(doc);
}

json config_to_json(const RunConfig& cfg) {
  json j;
  j["manifold"] = manifold_name(cfg.manifold);
  j["dimension"] = cfg.dimension;
  j["divergence"] = divergence_name(cfg.divergence);
  if (cfg.has_explicit_points())
    j["points"] = cfg.explicit_points;
  else
    j["points"] = {{"count", cfg.count}, {"seed", cfg.seed}};
  j["scheme"] = {{"type", scheme_name(cfg.scheme.scheme)},
                 {"base_step", cfg.scheme.base_step},
                 {"relative_tolerance", cfg.scheme.relative_tolerance}};
  const Tolerances& t = cfg.tolerances;
  j["tolerances"] = {{"absolute", t.absolute},         {"relative", t.relative},
                     {"quantum_relative", t.quantum_relative}, {"vanishing", t.vanishing},
                     {"antisymmetry", t.antisymmetry}, {"duality", t.duality},
                     {"degeneracy", t.degeneracy},     {"gradient", t.gradient}};
  j["output_format"] = format_name(cfg.format);
  return j;
}

}  // namespace infogeo
