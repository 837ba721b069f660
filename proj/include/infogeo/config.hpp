#pragma once

// Run configuration for the verification suites, parsed from JSON.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "infogeo/core_geometry.hpp"

namespace infogeo {

enum class ManifoldKind { simplex, su_times_simplex, pure_states, euclidean };
enum class DivergenceKind { none, kl, umegaki, quadratic };
enum class OutputFormat { json, csv };

const char* manifold_name(ManifoldKind m);
const char* divergence_name(DivergenceKind d);
const char* format_name(OutputFormat f);

struct Tolerances {
  double absolute = 1e-8;          // absolute floor for derivative-based comparisons
  double relative = 1e-6;          // relative tolerance for derivative-based comparisons
  double quantum_relative = 1e-5;  // full Umegaki metric vs closed form
  double vanishing = 1e-8;         // pulled-back ω, cross/off-diagonal blocks
  double antisymmetry = 1e-9;      // ‖ω + ωᵀ‖
  double duality = 1e-10;          // ‖Θ Xᵀ − I‖
  double degeneracy = 1e-9;        // pure-state kernel directions
  double gradient = 1e-7;          // first Lie derivatives on the diagonal
};

struct RunConfig {
  ManifoldKind manifold = ManifoldKind::simplex;
  std::size_t dimension = 2;
  DivergenceKind divergence = DivergenceKind::kl;
  std::size_t count = 10;       // random points when `explicit_points` is empty
  std::uint64_t seed = 1;
  nlohmann::json explicit_points = nlohmann::json::array();
  DifferentiationConfig scheme{};
  Tolerances tolerances{};
  std::optional<std::string> output_path;
  OutputFormat format = OutputFormat::json;

  bool has_explicit_points() const { return !explicit_points.empty(); }
};

// Throws ConfigError on malformed or inconsistent documents. Unknown keys are
// rejected so typos do not silently fall back to defaults.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig parse_config_text(const std::string& text);

// Echo of the effective configuration (for reports).
nlohmann::json config_to_json(const RunConfig& cfg);

OutputFormat parse_format(const std::string& s);

}  // namespace infogeo
