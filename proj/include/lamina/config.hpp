#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "lamina/export.hpp"

namespace lamina {

inline constexpr const char* kConfigEnvVar = "LAMINA_CONFIG";

// Every knob of a CLI run. Empty strings mean "use the law's default".
struct RunConfig {
  std::string law = "rossby";
  int arity = 3;
  std::string signs;
  std::string conservation;
  std::int32_t domain = 14;

  std::string format = "json";
  std::string out;  // empty: stdout

  unsigned workers = 1;
  double prefilter_tolerance = 1e-9;
  std::uint64_t max_table_entries = SearchOptions{}.max_table_entries;
  std::uint64_t max_candidates = SearchOptions{}.max_candidates;

  int quadrature_order = 64;
  double quadrature_tolerance = kQuadratureTolerance;

  double step = kDefaultStep;
  double horizon = kDefaultHorizon;
  std::size_t sample_stride = 100;
  std::string normalization = "orthonormal";

  std::string triad;       // simulate: "m1,n1;m2,n2;m3,n3" or "demo"
  std::string amplitudes = "0.1,0.1,0.1";
  std::string exponent = "-3/2";
  double constant = 1.0;
};

// Overlays a config document:
//   {"law": "drift" | {"name": "power", "exponent": "3/2", "base": "norm"},
//    "condition": {"arity", "signs", "conservation"},
//    "domain": {"bound"},
//    "output": {"format", "path"},
//    "search": {"workers", "prefilter_tolerance", "max_table_entries", "max_candidates"},
//    "quadrature": {"order", "tolerance"},
//    "integrator": {"step", "horizon", "sample_stride", "normalization"},
//    "simulate": {"triad", "amplitudes"},
//    "spectrum": {"exponent", "constant"}}
// Unknown keys and wrongly typed values raise Config.
void apply_config(RunConfig& config, const Json& document);
void apply_config_file(RunConfig& config, const std::string& path);

// Raises Config for non-positive tolerances, bounds or counts and for an
// unknown format or normalization.
void validate_config(const RunConfig& config);

DispersionLaw config_law(const RunConfig& config);
ResonanceCondition config_condition(const RunConfig& config, const DispersionLaw& law);
SearchOptions config_search_options(const RunConfig& config);
LegendreNorm config_normalization(const RunConfig& config);

}  // namespace lamina
