#include "lamina/config.hpp"

#include <fstream>
#include <initializer_list>
#include <set>

#include "lamina/error.hpp"

namespace lamina {

namespace {

void only_keys(const Json& section, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!section.is_object()) fail(ErrorKind::Config, "config section '" + where + "' must be an object");
  std::set<std::string> names(allowed.begin(), allowed.end());
  for (const auto& [key, value] : section.items()) {
    if (!names.count(key)) fail(ErrorKind::Config, "unknown config key '" + where + (where.empty() ? "" : ".") + key + "'");
  }
}

template <class T>
void read(const Json& section, const char* key, const std::string& where, T& out) {
  if (!section.contains(key)) return;
  const Json& v = section.at(key);
  bool ok = true;
  if constexpr (std::is_same_v<T, std::string>) ok = v.is_string();
  else if constexpr (std::is_floating_point_v<T>) ok = v.is_number();
  else if constexpr (std::is_unsigned_v<T>) ok = v.is_number_unsigned();
  else ok = v.is_number_integer();
  if (!ok) fail(ErrorKind::Config, "config key '" + where + "." + key + "' has the wrong type");
  out = v.get<T>();
}

// Scalar parameters may be written as JSON numbers or strings.
std::string scalar_text(const Json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number()) return format_real(v.get<double>());
  fail(ErrorKind::Config, "law parameter '" + where + "' must be a number or a string");
}

std::string law_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (!v.is_object() || !v.contains("name") || !v.at("name").is_string())
    fail(ErrorKind::Config, "config key 'law' must be a string or an object with a 'name'");
  std::string text = v.at("name").get<std::string>();
  char sep = ':';
  for (const auto& [key, value] : v.items()) {
    if (key == "name") continue;
    text += sep + key + "=" + scalar_text(value, "law." + key);
    sep = ',';
  }
  return text;
}

}  // namespace

void apply_config(RunConfig& c, const Json& doc) {
  only_keys(doc, "", {"law", "condition", "domain", "output", "search", "quadrature", "integrator", "simulate",
                      "spectrum"});
  if (doc.contains("law")) c.law = law_text(doc.at("law"));
  if (doc.contains("condition")) {
    const auto& s = doc.at("condition");
    only_keys(s, "condition", {"arity", "signs", "conservation"});
    read(s, "arity", "condition", c.arity);
    read(s, "signs", "condition", c.signs);
    read(s, "conservation", "condition", c.conservation);
  }
  if (doc.contains("domain")) {
    const auto& s = doc.at("domain");
    only_keys(s, "domain", {"bound"});
    read(s, "bound", "domain", c.domain);
  }
  if (doc.contains("output")) {
    const auto& s = doc.at("output");
    only_keys(s, "output", {"format", "path"});
    read(s, "format", "output", c.format);
    read(s, "path", "output", c.out);
  }
  if (doc.contains("search")) {
    const auto& s = doc.at("search");
    only_keys(s, "search", {"workers", "prefilter_tolerance", "max_table_entries", "max_candidates"});
    read(s, "workers", "search", c.workers);
    read(s, "prefilter_tolerance", "search", c.prefilter_tolerance);
    read(s, "max_table_entries", "search", c.max_table_entries);
    read(s, "max_candidates", "search", c.max_candidates);
  }
  if (doc.contains("quadrature")) {
    const auto& s = doc.at("quadrature");
    only_keys(s, "quadrature", {"order", "tolerance"});
    read(s, "order", "quadrature", c.quadrature_order);
    read(s, "tolerance", "quadrature", c.quadrature_tolerance);
  }
  if (doc.contains("integrator")) {
    const auto& s = doc.at("integrator");
    only_keys(s, "integrator", {"step", "horizon", "sample_stride", "normalization"});
    read(s, "step", "integrator", c.step);
    read(s, "horizon", "integrator", c.horizon);
    read(s, "sample_stride", "integrator", c.sample_stride);
    read(s, "normalization", "integrator", c.normalization);
  }
  if (doc.contains("simulate")) {
    const auto& s = doc.at("simulate");
    only_keys(s, "simulate", {"triad", "amplitudes"});
    read(s, "triad", "simulate", c.triad);
    read(s, "amplitudes", "simulate", c.amplitudes);
  }
  if (doc.contains("spectrum")) {
    const auto& s = doc.at("spectrum");
    only_keys(s, "spectrum", {"exponent", "constant"});
    if (s.contains("exponent")) c.exponent = scalar_text(s.at("exponent"), "spectrum.exponent");
    read(s, "constant", "spectrum", c.constant);
  }
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open config file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Config, "config file '" + path + "' is not valid JSON: " + e.what());
  }
  apply_config(config, doc);
}

void validate_config(const RunConfig& c) {
  if (c.format != "json" && c.format != "csv" && c.format != "dot")
    fail(ErrorKind::Config, "format must be json, csv or dot, got '" + c.format + "'");
  if (c.domain < 1) fail(ErrorKind::Config, "domain bound must be >= 1");
  if (c.workers < 1) fail(ErrorKind::Config, "worker count must be >= 1");
  if (!(c.prefilter_tolerance > 0)) fail(ErrorKind::Config, "prefilter tolerance must be positive");
  if (!(c.quadrature_tolerance > 0)) fail(ErrorKind::Config, "quadrature tolerance must be positive");
  if (c.quadrature_order < 1) fail(ErrorKind::Config, "quadrature order must be positive");
  if (!(c.step > 0)) fail(ErrorKind::Config, "integrator step must be positive");
  if (!(c.horizon > 0)) fail(ErrorKind::Config, "integrator horizon must be positive");
  if (c.sample_stride < 1) fail(ErrorKind::Config, "sample stride must be >= 1");
  if (c.max_table_entries < 1 || c.max_candidates < 1) fail(ErrorKind::Config, "capacity limits must be positive");
  config_normalization(c);
}

DispersionLaw config_law(const RunConfig& config) { return parse_law(config.law); }

ResonanceCondition config_condition(const RunConfig& config, const DispersionLaw& law) {
  Conservation conservation =
      config.conservation.empty() ? default_conservation(law) : parse_conservation(config.conservation);
  if (!config.signs.empty()) {
    auto signs = parse_signs(config.signs);
    if (static_cast<int>(signs.size()) != config.arity)
      fail(ErrorKind::Config, "signs '" + config.signs + "' do not match arity " + std::to_string(config.arity));
    return ResonanceCondition::make(signs, conservation);
  }
  if (config.arity == 3) return ResonanceCondition::triad(conservation);
  if (config.arity == 4) return ResonanceCondition::quartet(conservation);
  fail(ErrorKind::Config, "arity must be 3 or 4, got " + std::to_string(config.arity));
}

SearchOptions config_search_options(const RunConfig& config) {
  SearchOptions o;
  o.workers = config.workers;
  o.prefilter_tolerance = config.prefilter_tolerance;
  o.max_table_entries = config.max_table_entries;
  o.max_candidates = config.max_candidates;
  return o;
}

LegendreNorm config_normalization(const RunConfig& config) {
  if (config.normalization == "ferrers") return LegendreNorm::Ferrers;
  if (config.normalization == "orthonormal") return LegendreNorm::Orthonormal;
  fail(ErrorKind::Config, "normalization must be ferrers or orthonormal, got '" + config.normalization + "'");
}

}  // namespace lamina
