#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lamina/config.hpp"
#include "lamina/error.hpp"
#include "lamina/graph.hpp"

using namespace lamina;

namespace {

struct Flags {
  std::string config_path;
  std::string law, signs, conservation, format, out, triad, amplitudes, normalization, exponent, from;
  int arity = 0, domain = 0, quadrature_order = 0;
  unsigned workers = 0;
  double step = 0, horizon = 0, constant = 0;
  std::size_t stride = 0, index = 0;
  bool oracle = false, verify = false, census = false, holes = false;
};

// Options that override the config file only when given on the command line.
struct Overrides {
  std::vector<std::function<void(RunConfig&)>> apply;

  template <class T>
  CLI::Option* add(CLI::App* app, const std::string& name, T& flag, T RunConfig::*field, const std::string& help) {
    auto* opt = app->add_option(name, flag, help);
    apply.push_back([opt, &flag, field](RunConfig& c) {
      if (opt->count() > 0) c.*field = flag;
    });
    return opt;
  }
};

RunConfig resolve(const Flags& flags, const Overrides& overrides, RunConfig c) {
  std::string path = flags.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv(kConfigEnvVar)) path = env;
  }
  if (!path.empty()) apply_config_file(c, path);
  for (const auto& f : overrides.apply) f(c);
  validate_config(c);
  return c;
}

// Writes to --out, or stdout when no path is set.
void emit(const RunConfig& c, const std::function<void(std::ostream&)>& write) {
  if (c.out.empty() || c.out == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) fail(ErrorKind::Io, "cannot open output file '" + c.out + "'");
  write(file);
  file.flush();
  if (!file) fail(ErrorKind::Io, "failed writing '" + c.out + "'");
}

void emit_json(const RunConfig& c, const Json& j) {
  emit(c, [&](std::ostream& os) { os << j.dump(1) << '\n'; });
}

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed, const char* command) {
  for (const char* f : allowed) {
    if (c.format == f) return;
  }
  fail(ErrorKind::Config, std::string("format '") + c.format + "' is not available for " + command);
}

LoadedSearch load_search(const std::string& path) {
  if (path.empty()) fail(ErrorKind::Dependency, "this command needs a search export (--from)");
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open search export '" + path + "'");
  auto loaded = read_search_json(in);
  for (std::size_t i = 0; i < loaded.result.solutions.size(); ++i) {
    if (!validate_certificate(loaded.result.law, loaded.result.solutions[i], loaded.certificates[i]) &&
        !loaded.result.solutions[i].approximate)
      fail(ErrorKind::InternalInconsistency, "certificate of solution " + std::to_string(i) + " does not validate");
  }
  return loaded;
}

void cmd_classes(const RunConfig& c) {
  require_format(c, {"json"}, "classes");
  emit_json(c, class_table_json(config_law(c), {c.domain}));
}

void cmd_search(const RunConfig& c, const Flags& flags) {
  if (flags.oracle && flags.verify) fail(ErrorKind::Config, "--oracle and --verify are exclusive");
  auto law = config_law(c);
  auto condition = config_condition(c, law);
  auto options = config_search_options(c);
  SearchDomain domain{c.domain};
  SearchResult result;
  if (flags.oracle) {
    result = brute_force_search(law, condition, domain, options);
  } else {
    result = class_based_search(law, condition, domain, options);
    if (flags.verify) {
      auto oracle = brute_force_search(law, condition, domain, options);
      auto diff = diff_solutions(result.solutions, oracle.solutions);
      if (!diff.empty())
        fail(ErrorKind::InternalInconsistency, "class-based and brute-force searches disagree: " +
                                                   std::to_string(diff.only_first.size()) + " only class-based, " +
                                                   std::to_string(diff.only_second.size()) + " only brute-force");
      for (const auto& set : result.solutions) {
        if (!set.approximate && !validate_certificate(law, set, make_certificate(law, set)))
          fail(ErrorKind::InternalInconsistency, "a certificate failed to validate");
      }
      std::cerr << "verify: " << result.solutions.size() << " solutions, class-based and brute-force agree\n";
    }
  }
  if (flags.census) {
    require_format(c, {"json"}, "search --census");
    emit_json(c, census_json(result, nonresonant_census(result)));
    return;
  }
  if (c.format == "json") emit(c, [&](std::ostream& os) { write_search_json(os, result); });
  else if (c.format == "csv") emit(c, [&](std::ostream& os) { write_search_csv(os, result); });
  else emit(c, [&](std::ostream& os) { write_graph_dot(os, build_interaction_graph(result)); });
}

std::array<WaveVector, 3> parse_triad(const std::string& text) {
  if (text.empty() || text == "demo") return kDemoTriad;
  std::array<WaveVector, 3> t{};
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ';')) {
    if (i == 3) fail(ErrorKind::Precondition, "triad selector needs exactly three modes: '" + text + "'");
    int m = 0, n = 0;
    char comma = 0, extra = 0;
    std::stringstream is(item);
    if (!(is >> m >> comma >> n) || comma != ',' || (is >> extra))
      fail(ErrorKind::Precondition, "malformed mode '" + item + "' in triad selector (expected m,n;m,n;m,n)");
    t[i++] = {m, n};
  }
  if (i != 3) fail(ErrorKind::Precondition, "triad selector needs exactly three modes: '" + text + "'");
  return t;
}

Amplitudes parse_amplitudes(const std::string& text) {
  Amplitudes a{};
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i == 3) fail(ErrorKind::Precondition, "initial amplitudes need exactly three values");
    double re = 0, im = 0;
    char colon = 0, extra = 0;
    std::stringstream is(item);
    if (!(is >> re)) fail(ErrorKind::Precondition, "malformed amplitude '" + item + "' (expected re or re:im)");
    if (is >> colon) {
      if (colon != ':' || !(is >> im) || (is >> extra))
        fail(ErrorKind::Precondition, "malformed amplitude '" + item + "' (expected re or re:im)");
    }
    a[i++] = {re, im};
  }
  if (i != 3) fail(ErrorKind::Precondition, "initial amplitudes need exactly three values");
  return a;
}

void cmd_simulate(const RunConfig& c, const Flags& flags) {
  require_format(c, {"json", "csv"}, "simulate");
  std::array<WaveVector, 3> modes;
  if (!flags.from.empty()) {
    auto loaded = load_search(flags.from);
    const auto& sols = loaded.result.solutions;
    if (flags.index >= sols.size())
      fail(ErrorKind::Precondition, "--index " + std::to_string(flags.index) + " is out of range (" +
                                        std::to_string(sols.size()) + " solutions)");
    const auto& set = sols[flags.index];
    if (set.arity != 3) fail(ErrorKind::Precondition, "selected solution is not a triad");
    modes = {set.modes[0], set.modes[1], set.modes[2]};
  } else {
    modes = parse_triad(c.triad);
  }
  auto triad = bve_coefficients(modes, c.quadrature_order, config_normalization(c), c.quadrature_tolerance);
  auto system = bve_system(triad);
  auto trajectory = integrate_triad(system, {parse_amplitudes(c.amplitudes), 0.0}, c.horizon, c.step, c.sample_stride);
  if (c.format == "csv") emit(c, [&](std::ostream& os) { write_trajectory_csv(os, trajectory); });
  else emit_json(c, trajectory_json(triad, system, trajectory));
}

void cmd_spectrum(const RunConfig& c, const Flags& flags) {
  require_format(c, {"json", "csv"}, "spectrum");
  auto law = config_law(c);
  SearchDomain domain{c.domain};
  Rational exponent;
  try {
    exponent = Rational::parse(c.exponent);
  } catch (const Error& e) {
    fail(ErrorKind::Config, std::string("spectrum exponent: ") + e.what());
  }
  auto series = power_spectrum(law, domain, exponent, c.constant);
  if (flags.holes) {
    if (flags.from.empty()) flag_holes(series, law, domain, nullptr);
    auto loaded = load_search(flags.from);
    flag_holes(series, law, domain, &loaded.result);
  }
  if (c.format == "csv") emit(c, [&](std::ostream& os) { write_spectrum_csv(os, series); });
  else emit_json(c, spectrum_json(law, domain, series));
}

void cmd_graph(const RunConfig& c, const Flags& flags) {
  require_format(c, {"dot", "json"}, "graph");
  auto loaded = load_search(flags.from);
  auto graph = build_interaction_graph(loaded.result);
  if (c.format == "dot") {
    emit(c, [&](std::ostream& os) { write_graph_dot(os, graph); });
    return;
  }
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "graph";
  j["law"] = describe_law(loaded.result.law);
  j["nodes"] = graph.nodes.size();
  j["edges"] = graph.edges.size();
  Json clusters = Json::array();
  for (const auto& cl : graph.clusters) {
    if (cl.size() < 2) continue;
    Json members = Json::array();
    for (const auto& k : cl) members.push_back(mode_to_json(k));
    clusters.push_back(members);
  }
  j["clusters"] = clusters;
  Json isolated = Json::array();
  for (const auto& cl : graph.clusters) {
    if (cl.size() == 1) isolated.push_back(mode_to_json(cl.front()));
  }
  j["isolated"] = isolated;
  emit_json(c, j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact search for discrete resonant wave interactions"};
  app.require_subcommand(1);
  Flags flags;
  Overrides overrides;

  auto common = [&](CLI::App* sub, bool search_flags) {
    sub->add_option("--config", flags.config_path, std::string("JSON config file (default: $") + kConfigEnvVar + ")");
    overrides.add(sub, "--law", flags.law, &RunConfig::law, "dispersion law, e.g. drift or power:exponent=3/2,base=norm");
    overrides.add(sub, "--domain", flags.domain, &RunConfig::domain, "lattice bound D");
    overrides.add(sub, "--format", flags.format, &RunConfig::format, "json, csv or dot");
    overrides.add(sub, "--out", flags.out, &RunConfig::out, "output path (default stdout)");
    if (!search_flags) return;
    overrides.add(sub, "--arity", flags.arity, &RunConfig::arity, "3 or 4");
    overrides.add(sub, "--signs", flags.signs, &RunConfig::signs, "sign pattern, e.g. ++- or ++--");
    overrides.add(sub, "--conservation", flags.conservation, &RunConfig::conservation, "frequency, vector or zonal");
    overrides.add(sub, "--workers", flags.workers, &RunConfig::workers, "worker threads");
  };

  auto* classes = app.add_subcommand("classes", "class table of a law over a domain");
  common(classes, false);

  auto* search = app.add_subcommand("search", "enumerate resonant triads or quartets");
  common(search, true);
  search->add_flag("--oracle", flags.oracle, "use the brute-force oracle");
  search->add_flag("--verify", flags.verify, "run both searches and fail on any difference");
  search->add_flag("--census", flags.census, "emit the non-resonant modes instead of the solutions");

  auto* simulate = app.add_subcommand("simulate", "integrate the amplitude equations of a Rossby triad");
  common(simulate, false);
  overrides.add(simulate, "--triad", flags.triad, &RunConfig::triad, "m1,n1;m2,n2;m3,n3 or demo");
  simulate->add_option("--from", flags.from, "search export to pick the triad from");
  simulate->add_option("--index", flags.index, "solution index in --from");
  overrides.add(simulate, "--amplitudes", flags.amplitudes, &RunConfig::amplitudes, "A1,A2,A3 as re or re:im");
  overrides.add(simulate, "--step", flags.step, &RunConfig::step, "RK4 step");
  overrides.add(simulate, "--horizon", flags.horizon, &RunConfig::horizon, "slow-time horizon");
  overrides.add(simulate, "--stride", flags.stride, &RunConfig::sample_stride, "record every n-th step");
  overrides.add(simulate, "--quadrature-order", flags.quadrature_order, &RunConfig::quadrature_order,
                "Gauss-Legendre nodes for Z");
  overrides.add(simulate, "--normalization", flags.normalization, &RunConfig::normalization,
                "Legendre normalization: orthonormal or ferrers");

  auto* spectrum = app.add_subcommand("spectrum", "power-law spectrum over the domain wavenumbers");
  common(spectrum, false);
  overrides.add(spectrum, "--exponent", flags.exponent, &RunConfig::exponent, "rational exponent alpha");
  overrides.add(spectrum, "--constant", flags.constant, &RunConfig::constant, "amplitude C > 0");
  spectrum->add_flag("--holes", flags.holes, "flag wavenumbers with resonant modes (needs --from)");
  spectrum->add_option("--from", flags.from, "search export used for the hole flags");

  auto* graph = app.add_subcommand("graph", "interaction graph of a search export");
  common(graph, false);
  graph->add_option("--from", flags.from, "search export")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    RunConfig base;
    if (graph->parsed()) base.format = "dot";
    RunConfig config = resolve(flags, overrides, base);
    if (classes->parsed()) cmd_classes(config);
    else if (search->parsed()) cmd_search(config, flags);
    else if (simulate->parsed()) cmd_simulate(config, flags);
    else if (spectrum->parsed()) cmd_spectrum(config, flags);
    else cmd_graph(config, flags);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
