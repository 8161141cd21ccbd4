#include "lamina/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <tuple>

#include "lamina/classes.hpp"
#include "lamina/error.hpp"

namespace lamina {

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::Config, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Config, std::string("field '") + key + "': " + e.what());
  }
}

Rational rational_from(const Json& j) {
  if (!j.is_string()) fail(ErrorKind::Config, "rational values are stored as \"p/q\" strings");
  return Rational::parse(j.get<std::string>());
}

// Complex numbers are stored as [re, im].
Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json mode_to_json(const WaveVector& k) { return Json::array({k.m, k.n}); }

WaveVector mode_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    fail(ErrorKind::Config, "a mode is stored as [m, n]");
  return {j[0].get<std::int32_t>(), j[1].get<std::int32_t>()};
}

Json certificate_to_json(const Certificate& certificate) {
  Json j;
  if (const auto* r = std::get_if<RationalIdentity>(&certificate)) {
    j["type"] = "rational-identity";
    Json terms = Json::array();
    for (const auto& t : r->terms) terms.push_back(t.str());
    j["terms"] = terms;
    j["residue"] = r->residue.str();
  } else if (const auto* p = std::get_if<PerClassIdentity>(&certificate)) {
    j["type"] = "per-class-identity";
    Json classes = Json::array();
    for (const auto& eq : p->classes) {
      Json c;
      c["kernel"] = eq.class_id.kernel;
      c["degree"] = eq.class_id.degree;
      Json terms = Json::array();
      for (const auto& t : eq.terms) {
        Json term;
        term["weight"] = t.weight.str();
        term["value"] = t.value.str();
        if (t.member) {
          term["mode"] = mode_to_json(t.member->mode);
          term["gamma"] = t.member->gamma;
        }
        terms.push_back(term);
      }
      c["terms"] = terms;
      c["residue"] = eq.residue().str();
      classes.push_back(c);
    }
    j["classes"] = classes;
  } else {
    j["type"] = "approximate";
    j["residual"] = std::get<ApproximateResidual>(certificate).residual;
  }
  return j;
}

Certificate certificate_from_json(const Json& j) {
  auto type = get<std::string>(j, "type");
  if (type == "rational-identity") {
    RationalIdentity r;
    for (const auto& t : get<Json>(j, "terms")) r.terms.push_back(rational_from(t));
    r.residue = rational_from(get<Json>(j, "residue"));
    return r;
  }
  if (type == "per-class-identity") {
    PerClassIdentity p;
    for (const auto& c : get<Json>(j, "classes")) {
      PerClassEquation eq;
      eq.class_id = {get<std::uint64_t>(c, "kernel"), get<int>(c, "degree")};
      for (const auto& t : get<Json>(c, "terms")) {
        ClassTerm term{rational_from(get<Json>(t, "weight")), rational_from(get<Json>(t, "value")), std::nullopt};
        if (t.contains("mode"))
          term.member = ClassMembership{mode_from_json(t.at("mode")), eq.class_id, get<std::uint64_t>(t, "gamma")};
        eq.terms.push_back(term);
      }
      if (rational_from(get<Json>(c, "residue")) != eq.residue())
        fail(ErrorKind::Config, "stored class residue does not match its terms");
      p.classes.push_back(std::move(eq));
    }
    return p;
  }
  if (type == "approximate") return ApproximateResidual{get<double>(j, "residual")};
  fail(ErrorKind::Config, "unknown certificate type '" + type + "'");
}

Json condition_to_json(const ResonanceCondition& condition) {
  Json j;
  j["arity"] = condition.arity();
  j["signs"] = condition.signs();
  j["conservation"] = std::string(to_string(condition.conservation()));
  return j;
}

ResonanceCondition condition_from_json(const Json& j) {
  auto signs = get<std::vector<int>>(j, "signs");
  auto c = ResonanceCondition::make(signs, parse_conservation(get<std::string>(j, "conservation")));
  if (get<int>(j, "arity") != c.arity()) fail(ErrorKind::Config, "condition arity does not match its signs");
  return c;
}

Json solution_to_json(const DispersionLaw& law, const ResonantSet& set) {
  Json j;
  Json modes = Json::array();
  for (const auto& k : set.mode_span()) modes.push_back(mode_to_json(k));
  j["modes"] = modes;
  j["signs"] = set.sign_vector();
  Json tags = Json::array();
  if (set.symmetric) tags.push_back("symmetric");
  if (set.approximate) tags.push_back("approximate");
  j["tags"] = tags;
  j["certificate"] = certificate_to_json(make_certificate(law, set));
  return j;
}

void write_search_json(std::ostream& os, const SearchResult& result) {
  Json head;
  head["schema_version"] = kSchemaVersion;
  head["kind"] = "search";
  head["law"] = describe_law(result.law);
  head["condition"] = condition_to_json(result.condition);
  head["domain"] = {{"bound", result.domain.bound}};
  head["method"] = std::string(to_string(result.method));
  head["count"] = result.solutions.size();
  std::string text = head.dump();
  text.pop_back();  // reopen the object to append the solutions array
  os << text << ",\"solutions\":[";
  for (std::size_t i = 0; i < result.solutions.size(); ++i) {
    os << (i ? ",\n" : "\n") << solution_to_json(result.law, result.solutions[i]).dump();
  }
  os << (result.solutions.empty() ? "]}\n" : "\n]}\n");
}

LoadedSearch read_search_json(std::istream& is) {
  Json j;
  try {
    j = Json::parse(is);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Io, std::string("search export is not valid JSON: ") + e.what());
  }
  if (get<int>(j, "schema_version") != kSchemaVersion)
    fail(ErrorKind::Config, "unsupported schema_version " + std::to_string(get<int>(j, "schema_version")));
  if (get<std::string>(j, "kind") != "search") fail(ErrorKind::Config, "not a search export");
  LoadedSearch out;
  auto& r = out.result;
  r.law = parse_law(get<std::string>(j, "law"));
  r.condition = condition_from_json(get<Json>(j, "condition"));
  r.domain.bound = get<std::int32_t>(get<Json>(j, "domain"), "bound");
  auto method = get<std::string>(j, "method");
  if (method == "brute-force") r.method = SearchMethod::BruteForce;
  else if (method == "class-based") r.method = SearchMethod::ClassBased;
  else fail(ErrorKind::Config, "unknown search method '" + method + "'");
  for (const auto& s : get<Json>(j, "solutions")) {
    ResonantSet set;
    auto modes = get<Json>(s, "modes");
    auto signs = get<std::vector<int>>(s, "signs");
    if (modes.size() != signs.size() || modes.size() < 3 || modes.size() > 4)
      fail(ErrorKind::Config, "solution needs 3 or 4 modes with one sign each");
    set.arity = static_cast<std::uint8_t>(modes.size());
    for (std::size_t i = 0; i < modes.size(); ++i) {
      set.modes[i] = mode_from_json(modes[i]);
      if (signs[i] != 1 && signs[i] != -1) fail(ErrorKind::Config, "signs must be +1 or -1");
      set.signs[i] = static_cast<std::int8_t>(signs[i]);
    }
    for (const auto& tag : get<std::vector<std::string>>(s, "tags")) {
      if (tag == "symmetric") set.symmetric = true;
      else if (tag == "approximate") set.approximate = true;
      else fail(ErrorKind::Config, "unknown solution tag '" + tag + "'");
    }
    r.solutions.push_back(set);
    out.certificates.push_back(certificate_from_json(get<Json>(s, "certificate")));
  }
  if (get<std::size_t>(j, "count") != r.solutions.size())
    fail(ErrorKind::Config, "solution count does not match the solutions array");
  return out;
}

void write_search_csv(std::ostream& os, const SearchResult& result) {
  os << "arity";
  for (int i = 1; i <= 4; ++i) os << ",m" << i << ",n" << i << ",sign" << i;
  os << ",symmetric,certificate,residue\n";
  for (const auto& set : result.solutions) {
    os << int{set.arity};
    for (std::size_t i = 0; i < 4; ++i) {
      if (i < set.arity) os << ',' << set.modes[i].m << ',' << set.modes[i].n << ',' << int{set.signs[i]};
      else os << ",,,";
    }
    auto cert = make_certificate(result.law, set);
    std::string kind, residue;
    if (auto* r = std::get_if<RationalIdentity>(&cert)) {
      kind = "rational-identity";
      residue = r->residue.str();
    } else if (auto* p = std::get_if<PerClassIdentity>(&cert)) {
      kind = "per-class-identity";
      bool zero = std::all_of(p->classes.begin(), p->classes.end(), [](const auto& e) { return e.balanced(); });
      residue = zero ? "0" : "nonzero";
    } else {
      kind = "approximate";
      residue = format_real(std::get<ApproximateResidual>(cert).residual);
    }
    os << ',' << (set.symmetric ? 1 : 0) << ',' << kind << ',' << residue << '\n';
  }
}

void write_graph_dot(std::ostream& os, const InteractionGraph& graph) {
  auto id = [](const WaveVector& k) { return "\"" + k.str() + "\""; };
  os << "graph resonances {\n";
  std::size_t cluster = 0;
  for (const auto& members : graph.clusters) {
    if (members.size() < 2) continue;
    os << "  subgraph cluster_" << cluster++ << " {\n";
    for (const auto& k : members) os << "    " << id(k) << ";\n";
    os << "  }\n";
  }
  for (const auto& members : graph.clusters) {
    if (members.size() == 1) os << "  " << id(members.front()) << ";\n";
  }
  for (const auto& e : graph.edges) os << "  " << id(e.a) << " -- " << id(e.b) << " [label=" << e.sets.size() << "];\n";
  os << "}\n";
}

Json class_table_json(const DispersionLaw& law, const SearchDomain& domain) {
  std::map<ClassId, std::vector<ClassMembership>> classes;
  for (const auto& mode : domain_modes(law, domain)) {
    auto member = classify_mode(law, mode);
    classes[member.class_id].push_back(member);
  }
  Json table = Json::object();
  for (auto& [id, members] : classes) {
    std::sort(members.begin(), members.end(),
              [](const auto& a, const auto& b) { return std::tie(a.gamma, a.mode) < std::tie(b.gamma, b.mode); });
    Json list = Json::array();
    for (const auto& m : members) list.push_back({{"mode", mode_to_json(m.mode)}, {"gamma", m.gamma}});
    table[std::to_string(id.kernel)] = list;
  }
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "classes";
  j["law"] = describe_law(law);
  j["domain"] = {{"bound", domain.bound}};
  j["degree"] = law_degree(law);
  j["classes"] = table;
  return j;
}

Json census_json(const SearchResult& result, const std::vector<WaveVector>& census) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "census";
  j["law"] = describe_law(result.law);
  j["condition"] = condition_to_json(result.condition);
  j["domain"] = {{"bound", result.domain.bound}};
  Json modes = Json::array();
  for (const auto& k : census) modes.push_back(mode_to_json(k));
  j["nonresonant"] = modes;
  return j;
}

namespace {

double invariant(const std::array<double, 3>& c, const Amplitudes& a) {
  return c[0] * std::norm(a[0]) + c[1] * std::norm(a[1]) + c[2] * std::norm(a[2]);
}

}  // namespace

void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory) {
  os << "T,re_A1,im_A1,re_A2,im_A2,re_A3,im_A3,abs2_A1,abs2_A2,abs2_A3,I1,I2,drift_I1,drift_I2\n";
  for (std::size_t s = 0; s < trajectory.samples.size(); ++s) {
    const auto& [T, A] = trajectory.samples[s];
    os << format_real(T);
    for (const auto& z : A) os << ',' << format_real(z.real()) << ',' << format_real(z.imag());
    for (const auto& z : A) os << ',' << format_real(std::norm(z));
    if (trajectory.weights) {
      os << ',' << format_real(invariant(trajectory.weights->first, A)) << ','
         << format_real(invariant(trajectory.weights->second, A)) << ','
         << format_real(trajectory.invariant_drift[s][0]) << ',' << format_real(trajectory.invariant_drift[s][1]);
    } else {
      os << ",,,,";
    }
    os << '\n';
  }
}

Json trajectory_json(const BVETriad& triad, const TriadSystem& system, const Trajectory& trajectory) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "trajectory";
  Json t;
  Json modes = Json::array();
  for (const auto& k : triad.modes) modes.push_back(mode_to_json(k));
  t["modes"] = modes;
  t["N"] = triad.N;
  t["Z"] = triad.Z;
  t["normalization"] = triad.norm == LegendreNorm::Ferrers ? "ferrers" : "orthonormal";
  Json conv = Json::array();
  for (const auto& [order, z] : triad.convergence) conv.push_back({{"order", order}, {"Z", z}});
  t["convergence"] = conv;
  t["integrand_scale"] = triad.integrand_scale;
  j["triad"] = t;
  Json alphas = Json::array();
  for (const auto& a : system.alphas) alphas.push_back(complex_to_json(a));
  j["alphas"] = alphas;
  if (trajectory.weights) j["invariant_weights"] = {trajectory.weights->first, trajectory.weights->second};
  Json samples = Json::array();
  for (std::size_t s = 0; s < trajectory.samples.size(); ++s) {
    const auto& [T, A] = trajectory.samples[s];
    Json row;
    row["T"] = T;
    Json amps = Json::array();
    for (const auto& z : A) amps.push_back(complex_to_json(z));
    row["A"] = amps;
    if (trajectory.weights) {
      row["I"] = {invariant(trajectory.weights->first, A), invariant(trajectory.weights->second, A)};
      row["drift"] = trajectory.invariant_drift[s];
    }
    samples.push_back(row);
  }
  j["samples"] = samples;
  double max_drift = 0;
  for (const auto& d : trajectory.invariant_drift) max_drift = std::max({max_drift, d[0], d[1]});
  j["max_drift"] = max_drift;
  return j;
}

void write_spectrum_csv(std::ostream& os, const SpectrumSeries& series) {
  os << "k,value,modes,resonant_modes,hole\n";
  for (const auto& p : series.points) {
    os << format_real(p.k) << ',' << format_real(p.value) << ',' << p.modes << ',';
    if (p.resonant_modes) os << *p.resonant_modes << ',' << (p.hole() ? 1 : 0);
    else os << ',';
    os << '\n';
  }
}

Json spectrum_json(const DispersionLaw& law, const SearchDomain& domain, const SpectrumSeries& series) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "spectrum";
  j["law"] = describe_law(law);
  j["domain"] = {{"bound", domain.bound}};
  j["exponent"] = series.exponent.str();
  j["constant"] = series.constant;
  Json points = Json::array();
  for (const auto& p : series.points) {
    Json q;
    q["k"] = p.k;
    q["value"] = p.value;
    q["modes"] = p.modes;
    if (p.resonant_modes) {
      q["resonant_modes"] = *p.resonant_modes;
      q["hole"] = p.hole();
    }
    points.push_back(q);
  }
  j["points"] = points;
  return j;
}

}  // namespace lamina
