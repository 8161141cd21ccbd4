#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "lamina/config.hpp"
#include "lamina/export.hpp"
#include "support.hpp"

namespace lamina {
namespace {

TEST(Json, ModeAndConditionRoundTrip) {
  WaveVector k{-3, 7};
  EXPECT_EQ(mode_to_json(k).dump(), "[-3,7]");
  EXPECT_EQ(mode_from_json(mode_to_json(k)), k);
  EXPECT_LAMINA_ERROR(mode_from_json(Json::parse("[1]")), ErrorKind::Config);
  EXPECT_LAMINA_ERROR(mode_from_json(Json::parse("\"x\"")), ErrorKind::Config);

  for (auto c : {ResonanceCondition::triad(Conservation::FrequencyAndZonal),
                 ResonanceCondition::quartet(Conservation::FrequencyAndVector),
                 ResonanceCondition::make(std::vector<int>{1, 1, 1, -1}, Conservation::FrequencyOnly)}) {
    EXPECT_EQ(condition_from_json(condition_to_json(c)), c);
  }
}

TEST(Json, CertificatesRoundTrip) {
  const DispersionLaw rossby = RossbySphere{};
  const DispersionLaw gravity = GravityNormRoot{};
  auto r = class_based_search(rossby, ResonanceCondition::triad(Conservation::FrequencyAndZonal), {14});
  auto g = class_based_search(gravity, ResonanceCondition::quartet(Conservation::FrequencyAndVector), {6});
  ASSERT_FALSE(r.solutions.empty());
  ASSERT_FALSE(g.solutions.empty());
  for (const auto* res : {&r, &g}) {
    for (std::size_t i = 0; i < res->solutions.size(); i += 7) {
      auto cert = make_certificate(res->law, res->solutions[i]);
      auto back = certificate_from_json(certificate_to_json(cert));
      ASSERT_EQ(back, cert);
      ASSERT_TRUE(validate_certificate(res->law, res->solutions[i], back));
    }
  }
  Certificate approx = ApproximateResidual{1.5e-13};
  EXPECT_EQ(certificate_from_json(certificate_to_json(approx)), approx);
}

TEST(Json, SearchExportRoundTrip) {
  const DispersionLaw law = GravityNormRoot{};
  auto r = class_based_search(law, ResonanceCondition::quartet(Conservation::FrequencyAndVector), {5});
  std::stringstream ss;
  write_search_json(ss, r);
  auto j = Json::parse(ss.str());
  EXPECT_EQ(j.begin().key(), "schema_version");
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["count"], r.solutions.size());

  ss.seekg(0);
  auto loaded = read_search_json(ss);
  EXPECT_EQ(loaded.result.law, r.law);
  EXPECT_EQ(loaded.result.condition, r.condition);
  EXPECT_EQ(loaded.result.domain, r.domain);
  EXPECT_EQ(loaded.result.method, r.method);
  EXPECT_EQ(loaded.result.solutions, r.solutions);
  ASSERT_EQ(loaded.certificates.size(), r.solutions.size());
  for (std::size_t i = 0; i < r.solutions.size(); ++i)
    ASSERT_EQ(loaded.certificates[i], make_certificate(law, r.solutions[i]));

  // Writing again gives the same bytes.
  std::stringstream again;
  write_search_json(again, loaded.result);
  EXPECT_EQ(again.str(), ss.str());
}

TEST(Json, ReaderRejectsBadInput) {
  std::stringstream bad("{not json");
  EXPECT_LAMINA_ERROR(read_search_json(bad), ErrorKind::Io);
  std::stringstream wrong_version(R"({"schema_version": 2, "kind": "search"})");
  EXPECT_LAMINA_ERROR(read_search_json(wrong_version), ErrorKind::Config);
  std::stringstream wrong_kind(R"({"schema_version": 1, "kind": "classes"})");
  EXPECT_LAMINA_ERROR(read_search_json(wrong_kind), ErrorKind::Config);
}

TEST(Csv, OneRowPerSolution) {
  const DispersionLaw law = RossbySphere{};
  auto r = class_based_search(law, ResonanceCondition::triad(Conservation::FrequencyAndZonal), {14});
  std::stringstream ss;
  write_search_csv(ss, r);
  std::string line;
  std::getline(ss, line);
  EXPECT_EQ(line, "arity,m1,n1,sign1,m2,n2,sign2,m3,n3,sign3,m4,n4,sign4,symmetric,certificate,residue");
  std::size_t rows = 0;
  bool found = false;
  while (std::getline(ss, line)) {
    ++rows;
    if (line.rfind("3,4,12,1,5,14,1,9,13,-1,,,,", 0) == 0) {
      found = true;
      EXPECT_NE(line.find("rational-identity,0"), std::string::npos) << line;
    }
  }
  EXPECT_EQ(rows, r.solutions.size());
  EXPECT_TRUE(found);
}

TEST(Dot, ListsEveryNodeAndEdge) {
  const DispersionLaw law = RossbySphere{};
  auto r = class_based_search(law, ResonanceCondition::triad(Conservation::FrequencyAndZonal), {10});
  auto g = build_interaction_graph(r);
  std::stringstream ss;
  write_graph_dot(ss, g);
  auto text = ss.str();
  EXPECT_EQ(text.rfind("graph", 0), 0u);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = text.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
  EXPECT_EQ(edges, g.edges.size());
}

TEST(ClassTable, DriftClasses) {
  auto j = class_table_json(DriftInverseNorm{}, {20});
  EXPECT_EQ(j["kind"], "classes");
  const auto& classes = j["classes"];
  ASSERT_TRUE(classes.contains("5"));
  EXPECT_FALSE(classes.contains("3"));
  std::set<std::string> members;
  for (const auto& e : classes["5"]) members.insert(e["mode"].dump());
  for (const char* k : {"[1,2]", "[2,1]", "[3,6]", "[6,3]"}) EXPECT_TRUE(members.count(k)) << k;
  // Members ordered by gamma.
  std::uint64_t last = 0;
  for (const auto& e : classes["5"]) {
    auto gamma = e["gamma"].get<std::uint64_t>();
    EXPECT_GE(gamma, last);
    last = gamma;
  }
}

TEST(ClassTable, RationalLawHasOneClass) {
  auto j = class_table_json(RossbySphere{}, {10});
  ASSERT_EQ(j["classes"].size(), 1u);
  EXPECT_TRUE(j["classes"].contains("1"));
  EXPECT_EQ(j["classes"]["1"].size(), domain_modes(RossbySphere{}, {10}).size());
}

TEST(Census, JsonShape) {
  const DispersionLaw law = CapillaryScalar{};
  auto r = class_based_search(law, ResonanceCondition::triad(Conservation::FrequencyAndVector), {50});
  auto j = census_json(r, nonresonant_census(r));
  EXPECT_EQ(j["nonresonant"].size(), 50u);
}

TEST(Spectrum, Examples) {
  std::vector<double> k{1, 4, 9};
  auto s = power_spectrum(k, Rational(-3, 2), 1.0);
  ASSERT_EQ(s.points.size(), 3u);
  EXPECT_DOUBLE_EQ(s.points[0].value, 1.0);
  EXPECT_DOUBLE_EQ(s.points[1].value, 0.125);
  EXPECT_NEAR(s.points[2].value, 1.0 / 27, 1e-16);

  auto flat = power_spectrum(k, Rational(0), 2.5);
  for (const auto& p : flat.points) EXPECT_EQ(p.value, 2.5);

  std::vector<double> unsorted{9, 1, 4};
  auto sorted = power_spectrum(unsorted, Rational(-3, 2), 1.0);
  EXPECT_EQ(sorted.points[0].k, 1.0);
  EXPECT_EQ(sorted.points[2].k, 9.0);

  std::vector<double> with_zero{0, 1};
  EXPECT_LAMINA_ERROR(power_spectrum(with_zero, Rational(-3, 2), 1.0), ErrorKind::Precondition);
  EXPECT_LAMINA_ERROR(power_spectrum(k, Rational(-3, 2), 0.0), ErrorKind::Precondition);
  EXPECT_LAMINA_ERROR(power_spectrum(k, Rational(-3, 2), -1.0), ErrorKind::Precondition);
}

TEST(Spectrum, ScalesAsPowerLaw) {
  std::vector<double> k;
  for (int i = 1; i <= 50; ++i) k.push_back(i * 0.7);
  for (auto alpha : {Rational(-5, 3), Rational(-3), Rational(1, 2)}) {
    auto s = power_spectrum(k, alpha, 3.0);
    for (std::size_t i = 1; i < s.points.size(); ++i) {
      double slope = std::log(s.points[i].value / s.points[i - 1].value) / std::log(s.points[i].k / s.points[i - 1].k);
      ASSERT_NEAR(slope, alpha.to_double(), 1e-9);
    }
  }
}

TEST(Spectrum, DomainWavenumbers) {
  EXPECT_EQ(spectral_wavenumber(RossbySphere{}, {3, 7}), 7.0);
  EXPECT_EQ(spectral_wavenumber(CapillaryScalar{}, {5, 0}), 5.0);
  EXPECT_EQ(spectral_wavenumber(DriftInverseNorm{}, {3, 4}), 5.0);

  auto s = power_spectrum(RossbySphere{}, {5}, Rational(-3), 1.0);
  ASSERT_EQ(s.points.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(s.points[i].k, i + 1.0);
    EXPECT_EQ(s.points[i].modes, 2 * (i + 1));
  }
  // (3,4) and (4,3) and (0,5) share |k| = 5.
  auto d = power_spectrum(DriftInverseNorm{}, {5}, Rational(-3), 1.0);
  std::size_t total = 0;
  for (const auto& p : d.points) total += p.modes;
  EXPECT_EQ(total, domain_modes(DriftInverseNorm{}, {5}).size());
}

TEST(Spectrum, Holes) {
  const DispersionLaw cap = CapillaryScalar{};
  auto r = class_based_search(cap, ResonanceCondition::triad(Conservation::FrequencyAndVector), {200});
  auto s = power_spectrum(cap, {200}, Rational(-3, 2), 1.0);
  flag_holes(s, cap, {200}, &r);
  for (const auto& p : s.points) {
    ASSERT_TRUE(p.resonant_modes.has_value());
    ASSERT_FALSE(p.hole());
  }

  const DispersionLaw rossby = RossbySphere{};
  auto rr = class_based_search(rossby, ResonanceCondition::triad(Conservation::FrequencyAndZonal), {14});
  auto rs = power_spectrum(rossby, {14}, Rational(-3), 1.0);
  flag_holes(rs, rossby, {14}, &rr);
  EXPECT_TRUE(rs.points[11].hole());  // n = 12
  EXPECT_TRUE(rs.points[13].hole());  // n = 14
  EXPECT_FALSE(rs.points[0].hole());  // n = 1 cannot resonate

  EXPECT_LAMINA_ERROR(flag_holes(rs, rossby, {14}, nullptr), ErrorKind::Dependency);
  EXPECT_LAMINA_ERROR(flag_holes(rs, rossby, {13}, &rr), ErrorKind::Precondition);
  EXPECT_LAMINA_ERROR(flag_holes(rs, cap, {14}, &rr), ErrorKind::Precondition);

  auto j = spectrum_json(rossby, {14}, rs);
  EXPECT_EQ(j["points"][11]["hole"], true);
  EXPECT_EQ(j["exponent"], "-3");
}

TEST(Config, AppliesSections) {
  RunConfig c;
  apply_config(c, Json::parse(R"({
    "law": {"name": "power", "exponent": "3/2", "base": "scalar"},
    "condition": {"arity": 4, "conservation": "vector"},
    "domain": {"bound": 25},
    "output": {"format": "csv", "path": "x.csv"},
    "search": {"workers": 3},
    "integrator": {"step": 0.002, "horizon": 5},
    "spectrum": {"exponent": "-5/3", "constant": 2}
  })"));
  EXPECT_EQ(c.arity, 4);
  EXPECT_EQ(c.domain, 25);
  EXPECT_EQ(c.format, "csv");
  EXPECT_EQ(c.out, "x.csv");
  EXPECT_EQ(c.workers, 3u);
  EXPECT_EQ(c.step, 0.002);
  EXPECT_EQ(c.horizon, 5.0);
  EXPECT_EQ(c.exponent, "-5/3");
  EXPECT_EQ(c.constant, 2.0);
  auto law = config_law(c);
  ASSERT_TRUE(std::holds_alternative<PowerLaw>(law));
  EXPECT_EQ(std::get<PowerLaw>(law).exponent, Rational(3, 2));
  EXPECT_EQ(config_condition(c, law), ResonanceCondition::quartet(Conservation::FrequencyAndVector));
  EXPECT_NO_THROW(validate_config(c));
}

TEST(Config, RejectsUnknownKeysAndTypes) {
  RunConfig c;
  EXPECT_LAMINA_ERROR(apply_config(c, Json::parse(R"({"lawz": "rossby"})")), ErrorKind::Config);
  EXPECT_LAMINA_ERROR(apply_config(c, Json::parse(R"({"domain": {"bound": "big"}})")), ErrorKind::Config);
  EXPECT_LAMINA_ERROR(apply_config(c, Json::parse(R"({"search": {"threads": 2}})")), ErrorKind::Config);
  EXPECT_LAMINA_ERROR(apply_config(c, Json::parse("[1, 2]")), ErrorKind::Config);
  EXPECT_LAMINA_ERROR(apply_config_file(c, "/nonexistent/lamina.json"), ErrorKind::Io);

  RunConfig bad;
  bad.domain = 0;
  EXPECT_LAMINA_ERROR(validate_config(bad), ErrorKind::Config);
  bad = RunConfig{};
  bad.format = "xml";
  EXPECT_LAMINA_ERROR(validate_config(bad), ErrorKind::Config);
  bad = RunConfig{};
  bad.normalization = "schmidt";
  EXPECT_LAMINA_ERROR(validate_config(bad), ErrorKind::Config);
}

TEST(Config, LawDefaults) {
  RunConfig c;
  c.law = "gravity";
  auto law = config_law(c);
  EXPECT_EQ(config_condition(c, law).conservation(), Conservation::FrequencyAndVector);
  c.law = "rossby";
  EXPECT_EQ(config_condition(c, config_law(c)).conservation(), Conservation::FrequencyAndZonal);
  c.signs = "+-+";
  EXPECT_EQ(config_condition(c, config_law(c)).sign_string(), "++-");
}

TEST(ExitCodes, DistinctAndReserved) {
  std::set<int> codes;
  for (auto k : {ErrorKind::Domain, ErrorKind::Overflow, ErrorKind::MixedDegree, ErrorKind::NoExactForm,
                 ErrorKind::Precondition, ErrorKind::Capacity, ErrorKind::Accuracy, ErrorKind::Divergence,
                 ErrorKind::UnsupportedStructure, ErrorKind::NotApplicable, ErrorKind::Dependency,
                 ErrorKind::InternalInconsistency, ErrorKind::Config, ErrorKind::Io}) {
    int c = exit_code(k);
    EXPECT_GT(c, 2);
    EXPECT_TRUE(codes.insert(c).second) << to_string(k);
  }
  EXPECT_EQ(exit_code(ErrorKind::Precondition), 8);
}

}  // namespace
}  // namespace lamina
