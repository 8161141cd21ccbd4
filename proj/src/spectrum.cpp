#include "lamina/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "lamina/error.hpp"

namespace lamina {

SpectrumSeries power_spectrum(std::span<const double> k, const Rational& exponent, double constant) {
  if (!(constant > 0)) fail(ErrorKind::Precondition, "spectrum constant C must be positive");
  SpectrumSeries s{exponent, constant, {}};
  std::vector<double> sorted(k.begin(), k.end());
  std::sort(sorted.begin(), sorted.end());
  for (double x : sorted) {
    if (!(x > 0) || !std::isfinite(x)) fail(ErrorKind::Precondition, "spectrum wavenumbers must be positive");
    s.points.push_back({x, constant * std::pow(x, exponent.to_double()), 1, std::nullopt});
  }
  return s;
}

double spectral_wavenumber(const DispersionLaw& law, const WaveVector& mode) {
  if (std::holds_alternative<RossbySphere>(law)) return mode.n;
  if (is_scalar(law)) return mode.m;
  return std::sqrt(static_cast<double>(mode.norm_squared()));
}

namespace {

// Wavenumbers are grouped by the exact integer they come from so equal
// norms never split on rounding.
std::int64_t spectral_key(const DispersionLaw& law, const WaveVector& mode) {
  if (std::holds_alternative<RossbySphere>(law)) return mode.n;
  if (is_scalar(law)) return mode.m;
  return mode.norm_squared();
}

}  // namespace

SpectrumSeries power_spectrum(const DispersionLaw& law, const SearchDomain& domain, const Rational& exponent,
                              double constant) {
  std::map<std::int64_t, std::pair<double, std::size_t>> groups;
  for (const auto& mode : domain_modes(law, domain)) {
    auto& g = groups[spectral_key(law, mode)];
    g.first = spectral_wavenumber(law, mode);
    ++g.second;
  }
  std::vector<double> k;
  for (const auto& [key, g] : groups) k.push_back(g.first);
  auto s = power_spectrum(k, exponent, constant);
  std::size_t i = 0;
  for (const auto& [key, g] : groups) s.points[i++].modes = g.second;
  return s;
}

void flag_holes(SpectrumSeries& series, const DispersionLaw& law, const SearchDomain& domain,
                const SearchResult* result) {
  if (result == nullptr) fail(ErrorKind::Dependency, "hole flags need a search result");
  if (!(result->law == law) || !(result->domain == domain))
    fail(ErrorKind::Precondition, "search result was computed for a different law or domain");
  std::set<WaveVector> resonant;
  for (const auto& set : result->solutions) resonant.insert(set.modes.begin(), set.modes.begin() + set.arity);
  std::map<std::int64_t, std::pair<double, std::size_t>> counts;
  for (const auto& mode : resonant) {
    auto& c = counts[spectral_key(law, mode)];
    c.first = spectral_wavenumber(law, mode);
    ++c.second;
  }
  for (auto& p : series.points) p.resonant_modes = 0;
  for (const auto& [key, c] : counts) {
    auto it = std::lower_bound(series.points.begin(), series.points.end(), c.first,
                               [](const SpectrumPoint& p, double v) { return p.k < v; });
    if (it != series.points.end() && it->k == c.first) it->resonant_modes = c.second;
  }
}

}  // namespace lamina
