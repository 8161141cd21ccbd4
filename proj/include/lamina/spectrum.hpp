#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lamina/rational.hpp"
#include "lamina/search.hpp"

namespace lamina {

struct SpectrumPoint {
  double k = 0;
  double value = 0;
  std::size_t modes = 0;  // domain modes with this k
  // Filled by flag_holes: how many of those modes take part in a resonance.
  std::optional<std::size_t> resonant_modes;

  bool hole() const { return resonant_modes.value_or(0) > 0; }
};

// C k^alpha over ascending k.
struct SpectrumSeries {
  Rational exponent;
  double constant = 1;
  std::vector<SpectrumPoint> points;
};

// Raises Precondition unless C > 0 and every k > 0.
SpectrumSeries power_spectrum(std::span<const double> k, const Rational& exponent, double constant);

// Lattice k of a mode: |k| for 2-D laws, k for scalar laws, n on the sphere.
double spectral_wavenumber(const DispersionLaw& law, const WaveVector& mode);

// Series over the distinct wavenumbers of the domain.
SpectrumSeries power_spectrum(const DispersionLaw& law, const SearchDomain& domain, const Rational& exponent,
                              double constant);

// Marks the wavenumbers whose modes occur in `result`. A null result raises
// Dependency; a result for another law or domain raises Precondition.
void flag_holes(SpectrumSeries& series, const DispersionLaw& law, const SearchDomain& domain,
                const SearchResult* result);

}  // namespace lamina
