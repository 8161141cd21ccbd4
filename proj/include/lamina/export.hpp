#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "lamina/dynamics.hpp"
#include "lamina/graph.hpp"
#include "lamina/search.hpp"
#include "lamina/spectrum.hpp"

namespace lamina {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// 17 significant digits.
std::string format_real(double x);

Json mode_to_json(const WaveVector& k);
WaveVector mode_from_json(const Json& j);

Json certificate_to_json(const Certificate& certificate);
Certificate certificate_from_json(const Json& j);

Json condition_to_json(const ResonanceCondition& condition);
ResonanceCondition condition_from_json(const Json& j);

// {modes, signs, tags, certificate}
Json solution_to_json(const DispersionLaw& law, const ResonantSet& set);

// The solutions array is written one element per line so large results
// stream without building the whole document.
void write_search_json(std::ostream& os, const SearchResult& result);

struct LoadedSearch {
  SearchResult result;
  std::vector<Certificate> certificates;  // parallel to result.solutions
};

// Raises Io on malformed JSON and Config on a schema mismatch.
LoadedSearch read_search_json(std::istream& is);

// One row per solution; quartet columns are left empty for triads.
void write_search_csv(std::ostream& os, const SearchResult& result);

// Undirected graph; edge labels count the sets sharing the edge, and every
// cluster with more than one node becomes a DOT cluster subgraph.
void write_graph_dot(std::ostream& os, const InteractionGraph& graph);

// Kernel -> members sorted by (gamma, mode); a rational-valued law gives
// the single universal class.
Json class_table_json(const DispersionLaw& law, const SearchDomain& domain);

Json census_json(const SearchResult& result, const std::vector<WaveVector>& census);

// Columns T, Re/Im A1..A3, |A1|^2..|A3|^2, I1, I2, drift1, drift2.
void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory);
Json trajectory_json(const BVETriad& triad, const TriadSystem& system, const Trajectory& trajectory);

void write_spectrum_csv(std::ostream& os, const SpectrumSeries& series);
Json spectrum_json(const DispersionLaw& law, const SearchDomain& domain, const SpectrumSeries& series);

}  // namespace lamina
