#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "lamina/classes.hpp"
#include "lamina/dispersion.hpp"

namespace lamina {

enum class Conservation {
  FrequencyOnly,
  FrequencyAndVector,  // sum sigma_i k_i = 0 componentwise
  FrequencyAndZonal,   // sum sigma_i m_i = 0; spherical law only
};

std::string_view to_string(Conservation c) noexcept;
Conservation parse_conservation(std::string_view text);
Conservation default_conservation(const DispersionLaw& law) noexcept;

// Signs are stored canonically: all +1 first, then all -1, with at least as
// many +1 as -1. Any permutation/negation of the same sign multiset maps to
// the same condition.
class ResonanceCondition {
 public:
  ResonanceCondition() = default;
  static ResonanceCondition make(std::span<const int> signs, Conservation conservation);
  static ResonanceCondition triad(Conservation conservation);    // (+,+,-)
  static ResonanceCondition quartet(Conservation conservation);  // (+,+,-,-)

  int arity() const noexcept { return static_cast<int>(signs_.size()); }
  const std::vector<int>& signs() const noexcept { return signs_; }
  int positives() const noexcept;
  Conservation conservation() const noexcept { return conservation_; }
  std::string sign_string() const;  // e.g. "++-"

  friend bool operator==(const ResonanceCondition&, const ResonanceCondition&) = default;

 private:
  std::vector<int> signs_;
  Conservation conservation_ = Conservation::FrequencyOnly;
};

std::vector<int> parse_signs(std::string_view text);

// |m|, |n| <= bound for 2-D laws; n <= bound for the sphere; k <= bound for
// scalar laws.
struct SearchDomain {
  std::int32_t bound = 1;
  friend bool operator==(const SearchDomain&, const SearchDomain&) = default;
};

// All lattice modes of the domain in ascending order.
std::vector<WaveVector> domain_modes(const DispersionLaw& law, const SearchDomain& domain);

// A resonant tuple in canonical form: modes sorted within each sign group,
// and for equal-size groups the smaller group first.
struct ResonantSet {
  std::array<WaveVector, 4> modes{};
  std::array<std::int8_t, 4> signs{};
  std::uint8_t arity = 0;
  bool symmetric = false;    // quartet whose two sides are the same multiset
  bool approximate = false;  // FloatLaw result, no certificate

  std::span<const WaveVector> mode_span() const { return {modes.data(), arity}; }
  std::vector<int> sign_vector() const { return {signs.begin(), signs.begin() + arity}; }

  friend bool operator==(const ResonantSet&, const ResonantSet&) = default;
  friend auto operator<=>(const ResonantSet& a, const ResonantSet& b) {
    return std::tie(a.arity, a.modes, a.signs) <=> std::tie(b.arity, b.modes, b.signs);
  }
};

// Signed omega values and their exact sum, for rational-valued laws.
struct RationalIdentity {
  std::vector<Rational> terms;
  Rational residue;
  friend bool operator==(const RationalIdentity&, const RationalIdentity&) = default;
};

struct PerClassIdentity {
  std::vector<PerClassEquation> classes;
  friend bool operator==(const PerClassIdentity&, const PerClassIdentity&) = default;
};

// Float residual of a FloatLaw tuple; not a proof.
struct ApproximateResidual {
  double residual = 0;
  friend bool operator==(const ApproximateResidual&, const ApproximateResidual&) = default;
};

using Certificate = std::variant<RationalIdentity, PerClassIdentity, ApproximateResidual>;

// Certificates are derived from the set on demand; a quartet search can
// return millions of sets and the per-class term lists would dominate
// memory.
Certificate make_certificate(const DispersionLaw& law, const ResonantSet& set);

// Recomputes every term from the law and checks it against the certificate,
// then checks every residue is zero. An ApproximateResidual never validates.
bool validate_certificate(const DispersionLaw& law, const ResonantSet& set, const Certificate& certificate);

enum class SearchMethod { BruteForce, ClassBased };
std::string_view to_string(SearchMethod m) noexcept;

struct SearchOptions {
  unsigned workers = 1;
  double prefilter_tolerance = 1e-9;
  // Largest lookup table (entries) or candidate list a search may build
  // before raising ErrorKind::Capacity.
  std::uint64_t max_table_entries = 60'000'000;
  std::uint64_t max_candidates = 40'000'000;
};

struct SearchResult {
  DispersionLaw law;
  ResonanceCondition condition;
  SearchDomain domain;
  SearchMethod method = SearchMethod::ClassBased;
  std::vector<ResonantSet> solutions;  // sorted, unique
};

// Exhaustive oracle: every sign-canonical tuple is screened by a float
// frequency join, then confirmed with exact radical arithmetic.
SearchResult brute_force_search(const DispersionLaw& law, const ResonanceCondition& condition,
                                const SearchDomain& domain, const SearchOptions& options = {});

// Buckets modes by class, solves the reduced rational condition over class
// levels, then applies the conservation filter. Returns the same set as
// brute_force_search.
SearchResult class_based_search(const DispersionLaw& law, const ResonanceCondition& condition,
                                const SearchDomain& domain, const SearchOptions& options = {});

// Raises Precondition for zonal conservation off the sphere and for
// arities other than 3 and 4.
void check_condition(const DispersionLaw& law, const ResonanceCondition& condition);

// Domain modes that occur in no solution.
std::vector<WaveVector> nonresonant_census(const SearchResult& result);
std::vector<WaveVector> nonresonant_census(const DispersionLaw& law, const ResonanceCondition& condition,
                                           const SearchDomain& domain, const SearchOptions& options = {});

// Symmetric difference of two solution lists (both sorted).
struct SearchDiff {
  std::vector<ResonantSet> only_first;
  std::vector<ResonantSet> only_second;
  bool empty() const { return only_first.empty() && only_second.empty(); }
};
SearchDiff diff_solutions(std::span<const ResonantSet> first, std::span<const ResonantSet> second);

}  // namespace lamina
