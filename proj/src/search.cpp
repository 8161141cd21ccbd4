#include "lamina/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_map>

#include "lamina/error.hpp"

namespace lamina {

namespace {

using Index = std::uint32_t;
using Tuple = std::array<Index, 4>;

std::int64_t pack_key(std::int64_t x, std::int64_t y) { return x * 4294967296LL + y; }

// Everything both search paths need about the domain's modes.
struct Lattice {
  DispersionLaw law;
  ResonanceCondition condition;
  std::vector<WaveVector> modes;
  std::vector<double> freq;
  std::vector<RadicalNumber> exact;  // empty for FloatLaw
  int degree = 1;
  int positives = 0;

  Lattice(const DispersionLaw& l, const ResonanceCondition& c, const SearchDomain& domain)
      : law(l), condition(c), modes(domain_modes(l, domain)), positives(c.positives()) {
    check_condition(law, condition);
    freq.reserve(modes.size());
    for (const auto& k : modes) freq.push_back(omega_float(law, k));
    if (is_exact(law)) {
      degree = law_degree(law);
      exact.reserve(modes.size());
      for (const auto& k : modes) exact.push_back(omega_exact(law, k));
    }
  }

  // Conserved quantity of mode i, weighted by sign.
  std::int64_t key(Index i, int sign) const {
    const auto& k = modes[i];
    switch (condition.conservation()) {
      case Conservation::FrequencyOnly: return 0;
      case Conservation::FrequencyAndZonal: return pack_key(sign * std::int64_t{k.m}, 0);
      case Conservation::FrequencyAndVector: return pack_key(sign * std::int64_t{k.m}, sign * std::int64_t{k.n});
    }
    return 0;
  }
};

// Canonical form of a candidate tuple, or nothing if the tuple is not an
// admissible solution shape. Exactness is checked by the caller.
std::optional<ResonantSet> admit(const Lattice& lat, const Tuple& idx) {
  const int s = lat.condition.arity();
  const int p = lat.positives;
  const auto& signs = lat.condition.signs();

  std::int64_t key = 0;
  for (int i = 0; i < s; ++i) key += lat.key(idx[i], signs[i]);
  if (key != 0) return std::nullopt;

  if (s == 3) {
    for (int i = 0; i < s; ++i) {
      if (lat.freq[idx[i]] == 0.0) return std::nullopt;
      if (!lat.exact.empty() && lat.exact[idx[i]].is_zero()) return std::nullopt;
    }
    for (int i = 0; i < p; ++i) {
      for (int j = p; j < s; ++j) {
        if (idx[i] == idx[j]) return std::nullopt;
      }
    }
  }

  Tuple sorted = idx;
  std::sort(sorted.begin(), sorted.begin() + p);
  std::sort(sorted.begin() + p, sorted.begin() + s);
  const int r = s - p;
  if (p == r && std::lexicographical_compare(sorted.begin() + p, sorted.begin() + s, sorted.begin(),
                                             sorted.begin() + p)) {
    std::rotate(sorted.begin(), sorted.begin() + p, sorted.begin() + s);
  }

  ResonantSet set;
  set.arity = static_cast<std::uint8_t>(s);
  for (int i = 0; i < s; ++i) {
    set.modes[i] = lat.modes[sorted[i]];
    set.signs[i] = static_cast<std::int8_t>(signs[i]);
  }
  set.symmetric = p == r && std::equal(sorted.begin(), sorted.begin() + p, sorted.begin() + p);
  set.approximate = lat.exact.empty();
  return set;
}

bool exact_zero_by_radical_sum(const Lattice& lat, const Tuple& idx) {
  RadicalSum sum(lat.degree);
  const auto& signs = lat.condition.signs();
  for (int i = 0; i < lat.condition.arity(); ++i) sum.add(lat.exact[idx[i]].scaled(signs[i]));
  return radical_sum_is_zero(sum).zero;
}

// Runs tasks [0, count) on `workers` threads, task t on worker t % workers,
// and rethrows the first failure.
void run_parallel(unsigned workers, std::size_t count, const std::function<void(unsigned, std::size_t)>& task) {
  workers = std::max(1u, workers);
  if (workers == 1) {
    for (std::size_t t = 0; t < count; ++t) task(0, t);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t t = w; t < count; t += workers) task(w, t);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Per-worker output plus a shared candidate budget.
class Collector {
 public:
  Collector(const Lattice& lat, unsigned workers, std::uint64_t budget,
            std::function<bool(const Tuple&)> confirm)
      : lat_(lat), out_(std::max(1u, workers)), budget_(budget), confirm_(std::move(confirm)) {}

  void offer(unsigned worker, const Tuple& idx) {
    std::uint64_t seen = ++candidates_;
    if (seen > budget_)
      fail(ErrorKind::Capacity, "search exceeded the candidate budget of " + std::to_string(budget_) +
                                    " tuples (" + std::to_string(seen) + " seen)");
    auto set = admit(lat_, idx);
    if (!set) return;
    if (!confirm_(idx)) return;
    out_[worker].push_back(*set);
  }

  std::vector<ResonantSet> merge() {
    std::vector<ResonantSet> all;
    std::size_t total = 0;
    for (const auto& v : out_) total += v.size();
    all.reserve(total);
    for (auto& v : out_) {
      all.insert(all.end(), v.begin(), v.end());
      v.clear();
      v.shrink_to_fit();
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
  }

 private:
  const Lattice& lat_;
  std::vector<std::vector<ResonantSet>> out_;
  std::atomic<std::uint64_t> candidates_{0};
  std::uint64_t budget_;
  std::function<bool(const Tuple&)> confirm_;
};

// Sign groups nondecreasing and, for equal-size groups, the first group not
// greater than the second.
bool is_canonical_arrangement(const Lattice& lat, const Tuple& idx) {
  const int s = lat.condition.arity();
  const int p = lat.positives;
  for (int i = 1; i < s; ++i) {
    if (i != p && idx[i - 1] > idx[i]) return false;
  }
  if (2 * p == s && std::lexicographical_compare(idx.begin() + p, idx.begin() + s, idx.begin(), idx.begin() + p))
    return false;
  return true;
}

std::uint64_t pair_count(std::uint64_t n, bool unordered) { return unordered ? n * (n + 1) / 2 : n * n; }

}  // namespace

std::string_view to_string(Conservation c) noexcept {
  switch (c) {
    case Conservation::FrequencyOnly: return "frequency";
    case Conservation::FrequencyAndVector: return "vector";
    case Conservation::FrequencyAndZonal: return "zonal";
  }
  return "?";
}

Conservation parse_conservation(std::string_view text) {
  if (text == "frequency") return Conservation::FrequencyOnly;
  if (text == "vector") return Conservation::FrequencyAndVector;
  if (text == "zonal") return Conservation::FrequencyAndZonal;
  fail(ErrorKind::Config, "unknown conservation '" + std::string(text) + "' (expected frequency|vector|zonal)");
}

Conservation default_conservation(const DispersionLaw& law) noexcept {
  if (std::holds_alternative<RossbySphere>(law)) return Conservation::FrequencyAndZonal;
  if (is_scalar(law)) return Conservation::FrequencyOnly;
  return Conservation::FrequencyAndVector;
}

ResonanceCondition ResonanceCondition::make(std::span<const int> signs, Conservation conservation) {
  if (signs.size() != 3 && signs.size() != 4)
    fail(ErrorKind::Precondition, "resonance arity must be 3 or 4, got " + std::to_string(signs.size()));
  int plus = 0;
  for (int s : canonical_signs(signs)) plus += s > 0;
  int minus = static_cast<int>(signs.size()) - plus;
  if (plus < minus) std::swap(plus, minus);
  ResonanceCondition c;
  c.signs_.assign(static_cast<std::size_t>(plus), 1);
  c.signs_.insert(c.signs_.end(), static_cast<std::size_t>(minus), -1);
  c.conservation_ = conservation;
  return c;
}

ResonanceCondition ResonanceCondition::triad(Conservation conservation) {
  const int s[] = {1, 1, -1};
  return make(s, conservation);
}

ResonanceCondition ResonanceCondition::quartet(Conservation conservation) {
  const int s[] = {1, 1, -1, -1};
  return make(s, conservation);
}

int ResonanceCondition::positives() const noexcept {
  return static_cast<int>(std::count(signs_.begin(), signs_.end(), 1));
}

std::string ResonanceCondition::sign_string() const {
  std::string out;
  for (int s : signs_) out += s > 0 ? '+' : '-';
  return out;
}

std::vector<int> parse_signs(std::string_view text) {
  std::vector<int> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == ',' || ch == ' ') continue;
    if (ch == '+') {
      out.push_back(1);
    } else if (ch == '-' && i + 1 < text.size() && text[i + 1] == '1') {
      out.push_back(-1);
      ++i;
    } else if (ch == '-') {
      out.push_back(-1);
    } else if (ch == '1') {
      out.push_back(1);
    } else {
      fail(ErrorKind::Config, "malformed sign pattern '" + std::string(text) + "'");
    }
  }
  if (out.empty()) fail(ErrorKind::Config, "empty sign pattern");
  return out;
}

void check_condition(const DispersionLaw& law, const ResonanceCondition& condition) {
  if (condition.arity() != 3 && condition.arity() != 4)
    fail(ErrorKind::Precondition, "resonance arity must be 3 or 4");
  if (condition.conservation() == Conservation::FrequencyAndZonal && !std::holds_alternative<RossbySphere>(law))
    fail(ErrorKind::Precondition, "zonal conservation applies to the spherical law only");
}

std::vector<WaveVector> domain_modes(const DispersionLaw& law, const SearchDomain& domain) {
  const std::int32_t d = domain.bound;
  if (d < 1) fail(ErrorKind::Domain, "domain bound must be >= 1, got " + std::to_string(d));
  std::vector<WaveVector> out;
  if (std::holds_alternative<RossbySphere>(law)) {
    for (std::int32_t n = 1; n <= d; ++n) {
      for (std::int32_t m = -n; m <= n; ++m) {
        if (m != 0) out.push_back({m, n});
      }
    }
  } else if (is_scalar(law)) {
    for (std::int32_t k = 1; k <= d; ++k) out.push_back({k, 0});
  } else {
    if (d > 46340) fail(ErrorKind::Capacity, "2-D domain bound " + std::to_string(d) + " is too large");
    for (std::int32_t m = -d; m <= d; ++m) {
      for (std::int32_t n = -d; n <= d; ++n) {
        if (m != 0 || n != 0) out.push_back({m, n});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view to_string(SearchMethod m) noexcept {
  return m == SearchMethod::BruteForce ? "brute-force" : "class-based";
}

// ---------------------------------------------------------------------------
// Brute force.
//
// Positions 0 and 1 always carry +1 (canonical signs have at least two
// pluses). Every unordered pair (i <= j) for those positions is joined
// against a table of the remaining one or two positions, keyed by the
// conserved quantity and sorted by float frequency. Matches within the
// prefilter tolerance are confirmed with exact radical sums.

SearchResult brute_force_search(const DispersionLaw& law, const ResonanceCondition& condition,
                                const SearchDomain& domain, const SearchOptions& options) {
  Lattice lat(law, condition, domain);
  const auto& signs = condition.signs();
  const int s = condition.arity();
  const int rest = s - 2;
  const auto n = static_cast<Index>(lat.modes.size());
  const bool rest_unordered = rest == 2 && signs[2] == signs[3];
  const bool mirror = s == 4 && lat.positives == 2;

  struct Entry {
    std::int64_t key;
    double value;
    Index a, b;
  };
  std::uint64_t entries = rest == 1 ? n : pair_count(n, rest_unordered);
  if (entries > options.max_table_entries)
    fail(ErrorKind::Capacity, "brute-force lookup table needs " + std::to_string(entries) + " entries (limit " +
                                  std::to_string(options.max_table_entries) + ")");
  std::vector<Entry> table;
  table.reserve(entries);
  // Stored negated so a match satisfies left + right == 0.
  if (rest == 1) {
    for (Index i = 0; i < n; ++i) table.push_back({-lat.key(i, signs[2]), -signs[2] * lat.freq[i], i, i});
  } else {
    for (Index i = 0; i < n; ++i) {
      for (Index j = rest_unordered ? i : 0; j < n; ++j) {
        table.push_back({-(lat.key(i, signs[2]) + lat.key(j, signs[3])),
                         -(signs[2] * lat.freq[i] + signs[3] * lat.freq[j]), i, j});
      }
    }
  }
  std::sort(table.begin(), table.end(), [](const Entry& x, const Entry& y) {
    return x.key != y.key ? x.key < y.key : x.value < y.value;
  });

  auto confirm = [&](const Tuple& idx) { return lat.exact.empty() || exact_zero_by_radical_sum(lat, idx); };
  Collector collector(lat, options.workers, options.max_candidates, confirm);
  const double tol = options.prefilter_tolerance;

  run_parallel(options.workers, n, [&](unsigned worker, std::size_t task) {
    const auto i = static_cast<Index>(task);
    for (Index j = i; j < n; ++j) {
      std::int64_t key = lat.key(i, 1) + lat.key(j, 1);
      double value = lat.freq[i] + lat.freq[j];
      auto lo = std::lower_bound(table.begin(), table.end(), std::pair{key, value - tol},
                                 [](const Entry& e, const std::pair<std::int64_t, double>& q) {
                                   return e.key != q.first ? e.key < q.first : e.value < q.second;
                                 });
      for (auto it = lo; it != table.end() && it->key == key && it->value <= value + tol; ++it) {
        if (mirror && std::pair{i, j} > std::pair{std::min(it->a, it->b), std::max(it->a, it->b)}) continue;
        Tuple idx{i, j, it->a, rest == 2 ? it->b : 0};
        collector.offer(worker, idx);
      }
    }
  });

  SearchResult result{law, condition, domain, SearchMethod::BruteForce, collector.merge()};
  return result;
}

// ---------------------------------------------------------------------------
// Class-based search.
//
// Within a class every mode is fixed by its level value: the reduced gamma
// term (gamma or 1/gamma) for radical laws, omega itself for rational laws.
// A tuple resonates iff its modes split into class blocks whose signed
// level sums vanish, each block holding at least two modes since omega is
// never zero. For s = 3 that is one block; for s = 4 it is one block or two
// pairs in different classes.

namespace {

struct Level {
  Rational value;
  std::vector<Index> members;
};

struct ClassBucket {
  ClassId id;
  std::vector<Level> levels;
  std::unordered_map<Rational, std::size_t> by_value;
};

struct ClassIndex {
  std::vector<ClassBucket> buckets;
  std::vector<std::size_t> bucket_of;  // per mode
  std::vector<Rational> coeff;         // exact omega coefficient per mode
};

ClassIndex build_class_index(const Lattice& lat) {
  ClassIndex index;
  std::map<ClassId, std::map<Rational, std::vector<Index>>> grouped;
  std::vector<ClassId> cls(lat.modes.size());
  const bool rational = is_rational_valued(lat.law);
  const GammaForm form = rational ? GammaForm::Linear : gamma_form(lat.law);
  for (Index i = 0; i < lat.modes.size(); ++i) {
    auto membership = classify_mode(lat.law, lat.modes[i]);
    Rational value;
    if (rational) {
      value = lat.exact[i].coeff();
    } else {
      Rational g(static_cast<std::int64_t>(membership.gamma));
      value = form == GammaForm::Reciprocal ? g.reciprocal() : g;
    }
    cls[i] = membership.class_id;
    grouped[membership.class_id][value].push_back(i);
  }
  std::map<ClassId, std::size_t> position;
  for (auto& [id, levels] : grouped) {
    ClassBucket bucket;
    bucket.id = id;
    for (auto& [value, members] : levels) {
      bucket.by_value.emplace(value, bucket.levels.size());
      bucket.levels.push_back({value, std::move(members)});
    }
    position[id] = index.buckets.size();
    index.buckets.push_back(std::move(bucket));
  }
  index.bucket_of.resize(lat.modes.size());
  index.coeff.resize(lat.modes.size());
  for (Index i = 0; i < lat.modes.size(); ++i) {
    index.bucket_of[i] = position[cls[i]];
    index.coeff[i] = lat.exact[i].coeff();
  }
  return index;
}

// Exact per-class residues of a candidate.
bool exact_zero_by_class(const Lattice& lat, const ClassIndex& index, const Tuple& idx) {
  const auto& signs = lat.condition.signs();
  std::array<std::size_t, 4> bucket{};
  std::array<Rational, 4> residue{};
  int used = 0;
  for (int i = 0; i < lat.condition.arity(); ++i) {
    std::size_t b = index.bucket_of[idx[i]];
    int slot = 0;
    while (slot < used && bucket[slot] != b) ++slot;
    if (slot == used) bucket[used++] = b;
    residue[slot] += Rational(signs[i]) * index.coeff[idx[i]];
  }
  for (int k = 0; k < used; ++k) {
    if (!residue[k].is_zero()) return false;
  }
  return true;
}

// Mode pairs drawn from two levels, with their signed conserved key.
struct KeyedPair {
  std::int64_t key;
  Index a, b;
};

void expand_pairs(const Lattice& lat, const Level& la, const Level& lb, int sa, int sb, bool unordered,
                  std::vector<KeyedPair>& out) {
  for (Index a : la.members) {
    for (Index b : lb.members) {
      if (unordered && b < a) continue;
      out.push_back({lat.key(a, sa) + lat.key(b, sb), a, b});
    }
  }
}

}  // namespace

SearchResult class_based_search(const DispersionLaw& law, const ResonanceCondition& condition,
                                const SearchDomain& domain, const SearchOptions& options) {
  if (!is_exact(law)) fail(ErrorKind::NoExactForm, "class-based search needs an exact dispersion law");
  Lattice lat(law, condition, domain);
  const ClassIndex index = build_class_index(lat);
  const auto& signs = condition.signs();
  const int s = condition.arity();
  const int rest = s - 2;
  const bool rest_unordered = rest == 2 && signs[2] == signs[3];
  const bool mirror = s == 4 && lat.positives == 2;

  auto confirm = [&](const Tuple& idx) { return exact_zero_by_class(lat, index, idx); };
  Collector collector(lat, options.workers, options.max_candidates, confirm);

  // Single block: all modes in one class.
  auto single_block = [&](unsigned worker, const ClassBucket& bucket) {
    const auto& levels = bucket.levels;
    const std::size_t L = levels.size();
    // Right-hand level tuples, keyed by the negated signed level sum.
    std::unordered_map<Rational, std::vector<std::pair<std::size_t, std::size_t>>> right;
    for (std::size_t c = 0; c < L; ++c) {
      if (rest == 1) {
        right[-(Rational(signs[2]) * levels[c].value)].push_back({c, c});
        continue;
      }
      for (std::size_t d = rest_unordered ? c : 0; d < L; ++d) {
        right[-(Rational(signs[2]) * levels[c].value + Rational(signs[3]) * levels[d].value)].push_back({c, d});
      }
    }
    std::vector<KeyedPair> left_modes, right_modes;
    std::unordered_map<std::int64_t, std::vector<std::size_t>> right_by_key;
    for (std::size_t a = 0; a < L; ++a) {
      for (std::size_t b = a; b < L; ++b) {
        auto hit = right.find(levels[a].value + levels[b].value);
        if (hit == right.end()) continue;
        left_modes.clear();
        expand_pairs(lat, levels[a], levels[b], 1, 1, a == b, left_modes);
        for (const auto& [c, d] : hit->second) {
          right_modes.clear();
          if (rest == 1) {
            for (Index k : levels[c].members) right_modes.push_back({lat.key(k, signs[2]), k, k});
          } else {
            expand_pairs(lat, levels[c], levels[d], signs[2], signs[3], rest_unordered && c == d, right_modes);
          }
          right_by_key.clear();
          for (std::size_t r = 0; r < right_modes.size(); ++r) right_by_key[-right_modes[r].key].push_back(r);
          for (const auto& lm : left_modes) {
            auto match = right_by_key.find(lm.key);
            if (match == right_by_key.end()) continue;
            for (std::size_t r : match->second) {
              const auto& rm = right_modes[r];
              Tuple idx{lm.a, lm.b, rm.a, rest == 2 ? rm.b : 0};
              if (mirror && std::minmax(lm.a, lm.b) > std::minmax(rm.a, rm.b)) continue;
              collector.offer(worker, idx);
            }
          }
        }
      }
    }
  };

  // Two pairs of positions, each balanced inside its own class.
  struct BlockPattern {
    int p0, p1, q0, q1;
  };
  std::vector<BlockPattern> patterns;
  if (s == 4 && !is_rational_valued(law)) {
    patterns = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  }
  auto balanced_pairs = [&](int pa, int pb) {
    std::vector<std::pair<std::size_t, KeyedPair>> out;  // (bucket, pair)
    std::vector<KeyedPair> scratch;
    for (std::size_t bi = 0; bi < index.buckets.size(); ++bi) {
      const auto& bucket = index.buckets[bi];
      for (std::size_t la = 0; la < bucket.levels.size(); ++la) {
        // signs[pa] * va + signs[pb] * vb == 0
        Rational want = -(Rational(signs[pa] * signs[pb]) * bucket.levels[la].value);
        auto lb = bucket.by_value.find(want);
        if (lb == bucket.by_value.end()) continue;
        scratch.clear();
        expand_pairs(lat, bucket.levels[la], bucket.levels[lb->second], signs[pa], signs[pb], false, scratch);
        for (const auto& kp : scratch) out.push_back({bi, kp});
      }
    }
    return out;
  };

  const std::size_t single_tasks = index.buckets.size();
  std::vector<std::vector<std::pair<std::size_t, KeyedPair>>> first_blocks, second_blocks;
  std::vector<std::unordered_map<std::int64_t, std::vector<std::size_t>>> second_by_key;
  for (const auto& pat : patterns) {
    first_blocks.push_back(balanced_pairs(pat.p0, pat.p1));
    second_blocks.push_back(balanced_pairs(pat.q0, pat.q1));
    std::uint64_t table = first_blocks.back().size() + second_blocks.back().size();
    if (table > options.max_table_entries)
      fail(ErrorKind::Capacity, "class-pair tables need " + std::to_string(table) + " entries");
    auto& keyed = second_by_key.emplace_back();
    for (std::size_t r = 0; r < second_blocks.back().size(); ++r)
      keyed[-second_blocks.back()[r].second.key].push_back(r);
  }
  constexpr std::size_t kChunk = 256;
  std::vector<std::pair<std::size_t, std::size_t>> pair_tasks;  // (pattern, chunk start)
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    for (std::size_t start = 0; start < first_blocks[p].size(); start += kChunk) pair_tasks.push_back({p, start});
  }

  run_parallel(options.workers, single_tasks + pair_tasks.size(), [&](unsigned worker, std::size_t task) {
    if (task < single_tasks) {
      single_block(worker, index.buckets[task]);
      return;
    }
    auto [p, start] = pair_tasks[task - single_tasks];
    const auto& pat = patterns[p];
    const auto& firsts = first_blocks[p];
    const auto& seconds = second_blocks[p];
    for (std::size_t f = start; f < std::min(firsts.size(), start + kChunk); ++f) {
      const auto& [fb, fk] = firsts[f];
      auto match = second_by_key[p].find(fk.key);
      if (match == second_by_key[p].end()) continue;
      for (std::size_t r : match->second) {
        const auto& [sb, sk] = seconds[r];
        if (sb == fb) continue;  // same class: covered by the single-block pass
        Tuple idx{};
        idx[pat.p0] = fk.a;
        idx[pat.p1] = fk.b;
        idx[pat.q0] = sk.a;
        idx[pat.q1] = sk.b;
        // Each canonical tuple matches exactly one pairing pattern, so only
        // canonical arrangements are offered.
        if (!is_canonical_arrangement(lat, idx)) continue;
        collector.offer(worker, idx);
      }
    }
  });

  SearchResult result{law, condition, domain, SearchMethod::ClassBased, collector.merge()};
  return result;
}

// ---------------------------------------------------------------------------

Certificate make_certificate(const DispersionLaw& law, const ResonantSet& set) {
  auto modes = set.mode_span();
  auto signs = set.sign_vector();
  if (!is_exact(law)) {
    double residual = 0;
    for (std::size_t i = 0; i < modes.size(); ++i) residual += signs[i] * omega_float(law, modes[i]);
    return ApproximateResidual{residual};
  }
  if (is_rational_valued(law)) {
    RationalIdentity id;
    for (std::size_t i = 0; i < modes.size(); ++i) {
      id.terms.push_back(Rational(signs[i]) * omega_exact(law, modes[i]).coeff());
      id.residue += id.terms.back();
    }
    return id;
  }
  return PerClassIdentity{split_modes(law, modes, signs)};
}

bool validate_certificate(const DispersionLaw& law, const ResonantSet& set, const Certificate& certificate) {
  if (std::holds_alternative<ApproximateResidual>(certificate)) return false;
  if (!is_exact(law)) return false;
  Certificate fresh = make_certificate(law, set);
  if (fresh != certificate) return false;
  if (const auto* id = std::get_if<RationalIdentity>(&certificate)) {
    Rational total;
    for (const auto& t : id->terms) total += t;
    return total.is_zero() && id->residue.is_zero();
  }
  const auto& per_class = std::get<PerClassIdentity>(certificate);
  // Independent check through the radical sum.
  RadicalSum sum(law_degree(law));
  auto modes = set.mode_span();
  for (std::size_t i = 0; i < modes.size(); ++i) sum.add(omega_exact(law, modes[i]).scaled(set.signs[i]));
  if (!radical_sum_is_zero(sum).zero) return false;
  return std::all_of(per_class.classes.begin(), per_class.classes.end(),
                     [](const PerClassEquation& eq) { return eq.balanced(); });
}

std::vector<WaveVector> nonresonant_census(const SearchResult& result) {
  std::vector<WaveVector> used;
  for (const auto& set : result.solutions) {
    for (const auto& k : set.mode_span()) used.push_back(k);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<WaveVector> out;
  auto all = domain_modes(result.law, result.domain);
  std::set_difference(all.begin(), all.end(), used.begin(), used.end(), std::back_inserter(out));
  return out;
}

std::vector<WaveVector> nonresonant_census(const DispersionLaw& law, const ResonanceCondition& condition,
                                           const SearchDomain& domain, const SearchOptions& options) {
  if (!is_exact(law)) return nonresonant_census(brute_force_search(law, condition, domain, options));
  return nonresonant_census(class_based_search(law, condition, domain, options));
}

SearchDiff diff_solutions(std::span<const ResonantSet> first, std::span<const ResonantSet> second) {
  SearchDiff d;
  std::set_difference(first.begin(), first.end(), second.begin(), second.end(), std::back_inserter(d.only_first));
  std::set_difference(second.begin(), second.end(), first.begin(), first.end(), std::back_inserter(d.only_second));
  return d;
}

}  // namespace lamina
