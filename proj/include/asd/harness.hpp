#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asd/closest.hpp"
#include "asd/rational.hpp"
#include "asd/symbol.hpp"

namespace asd {

/// SplitMix64: the fixed, widely specified generator behind every seeded
/// instance, so instances are reproducible across implementations. Bounded
/// draws use plain modulo reduction.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

inline constexpr const char* kPrngName = "splitmix64";

struct InstanceSpec {
  std::uint64_t n = 0;
  std::uint32_t alphabet_size = 4;
  std::uint64_t edits = 0;
  std::uint64_t seed = 0;
};

struct Instance {
  std::vector<Symbol> offline;
  std::vector<Symbol> online;
};

/// Offline is uniform over the alphabet; online starts as a copy and takes
/// `edits` random single-character edits (substitute, insert-then-trim,
/// delete-then-pad, chosen uniformly), keeping length n.
Instance generate_instance(const InstanceSpec& spec);

enum class Algo { kExactEd, kExactLcs, kClosest, kEdConst, kLcsEps, kEdEps };

const char* algo_name(Algo algo);

/// One run's record. Serialized with exactly these field names: algo, n,
/// n_padded, delta, epsilon, estimate, oracle, ratio, bound, mem_stream,
/// mem_frontier, mem_scratch, offline_queries, wall_ms, seed, prng.
struct RunReport {
  std::string algo;
  std::uint64_t n = 0;
  std::uint64_t n_padded = 0;
  std::optional<double> delta;
  std::optional<double> epsilon;
  std::uint64_t estimate = 0;
  std::optional<std::uint64_t> oracle;
  std::optional<double> ratio;  // estimate / oracle when oracle > 0
  std::optional<double> bound;  // proven factor for the configuration
  std::uint64_t mem_stream = 0;
  std::uint64_t mem_frontier = 0;
  std::uint64_t mem_scratch = 0;
  std::uint64_t offline_queries = 0;
  double wall_ms = 0.0;
  std::optional<std::uint64_t> seed;
  std::string prng = kPrngName;

  // Extra, subcommand-specific fields (absent when not meaningful).
  std::optional<std::uint64_t> match_l;
  std::optional<std::uint64_t> match_r;
  std::optional<std::uint64_t> verified_d;
  std::optional<bool> oracle_reread;
  std::optional<std::string> error;

  std::string to_json_line() const;
};

struct RunParams {
  Algo algo = Algo::kExactEd;
  Rational delta = Rational::make(1, 2);
  Rational epsilon = Rational::make(1, 4);
  MappingSearch search = MappingSearch::kEnumerate;
  std::uint64_t enum_budget = kDefaultEnumBudget;
  bool force = false;
  bool with_oracle = false;
};

/// Runs one algorithm over an in-memory instance with metering and optional
/// full-DP oracle comparison.
RunReport run_one(const Instance& instance, const RunParams& params,
                  std::optional<std::uint64_t> seed);

struct SuiteConfig {
  Algo algo = Algo::kEdConst;
  std::vector<std::uint64_t> sizes;
  std::vector<Rational> deltas;    // used by closest / ed-const
  std::vector<Rational> epsilons;  // used by lcs-eps / ed-eps
  std::uint64_t trials = 1;
  std::uint32_t alphabet_size = 4;
  std::optional<std::uint64_t> edits;  // default n/8
  std::uint64_t seed = 1;
  std::uint64_t oracle_threshold = 256;
  MappingSearch search = MappingSearch::kEnumerate;
  std::uint64_t enum_budget = kDefaultEnumBudget;
  bool force = false;
};

/// Per-trial seeds derive deterministically from (suite seed, size,
/// parameter index, trial), so reports are stable under re-run. Guard
/// violations become per-run report entries with an error field, not aborts.
std::vector<RunReport> run_suite(const SuiteConfig& config);

}  // namespace asd
