#include "asd/harness.hpp"

#include <chrono>
#include <cmath>

#include <nlohmann/json.hpp>

#include "asd/ed_stream.hpp"
#include "asd/errors.hpp"
#include "asd/exact.hpp"
#include "asd/lcs_stream.hpp"
#include "asd/padding.hpp"

namespace asd {

Instance generate_instance(const InstanceSpec& spec) {
  if (spec.alphabet_size == 0) throw ConfigError("alphabet must have at least one symbol");
  if (spec.edits > spec.n) throw ConfigError("edit count must not exceed the length");
  SplitMix64 rng(spec.seed);
  Instance inst;
  inst.offline.reserve(spec.n);
  for (std::uint64_t i = 0; i < spec.n; ++i)
    inst.offline.push_back(Symbol{static_cast<std::uint32_t>(rng.next_below(spec.alphabet_size))});
  inst.online = inst.offline;
  for (std::uint64_t e = 0; e < spec.edits; ++e) {
    const std::uint64_t op = rng.next_below(3);
    if (op == 0) {  // substitute
      const std::uint64_t pos = rng.next_below(spec.n);
      inst.online[pos] = Symbol{static_cast<std::uint32_t>(rng.next_below(spec.alphabet_size))};
    } else if (op == 1) {  // insert, then trim the tail to keep length n
      const std::uint64_t pos = rng.next_below(spec.n + 1);
      const Symbol c{static_cast<std::uint32_t>(rng.next_below(spec.alphabet_size))};
      inst.online.insert(inst.online.begin() + static_cast<std::ptrdiff_t>(pos), c);
      inst.online.pop_back();
    } else {  // delete, then pad the tail
      const std::uint64_t pos = rng.next_below(spec.n);
      inst.online.erase(inst.online.begin() + static_cast<std::ptrdiff_t>(pos));
      inst.online.push_back(Symbol{static_cast<std::uint32_t>(rng.next_below(spec.alphabet_size))});
    }
  }
  return inst;
}

const char* algo_name(Algo algo) {
  switch (algo) {
    case Algo::kExactEd: return "exact-ed";
    case Algo::kExactLcs: return "exact-lcs";
    case Algo::kClosest: return "closest";
    case Algo::kEdConst: return "ed-const";
    case Algo::kLcsEps: return "lcs-eps";
    case Algo::kEdEps: return "ed-eps";
  }
  return "?";
}

std::string RunReport::to_json_line() const {
  nlohmann::ordered_json j;
  j["algo"] = algo;
  j["n"] = n;
  j["n_padded"] = n_padded;
  j["delta"] = delta ? nlohmann::ordered_json(*delta) : nlohmann::ordered_json(nullptr);
  j["epsilon"] = epsilon ? nlohmann::ordered_json(*epsilon) : nlohmann::ordered_json(nullptr);
  j["estimate"] = estimate;
  j["oracle"] = oracle ? nlohmann::ordered_json(*oracle) : nlohmann::ordered_json(nullptr);
  j["ratio"] = ratio ? nlohmann::ordered_json(*ratio) : nlohmann::ordered_json(nullptr);
  j["bound"] = bound ? nlohmann::ordered_json(*bound) : nlohmann::ordered_json(nullptr);
  j["mem_stream"] = mem_stream;
  j["mem_frontier"] = mem_frontier;
  j["mem_scratch"] = mem_scratch;
  j["offline_queries"] = offline_queries;
  j["wall_ms"] = wall_ms;
  j["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
  j["prng"] = prng;
  if (match_l) j["l"] = *match_l;
  if (match_r) j["r"] = *match_r;
  if (verified_d) j["d_verified"] = *verified_d;
  if (oracle_reread) j["oracle_reread"] = *oracle_reread;
  if (error) j["error"] = *error;
  return j.dump();
}

namespace {

std::uint64_t ceil_inverse(Rational delta) {
  // ceil(1 / (p/q)) = ceil(q / p)
  return (static_cast<std::uint64_t>(delta.den) + static_cast<std::uint64_t>(delta.num) - 1) /
         static_cast<std::uint64_t>(delta.num);
}

double closest_bound(Rational delta) {
  return std::ldexp(1.0, static_cast<int>(ceil_inverse(delta)) + 1) - 1.0;  // 2^(ceil(1/d)+1) - 1
}

double ed_const_bound(Rational delta) {
  return std::ldexp(1.0, static_cast<int>(ceil_inverse(delta)) + 2) - 1.0;  // 2^(ceil(1/d)+2) - 1
}

void require_single_pass(const OnlineStream& stream) {
  if (stream.delivered() != stream.length())
    throw Error("run finished without consuming the online stream exactly once");
}

}  // namespace

RunReport run_one(const Instance& instance, const RunParams& params,
                  std::optional<std::uint64_t> seed) {
  const std::uint64_t n = instance.offline.size();
  if (instance.online.size() != n)
    throw ModelViolation("offline and online strings must have equal length");

  RunReport rep;
  rep.algo = algo_name(params.algo);
  rep.n = n;
  rep.n_padded = n;
  rep.seed = seed;

  MemoryMeter meter;
  std::uint64_t queries = 0;
  const auto t0 = std::chrono::steady_clock::now();

  switch (params.algo) {
    case Algo::kExactEd:
      rep.estimate = ed_full(instance.offline, instance.online);
      break;
    case Algo::kExactLcs:
      rep.estimate = lcs_full(instance.offline, instance.online);
      break;
    case Algo::kClosest: {
      OfflineText text(instance.offline);
      OnlineStream stream{std::vector<Symbol>(instance.online)};
      RecursionConfig cfg = RecursionConfig::for_text(text, params.delta);
      cfg.search = params.search;
      cfg.enum_budget = params.enum_budget;
      cfg.force = params.force;
      const ClosestMatch match = closest_substring_stream(text, stream, n, cfg, meter);
      require_single_pass(stream);
      rep.estimate = match.d;
      rep.match_l = match.l;
      rep.match_r = match.r;
      rep.delta = params.delta.to_double();
      rep.bound = closest_bound(params.delta);
      if (params.with_oracle) rep.oracle = closest_substring_brute(text, instance.online).d;
      queries = text.query_count();
      break;
    }
    case Algo::kEdConst: {
      OfflineText text(instance.offline);
      OnlineStream stream{std::vector<Symbol>(instance.online)};
      RecursionConfig cfg = RecursionConfig::for_text(text, params.delta);
      cfg.search = params.search;
      cfg.enum_budget = params.enum_budget;
      cfg.force = params.force;
      const EdConstResult res = ed_const_estimate(text, stream, cfg, meter);
      require_single_pass(stream);
      rep.estimate = res.estimate;
      rep.match_l = res.match.l;
      rep.match_r = res.match.r;
      rep.delta = params.delta.to_double();
      rep.bound = ed_const_bound(params.delta);
      if (params.with_oracle) rep.oracle = ed_full(instance.offline, instance.online);
      queries = text.query_count();
      break;
    }
    case Algo::kLcsEps: {
      PaddedPair pair = pad_pair(instance.offline, instance.online, PadMode::kLcs,
                                 window_size_for(n));
      rep.n_padded = pair.padded_n;
      rep.estimate = lcs_eps_estimate(pair.offline, pair.online, params.epsilon, meter);
      require_single_pass(pair.online);
      rep.epsilon = params.epsilon.to_double();
      rep.bound = 1.0 - params.epsilon.to_double();
      if (params.with_oracle) rep.oracle = lcs_full(instance.offline, instance.online);
      queries = pair.offline.query_count();
      break;
    }
    case Algo::kEdEps: {
      PaddedPair pair =
          pad_pair(instance.offline, instance.online, PadMode::kEd, window_size_for(n));
      rep.n_padded = pair.padded_n;
      const EdEpsResult res = ed_eps_estimate(pair.offline, pair.online, params.epsilon, meter);
      require_single_pass(pair.online);
      rep.estimate = res.estimate;
      rep.verified_d = res.verified_d;
      rep.epsilon = params.epsilon.to_double();
      rep.bound = 1.0 + 5.0 * params.epsilon.to_double();
      if (params.with_oracle) rep.oracle = ed_full(instance.offline, instance.online);
      queries = pair.offline.query_count();
      break;
    }
  }

  const auto t1 = std::chrono::steady_clock::now();
  rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  rep.mem_stream = meter.peak(Mem::kStreamBuffer);
  rep.mem_frontier = meter.peak(Mem::kFrontierState);
  rep.mem_scratch = meter.peak(Mem::kScratchOffline);
  rep.offline_queries = queries;
  if (rep.oracle && *rep.oracle > 0)
    rep.ratio = static_cast<double>(rep.estimate) / static_cast<double>(*rep.oracle);
  return rep;
}

std::vector<RunReport> run_suite(const SuiteConfig& config) {
  const bool uses_delta = config.algo == Algo::kClosest || config.algo == Algo::kEdConst;
  std::vector<Rational> params = uses_delta ? config.deltas : config.epsilons;
  if (config.algo == Algo::kExactEd || config.algo == Algo::kExactLcs)
    params = {Rational::make(1, 2)};  // unused placeholder
  if (params.empty()) throw ConfigError("suite needs at least one parameter value");
  if (config.sizes.empty()) throw ConfigError("suite needs at least one size");

  std::vector<RunReport> reports;
  for (std::uint64_t size : config.sizes) {
    for (std::size_t pi = 0; pi < params.size(); ++pi) {
      for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
        SplitMix64 mix(config.seed ^ (size << 32) ^ (static_cast<std::uint64_t>(pi) << 16) ^
                       trial);
        InstanceSpec spec{size, config.alphabet_size,
                          std::min(size, config.edits.value_or(size / 8)), mix.next()};
        RunParams rp;
        rp.algo = config.algo;
        if (uses_delta)
          rp.delta = params[pi];
        else
          rp.epsilon = params[pi];
        rp.search = config.search;
        rp.enum_budget = config.enum_budget;
        rp.force = config.force;
        rp.with_oracle = size <= config.oracle_threshold;
        try {
          reports.push_back(run_one(generate_instance(spec), rp, spec.seed));
        } catch (const Error& err) {
          RunReport rep;
          rep.algo = algo_name(config.algo);
          rep.n = size;
          rep.n_padded = size;
          rep.seed = spec.seed;
          if (uses_delta)
            rep.delta = params[pi].to_double();
          else
            rep.epsilon = params[pi].to_double();
          rep.error = err.what();
          reports.push_back(std::move(rep));
        }
      }
    }
  }
  return reports;
}

}  // namespace asd
