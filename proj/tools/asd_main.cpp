#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "asd/closest.hpp"
#include "asd/ed_stream.hpp"
#include "asd/errors.hpp"
#include "asd/exact.hpp"
#include "asd/harness.hpp"
#include "asd/io.hpp"
#include "asd/lcs_stream.hpp"
#include "asd/padding.hpp"

namespace {

using asd::AlphabetMode;
using asd::MemoryMeter;
using asd::Rational;
using asd::RunReport;

struct CommonOpts {
  std::string offline_path;
  std::string online_path;
  std::string alphabet = "byte";
  std::string out_path;

  AlphabetMode mode() const {
    return alphabet == "int" ? AlphabetMode::kInt : AlphabetMode::kByte;
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--offline", opts.offline_path, "offline (random-access) input file")->required();
  cmd->add_option("--online", opts.online_path, "online (single-pass) input file")->required();
  cmd->add_option("--alphabet", opts.alphabet, "symbol encoding: byte or int")
      ->check(CLI::IsMember({"byte", "int"}));
  cmd->add_option("--out", opts.out_path, "write the report here instead of stdout");
}

void emit(const RunReport& report, const CommonOpts& opts) {
  if (opts.out_path.empty()) {
    std::cout << report.to_json_line() << "\n";
  } else {
    std::ofstream out(opts.out_path);
    if (!out) throw asd::ConfigError("cannot write '" + opts.out_path + "'");
    out << report.to_json_line() << "\n";
  }
}

std::uint64_t enum_budget_from_env() {
  if (const char* env = std::getenv("ASD_MAX_ENUM")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw asd::ConfigError("ASD_MAX_ENUM must be an unsigned integer");
    }
  }
  return asd::kDefaultEnumBudget;
}

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void fill_meter_fields(RunReport& rep, const MemoryMeter& meter) {
  rep.mem_stream = meter.peak(asd::Mem::kStreamBuffer);
  rep.mem_frontier = meter.peak(asd::Mem::kFrontierState);
  rep.mem_scratch = meter.peak(asd::Mem::kScratchOffline);
}

void fill_ratio(RunReport& rep) {
  if (rep.oracle && *rep.oracle > 0)
    rep.ratio = static_cast<double>(rep.estimate) / static_cast<double>(*rep.oracle);
}

std::uint64_t ceil_inverse(Rational delta) {
  return (static_cast<std::uint64_t>(delta.den) + static_cast<std::uint64_t>(delta.num) - 1) /
         static_cast<std::uint64_t>(delta.num);
}

int run_exact(const CommonOpts& opts, const std::string& metric) {
  const auto offline = asd::load_symbols(opts.offline_path, opts.mode());
  const auto online = asd::load_symbols(opts.online_path, opts.mode());
  RunReport rep;
  rep.algo = metric == "lcs" ? "exact-lcs" : "exact-ed";
  rep.n = offline.size();
  rep.n_padded = offline.size();
  Timer timer;
  rep.estimate = metric == "lcs" ? asd::lcs_full(offline, online) : asd::ed_full(offline, online);
  rep.wall_ms = timer.elapsed_ms();
  emit(rep, opts);
  return 0;
}

struct StreamRun {
  asd::OfflineText text;
  asd::OpenedStream opened;
  std::uint64_t n;
};

StreamRun open_run(const CommonOpts& opts) {
  auto offline = asd::load_symbols(opts.offline_path, opts.mode());
  const std::uint64_t n = offline.size();
  if (n == 0) throw asd::DomainError("offline input is empty");
  auto opened = asd::open_online_stream(opts.online_path, opts.mode(), n);
  return StreamRun{asd::OfflineText(std::move(offline)), std::move(opened), n};
}

void finish_run(StreamRun& run) {
  if (run.opened.stream.delivered() != run.opened.stream.length())
    throw asd::ModelViolation("online stream was not fully consumed");
  if (run.opened.source->has_trailing_input())
    throw asd::ModelViolation("offline and online strings must have equal length");
}

std::optional<std::uint64_t> reread_oracle(const CommonOpts& opts,
                                           const std::vector<asd::Symbol>& offline, bool lcs) {
  const auto online = asd::load_symbols(opts.online_path, opts.mode());
  return lcs ? asd::lcs_full(offline, online) : asd::ed_full(offline, online);
}

int run_closest_family(const CommonOpts& opts, bool compose_estimate, Rational delta,
                       const std::string& search, bool force, bool with_oracle) {
  if (!delta.positive() || delta.num > delta.den)
    throw asd::ConfigError("delta must lie in (0, 1]");
  StreamRun run = open_run(opts);
  asd::RecursionConfig cfg = asd::RecursionConfig::for_text(run.text, delta);
  cfg.search = search == "dp" ? asd::MappingSearch::kDp : asd::MappingSearch::kEnumerate;
  cfg.enum_budget = enum_budget_from_env();
  cfg.force = force;

  RunReport rep;
  rep.algo = compose_estimate ? "ed-const" : "closest";
  rep.n = run.n;
  rep.n_padded = run.n;
  rep.delta = delta.to_double();

  MemoryMeter meter;
  Timer timer;
  if (compose_estimate) {
    const asd::EdConstResult res = asd::ed_const_estimate(run.text, run.opened.stream, cfg, meter);
    rep.estimate = res.estimate;
    rep.match_l = res.match.l;
    rep.match_r = res.match.r;
    rep.bound = std::ldexp(1.0, static_cast<int>(ceil_inverse(delta)) + 2) - 1.0;
  } else {
    const asd::ClosestMatch match =
        asd::closest_substring_stream(run.text, run.opened.stream, run.n, cfg, meter);
    rep.estimate = match.d;
    rep.match_l = match.l;
    rep.match_r = match.r;
    rep.bound = std::ldexp(1.0, static_cast<int>(ceil_inverse(delta)) + 1) - 1.0;
  }
  rep.wall_ms = timer.elapsed_ms();
  finish_run(run);
  fill_meter_fields(rep, meter);
  rep.offline_queries = run.text.query_count();
  if (with_oracle && compose_estimate) {
    const auto offline = asd::load_symbols(opts.offline_path, opts.mode());
    rep.oracle = reread_oracle(opts, offline, /*lcs=*/false);
    rep.oracle_reread = true;
  }
  fill_ratio(rep);
  emit(rep, opts);
  return 0;
}

int run_sqrt_family(const CommonOpts& opts, bool lcs, Rational epsilon, bool with_oracle) {
  if (!epsilon.positive() || !epsilon.less_than_one())
    throw asd::ConfigError("epsilon must lie in (0, 1)");
  auto offline = asd::load_symbols(opts.offline_path, opts.mode());
  const std::uint64_t n = offline.size();
  if (n == 0) throw asd::DomainError("offline input is empty");
  const std::uint64_t w = asd::window_size_for(n);
  const asd::PadMode mode = lcs ? asd::PadMode::kLcs : asd::PadMode::kEd;

  asd::OfflineText text = asd::pad_offline(asd::OfflineText(offline), mode, w);
  asd::OpenedStream opened = asd::open_online_stream(opts.online_path, opts.mode(), n);
  asd::OnlineStream padded = asd::pad_online(std::move(opened.stream), mode, w);

  RunReport rep;
  rep.algo = lcs ? "lcs-eps" : "ed-eps";
  rep.n = n;
  rep.n_padded = text.size();
  rep.epsilon = epsilon.to_double();
  rep.bound = lcs ? 1.0 - epsilon.to_double() : 1.0 + 5.0 * epsilon.to_double();

  MemoryMeter meter;
  Timer timer;
  if (lcs) {
    rep.estimate = asd::lcs_eps_estimate(text, padded, epsilon, meter);
  } else {
    const asd::EdEpsResult res = asd::ed_eps_estimate(text, padded, epsilon, meter);
    rep.estimate = res.estimate;
    rep.verified_d = res.verified_d;
  }
  rep.wall_ms = timer.elapsed_ms();
  if (padded.delivered() != padded.length())
    throw asd::ModelViolation("online stream was not fully consumed");
  if (opened.source->has_trailing_input())
    throw asd::ModelViolation("offline and online strings must have equal length");
  fill_meter_fields(rep, meter);
  rep.offline_queries = text.query_count();
  if (with_oracle) {
    rep.oracle = reread_oracle(opts, offline, lcs);
    rep.oracle_reread = true;
  }
  fill_ratio(rep);
  emit(rep, opts);
  return 0;
}

asd::Algo algo_from_name(const std::string& name) {
  if (name == "exact-ed") return asd::Algo::kExactEd;
  if (name == "exact-lcs") return asd::Algo::kExactLcs;
  if (name == "closest") return asd::Algo::kClosest;
  if (name == "ed-const") return asd::Algo::kEdConst;
  if (name == "lcs-eps") return asd::Algo::kLcsEps;
  if (name == "ed-eps") return asd::Algo::kEdEps;
  throw asd::ConfigError("unknown algo '" + name + "'");
}

int run_bench(const std::string& config_path, const std::string& out_path) {
  std::ifstream in(config_path);
  if (!in) throw asd::ConfigError("cannot open '" + config_path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw asd::ConfigError(std::string("bad bench config: ") + e.what());
  }

  asd::SuiteConfig cfg;
  cfg.algo = algo_from_name(j.at("algo").get<std::string>());
  for (const auto& s : j.at("sizes")) cfg.sizes.push_back(s.get<std::uint64_t>());
  if (j.contains("deltas"))
    for (const auto& d : j["deltas"]) cfg.deltas.push_back(Rational::parse(d.get<std::string>()));
  if (j.contains("epsilons"))
    for (const auto& e : j["epsilons"])
      cfg.epsilons.push_back(Rational::parse(e.get<std::string>()));
  cfg.trials = j.value("trials", std::uint64_t{1});
  cfg.alphabet_size = j.value("alphabet", std::uint32_t{4});
  if (j.contains("edits")) cfg.edits = j["edits"].get<std::uint64_t>();
  cfg.seed = j.value("seed", std::uint64_t{1});
  cfg.oracle_threshold = j.value("oracle_threshold", std::uint64_t{256});
  cfg.search = j.value("mapping_search", std::string("enumerate")) == "dp"
                   ? asd::MappingSearch::kDp
                   : asd::MappingSearch::kEnumerate;
  cfg.enum_budget = enum_budget_from_env();
  cfg.force = j.value("force", false);

  const std::vector<RunReport> reports = asd::run_suite(cfg);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw asd::ConfigError("cannot write '" + out_path + "'");
    out = &file;
  }
  for (const RunReport& rep : reports) *out << rep.to_json_line() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"asd: sublinear-memory string similarity in the asymmetric streaming model"};
  app.require_subcommand(1);

  CommonOpts exact_opts;
  std::string metric = "ed";
  CLI::App* exact = app.add_subcommand("exact", "exact ED/LCS reference values");
  add_common(exact, exact_opts);
  exact->add_option("--metric", metric, "ed or lcs")
      ->required()
      ->check(CLI::IsMember({"ed", "lcs"}));

  CommonOpts closest_opts;
  std::string closest_delta = "0.5";
  std::string closest_search = "enumerate";
  bool closest_force = false;
  CLI::App* closest = app.add_subcommand("closest", "approximate closest substring");
  add_common(closest, closest_opts);
  closest->add_option("--delta", closest_delta, "memory exponent in (0, 1]")->required();
  closest->add_option("--mapping-search", closest_search, "enumerate or dp")
      ->check(CLI::IsMember({"enumerate", "dp"}));
  closest->add_flag("--force", closest_force, "override the enumeration budget");

  CommonOpts edconst_opts;
  std::string edconst_delta = "0.5";
  std::string edconst_search = "enumerate";
  bool edconst_force = false;
  bool edconst_oracle = false;
  CLI::App* edconst = app.add_subcommand("ed-const", "constant-factor ED estimate");
  add_common(edconst, edconst_opts);
  edconst->add_option("--delta", edconst_delta, "memory exponent in (0, 1]")->required();
  edconst->add_option("--mapping-search", edconst_search, "enumerate or dp")
      ->check(CLI::IsMember({"enumerate", "dp"}));
  edconst->add_flag("--force", edconst_force, "override the enumeration budget");
  edconst->add_flag("--with-oracle", edconst_oracle, "re-read the online file for a full-DP check");

  CommonOpts lcs_opts;
  std::string lcs_epsilon;
  bool lcs_oracle = false;
  CLI::App* lcseps = app.add_subcommand("lcs-eps", "(1-eps) LCS estimate");
  add_common(lcseps, lcs_opts);
  lcseps->add_option("--epsilon", lcs_epsilon, "accuracy in (0, 1)")->required();
  lcseps->add_flag("--with-oracle", lcs_oracle, "re-read the online file for a full-DP check");

  CommonOpts ed_opts;
  std::string ed_epsilon;
  bool ed_oracle = false;
  CLI::App* edeps = app.add_subcommand("ed-eps", "(1+5*eps) ED estimate");
  add_common(edeps, ed_opts);
  edeps->add_option("--epsilon", ed_epsilon, "accuracy in (0, 1)")->required();
  edeps->add_flag("--with-oracle", ed_oracle, "re-read the online file for a full-DP check");

  std::string bench_config;
  std::string bench_out;
  CLI::App* bench = app.add_subcommand("bench", "run a generated suite from a JSON config");
  bench->add_option("--config", bench_config, "suite configuration file")->required();
  bench->add_option("--out", bench_out, "write JSON lines here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (exact->parsed()) return run_exact(exact_opts, metric);
    if (closest->parsed())
      return run_closest_family(closest_opts, false, Rational::parse(closest_delta),
                                closest_search, closest_force, false);
    if (edconst->parsed())
      return run_closest_family(edconst_opts, true, Rational::parse(edconst_delta), edconst_search,
                                edconst_force, edconst_oracle);
    if (lcseps->parsed())
      return run_sqrt_family(lcs_opts, true, Rational::parse(lcs_epsilon), lcs_oracle);
    if (edeps->parsed())
      return run_sqrt_family(ed_opts, false, Rational::parse(ed_epsilon), ed_oracle);
    if (bench->parsed()) return run_bench(bench_config, bench_out);
  } catch (const asd::ModelViolation& e) {
    std::cerr << "model violation: " << e.what() << "\n";
    return 2;
  } catch (const asd::SinglePassViolation& e) {
    std::cerr << "single-pass violation: " << e.what() << "\n";
    return 2;
  } catch (const asd::TractabilityError& e) {
    std::cerr << "refusing to run: " << e.what() << "\n";
    return 2;
  } catch (const asd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
