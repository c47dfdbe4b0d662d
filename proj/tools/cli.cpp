#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tasep/dynamics.hpp"
#include "tasep/experiments.hpp"
#include "tasep/random_walk.hpp"
#include "tasep/reference_laws.hpp"
#include "tasep/sampling.hpp"
#include "tasep/serialization.hpp"
#include "tasep/structure.hpp"

namespace tasep::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string input_string;
  std::string input_file;
  std::string output;
  std::string format = "json";
  bool two = false;
  bool three = false;
  bool trajectory = false;
  bool phases = false;
  long steps = 1;
  int threads = 0;
  std::optional<std::uint64_t> seed;

  long n = 0;
  double p = 0.5;
  double lambda = 0.0;
  std::string scaling = "fixed";
  long samples = 1000;
  long count = 1;
  std::string mode;
  double subsample = 0.01;
  long reference_paths = 10000;
  long reference_steps = 10000;
  std::uint64_t reference_seed = 1;
  std::string histogram;
  bool with_samples = false;

  std::string what = "laws";
  long m = 2;
  long max_k = 12;
  long horizon = 1000;
  std::string kind = "argmax";
  long paths = 10000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Writes through a sibling temporary file and renames, so a failed command
/// never leaves a partial artifact behind.
void write_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::invalid_argument("cannot write " + tmp.string());
    f << text;
    if (!f.flush()) throw std::invalid_argument("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::vector<std::string> input_lines(const Options& o) {
  std::vector<std::string> lines;
  if (!o.input_string.empty()) lines.push_back(o.input_string);
  if (!o.input_file.empty()) {
    std::istringstream in(read_file(o.input_file));
    for (std::string line; std::getline(in, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) lines.push_back(line);
    }
  }
  if (lines.empty()) throw std::invalid_argument("no input: give --input-string or --input");
  return lines;
}

InitialCondition initial_condition(const Options& o) {
  InitialCondition ic;
  ic.n = o.n;
  ic.scaling = parse_scaling(o.scaling);
  ic.p = o.p;
  ic.lambda = o.lambda;
  if (ic.n < 1) throw std::invalid_argument("--n must be >= 1");
  ic.density();
  return ic;
}

ExperimentConfig experiment_config(const Options& o, Mode default_mode) {
  ExperimentConfig cfg;
  cfg.init = initial_condition(o);
  cfg.samples = o.samples;
  cfg.seed = *o.seed;
  cfg.mode = o.mode.empty() ? default_mode : parse_mode(o.mode);
  cfg.threads = o.threads;
  cfg.subsample_fraction = o.subsample;
  cfg.reference_paths = o.reference_paths;
  cfg.reference_steps = o.reference_steps;
  cfg.reference_seed = o.reference_seed;
  cfg.validate();
  return cfg;
}

template <class Config>
json evolve_one(const Config& c, long steps) {
  json trajectory = json::array({c.str()});
  Config cur = c;
  for (long k = 0; k < steps; ++k) {
    if constexpr (std::is_same_v<Config, BiString>) cur = step_two(cur);
    else cur = step_three(cur);
    trajectory.push_back(cur.str());
  }
  return {{"input", c.str()}, {"steps", steps}, {"trajectory", trajectory}, {"final", cur.str()}};
}

template <class Outcome>
json outcome_json(const Outcome& r, bool with_trajectory) {
  json j = {{"T", r.steps}, {"final", r.final.str()}};
  if (with_trajectory && r.trajectory) {
    json t = json::array();
    for (const auto& c : *r.trajectory) t.push_back(c.str());
    j["trajectory"] = t;
  }
  return j;
}

json single_or_list(std::vector<json> items) {
  if (items.size() == 1) return std::move(items.front());
  return {{"results", items}};
}

json cmd_evolve(const Options& o) {
  if (o.steps < 0) throw std::invalid_argument("--steps must be >= 0");
  std::vector<json> items;
  for (const std::string& s : input_lines(o)) {
    items.push_back(o.two ? evolve_one(BiString::parse(s), o.steps) : evolve_one(TriString::parse(s), o.steps));
  }
  return single_or_list(std::move(items));
}

json cmd_stabilize(const Options& o) {
  std::vector<json> items;
  for (const std::string& s : input_lines(o)) {
    if (o.two) items.push_back(outcome_json(stabilize_two(BiString::parse(s), o.trajectory), o.trajectory));
    else items.push_back(outcome_json(stabilize_three(TriString::parse(s), o.trajectory), o.trajectory));
  }
  return single_or_list(std::move(items));
}

json cmd_landmarks(const Options& o, std::string& text) {
  std::vector<json> items;
  for (const std::string& s : input_lines(o)) {
    const TriString t = TriString::parse(s);
    const LandmarkSet l = landmarks(t);
    json j = to_json(l);
    if (o.format == "kv") text += to_key_value(l);
    if (o.phases) {
      const PhaseTrace trace = track_phases(t);
      j["phases"] = {{"bulk", trace.count(Phase::bulk)},
                     {"edge", trace.count(Phase::edge)},
                     {"annihilated", trace.count(Phase::annihilated)},
                     {"unexplained", trace.count(Phase::unexplained)}};
      if (o.format == "kv") text += to_key_value(trace);
    }
    items.push_back(j);
  }
  return single_or_list(std::move(items));
}

std::string cmd_sample(const Options& o) {
  const InitialCondition ic = initial_condition(o);
  const double p = ic.density();
  std::ostringstream os;
  os << "# seed=" << *o.seed << " n=" << ic.n << " p=" << format12(p) << " scaling=" << to_string(ic.scaling)
     << " count=" << o.count << (o.three ? " three" : " two") << '\n';
  for (long i = 0; i < o.count; ++i) {
    if (o.three) os << sample_three_with_scp(ic.n, p, *o.seed, std::uint64_t(i)).omega.str() << '\n';
    else os << sample_two(ic.n, p, *o.seed, std::uint64_t(i)).str() << '\n';
  }
  return os.str();
}

json cmd_enumerate(const Options& o) {
  const ExactLaw law = exact_excess_distribution(o.n, o.p);
  json j = to_json(law);
  for (const auto& [e, prob] : law.excess) j["P(E=" + std::to_string(e) + ")"] = number12(prob);
  return j;
}

json cmd_rw(const Options& o, std::string& text) {
  const WalkParams w = o.scaling == "fixed" ? WalkParams::make(o.p) : WalkParams::critical(o.n, o.lambda);
  if (o.what == "pmf") {
    text = pmf_table_csv(w, o.max_k);
    return nullptr;
  }
  if (o.what == "laws") {
    return {{"p", number12(w.p)},
            {"m", o.m},
            {"tail", number12(hitting_tail(w, o.m))},
            {"escape", number12(escape_probability(w))},
            {"gf_at_1", number12(hitting_gf(w, 1.0))},
            {"conditional_hit_probability", number12(conditional_hit_probability(w, o.m))},
            {"conditional_hit_expectation", number12(conditional_hit_expectation(w, o.m))}};
  }
  if (o.what == "chain") {
    const HittingTables tables(w, o.horizon);
    std::vector<ExcursionRecord> records;
    for (long i = 0; i < o.count; ++i) records.push_back(simulate_excursion_chain(tables, *o.seed, std::uint64_t(i)));
    if (o.format == "csv") {
      text = excursion_csv(records);
      return nullptr;
    }
    json list = json::array();
    for (const auto& r : records) list.push_back(to_json(r));
    return {{"p", number12(w.p)}, {"horizon", o.horizon}, {"records", list}};
  }
  if (o.what == "from-string") {
    std::vector<json> items;
    for (const std::string& s : input_lines(o)) {
      const BiString b = BiString::parse(s);
      const LandmarkSet l = landmarks(b);
      json j = to_json(excursion_chain_from_string(b));
      j["M"] = *l.M();
      j["K"] = l.K;
      j["K_fallback"] = l.k_fallback;
      items.push_back(j);
    }
    return single_or_list(std::move(items));
  }
  throw std::invalid_argument("unknown --what: " + o.what);
}

json cmd_brownian(const Options& o) {
  BrownianFunctional kind;
  if (o.kind == "argmax") kind = BrownianFunctional::argmax;
  else if (o.kind == "max_minus_half") kind = BrownianFunctional::max_minus_half;
  else throw std::invalid_argument("unknown --kind: " + o.kind);
  const BrownianSample s = simulate_brownian_functional(o.lambda, kind, o.paths, o.steps, *o.seed, o.threads);
  json j = {{"lambda", o.lambda}, {"kind", o.kind},     {"paths", o.paths},
            {"steps", o.steps},   {"seed", *o.seed},    {"mean", number12(s.mean)},
            {"standard_error", number12(s.standard_error)}};
  if (o.with_samples) {
    json v = json::array();
    for (double x : s.values) v.push_back(number12(x));
    j["samples"] = v;
  }
  return j;
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("--input-string", o.input_string, "configuration as digits");
  sub->add_option("--input", o.input_file, "file with one configuration per line");
}

void add_density(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "string length")->required();
  sub->add_option("--p", o.p, "density of 2s (fixed scaling)");
  sub->add_option("--lambda", o.lambda, "critical window parameter");
  sub->add_option("--scaling", o.scaling, "fixed | critical_plus | critical_minus");
}

void add_experiment(CLI::App* sub, Options& o) {
  add_density(sub, o);
  sub->add_option("--samples", o.samples, "Monte Carlo sample count");
  sub->add_option("--mode", o.mode, "simulate | predicate | both");
  sub->add_option("--subsample", o.subsample, "fraction of predicate samples also simulated");
  sub->add_option("--reference-paths", o.reference_paths);
  sub->add_option("--reference-steps", o.reference_steps);
  sub->add_option("--reference-seed", o.reference_seed);
  sub->add_option("--histogram", o.histogram, "write a value,count CSV here");
  sub->add_flag("--with-samples", o.with_samples, "embed per-sample values");
}

json error_record(const std::string& type, const std::string& message) {
  return {{"schema_version", kSchemaVersion}, {"error", {{"type", type}, {"message", message}}}};
}

}  // namespace

std::vector<std::string> merge_config(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  std::string config_path;
  std::set<std::string> given;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[++i];
      continue;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
      continue;
    }
    if (args[i].rfind("--", 0) == 0) given.insert(args[i].substr(2, args[i].find('=') - 2));
    out.push_back(args[i]);
  }
  if (config_path.empty()) return out;
  std::istringstream in(read_file(config_path));
  long line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    line = line.substr(0, line.find('#'));
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(config_path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    const auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (given.count(key)) continue;
    if (value == "true") {
      out.push_back("--" + key);
    } else if (value != "false") {
      out.push_back("--" + key);
      out.push_back(value);
    }
  }
  return out;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  std::uint64_t seed_value = 0;
  CLI::App app{"Parallel-update TASEP toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  struct Entry {
    const char* name;
    const char* help;
    bool randomized;
  };
  const Entry entries[] = {
      {"evolve", "apply evolution steps", false},
      {"stabilize", "run to the sorted fixed point", false},
      {"landmarks", "L, R, U, M_k, K and phase trace", false},
      {"sample", "draw random configurations", true},
      {"enumerate", "exact laws for small n", false},
      {"mc-t2", "Monte Carlo two-type stabilization time", true},
      {"mc-excess", "Monte Carlo excess", true},
      {"rw", "random-walk hitting laws and excursion chain", true},
      {"brownian-ref", "simulated Brownian reference functional", true},
      {"mk-gap", "Monte Carlo M - K and M/n", true},
  };
  std::map<std::string, CLI::App*> subs;
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("--output", o.output, "write the artifact here instead of stdout");
    sub->add_option("--threads", o.threads, "worker bound (0 = runtime default)");
    if (e.randomized) sub->add_option("--seed", seed_value, "master seed (generated and recorded if absent)");
    subs[e.name] = sub;
  }
  add_input(subs["evolve"], o);
  subs["evolve"]->add_option("--steps", o.steps, "number of steps");
  subs["evolve"]->add_flag("--two", o.two, "binary alphabet");
  subs["evolve"]->add_flag("--three", o.three, "ternary alphabet (default)");

  add_input(subs["stabilize"], o);
  subs["stabilize"]->add_flag("--two", o.two, "binary alphabet");
  subs["stabilize"]->add_flag("--three", o.three, "ternary alphabet (default)");
  subs["stabilize"]->add_flag("--trajectory", o.trajectory, "include every intermediate configuration");

  add_input(subs["landmarks"], o);
  subs["landmarks"]->add_flag("--phases", o.phases, "track maxima through the evolution");
  subs["landmarks"]->add_option("--format", o.format, "json | kv");

  add_density(subs["sample"], o);
  subs["sample"]->add_option("--count", o.count, "number of configurations");
  subs["sample"]->add_flag("--three", o.three, "add the second class particle");

  subs["enumerate"]->add_option("--n", o.n, "string length (<= 14)")->required();
  subs["enumerate"]->add_option("--p", o.p, "density of 2s");

  add_experiment(subs["mc-t2"], o);
  add_experiment(subs["mc-excess"], o);

  CLI::App* rw = subs["rw"];
  rw->add_option("--what", o.what, "pmf | laws | chain | from-string");
  rw->add_option("--p", o.p, "probability of a -1 step");
  rw->add_option("--n", o.n, "n for the critical parameter");
  rw->add_option("--lambda", o.lambda, "critical window parameter");
  rw->add_option("--scaling", o.scaling, "fixed | critical");
  rw->add_option("--m", o.m, "time horizon of the hitting laws");
  rw->add_option("--max-k", o.max_k, "last k of the pmf table");
  rw->add_option("--horizon", o.horizon, "excursion chain horizon");
  rw->add_option("--count", o.count, "number of chains");
  rw->add_option("--format", o.format, "json | csv");
  add_input(rw, o);

  CLI::App* bm = subs["brownian-ref"];
  bm->add_option("--lambda", o.lambda, "drift");
  bm->add_option("--kind", o.kind, "argmax | max_minus_half");
  bm->add_option("--paths", o.paths, "number of paths");
  bm->add_option("--steps", o.steps, "grid size")->default_val(10000);
  bm->add_flag("--with-samples", o.with_samples, "embed per-path values");

  add_density(subs["mk-gap"], o);
  subs["mk-gap"]->add_option("--samples", o.samples, "Monte Carlo sample count");

  std::vector<std::string> args;
  try {
    args = merge_config(raw_args);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    out << error_record("usage", e.what()).dump() << '\n';
    return invalid_input;
  } catch (const std::exception& e) {
    out << error_record("config", e.what()).dump() << '\n';
    return invalid_input;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  const CLI::Option* seed_opt = chosen->get_option_no_throw("--seed");
  if (seed_opt) {
    if (seed_opt->count() == 0) {
      std::random_device rd;
      seed_value = (std::uint64_t(rd()) << 32) | rd();
      args.push_back("--seed");
      args.push_back(std::to_string(seed_value));
    }
    o.seed = seed_value;
  }

  int status = ok;
  try {
    json artifact;
    std::string text;
    if (name == "evolve") artifact = cmd_evolve(o);
    else if (name == "stabilize") artifact = cmd_stabilize(o);
    else if (name == "landmarks") artifact = cmd_landmarks(o, text);
    else if (name == "sample") text = cmd_sample(o);
    else if (name == "enumerate") artifact = cmd_enumerate(o);
    else if (name == "mc-t2" || name == "mc-excess") {
      const bool t2 = name == "mc-t2";
      const ExperimentConfig cfg = experiment_config(o, t2 ? Mode::simulate : Mode::predicate);
      const ExperimentResult r = t2 ? run_stabilization_experiment(cfg) : run_excess_experiment(cfg);
      artifact = to_json(r, o.with_samples);
      artifact["config_hash"] = config_hash(artifact["config"]);
      if (!o.histogram.empty()) {
        write_atomically(o.histogram, histogram_csv(r.samples, artifact["config_hash"], cfg.seed));
      }
      if (r.mismatches > 0) {
        err << "predicate/simulation mismatch on " << r.mismatches << " samples\n";
        status = internal_mismatch;
      }
    } else if (name == "rw") artifact = cmd_rw(o, text);
    else if (name == "brownian-ref") artifact = cmd_brownian(o);
    else if (name == "mk-gap") {
      ExperimentConfig cfg = experiment_config(o, Mode::simulate);
      artifact = to_json(estimate_mk_gap(cfg));
      artifact["config"] = to_json(cfg);
      artifact["config_hash"] = config_hash(artifact["config"]);
    }

    std::string payload;
    if (!artifact.is_null() && text.empty()) {
      artifact["schema_version"] = kSchemaVersion;
      artifact["invocation"] = {{"command", name}, {"args", args}};
      if (o.seed) artifact["seed"] = *o.seed;
      payload = artifact.dump() + "\n";
    } else {
      payload = text;
    }
    if (o.output.empty()) out << payload;
    else write_atomically(o.output, payload);
  } catch (const DensityError& e) {
    out << error_record("density", e.what()).dump() << '\n';
    return invalid_input;
  } catch (const ParseError& e) {
    out << error_record("parse", e.what()).dump() << '\n';
    return invalid_input;
  } catch (const ScopeError& e) {
    out << error_record("scope", e.what()).dump() << '\n';
    return invalid_input;
  } catch (const std::exception& e) {
    out << error_record("invalid_argument", e.what()).dump() << '\n';
    return invalid_input;
  }
  return status;
}

}  // namespace tasep::cli
