#include "tasep/serialization.hpp"

#include <cstdio>
#include <sstream>

namespace tasep {

using nlohmann::json;

std::string format12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

json number12(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::stod(format12(x));
}

json to_json(const ExperimentConfig& cfg) {
  return {{"n", cfg.init.n},
          {"scaling", to_string(cfg.init.scaling)},
          {"p", cfg.init.p},
          {"lambda", cfg.init.lambda},
          {"samples", cfg.samples},
          {"seed", cfg.seed},
          {"mode", to_string(cfg.mode)},
          {"subsample_fraction", cfg.subsample_fraction},
          {"reference_paths", cfg.reference_paths},
          {"reference_steps", cfg.reference_steps},
          {"reference_seed", cfg.reference_seed}};
}

json to_json(const ExperimentResult& r, bool with_samples) {
  json estimates = json::object();
  for (const Estimate& e : r.estimates) {
    estimates[e.name] = {{"value", number12(e.value)}, {"standard_error", number12(e.standard_error)}};
  }
  json out = {{"experiment", r.experiment},
              {"config", to_json(r.config)},
              {"density", number12(r.density)},
              {"estimates", estimates},
              {"reference", r.reference},
              {"ks", r.ks ? number12(*r.ks) : json(nullptr)},
              {"simulated", r.simulated},
              {"mismatches", r.mismatches},
              {"wall_seconds", number12(r.wall_seconds)}};
  if (with_samples) {
    json samples = json::array();
    for (double x : r.samples) samples.push_back(number12(x));
    out["samples"] = samples;
  }
  return out;
}

json to_json(const MkGapResult& r) {
  return {{"n", r.n},
          {"density", number12(r.density)},
          {"samples", r.samples},
          {"undefined_M", r.undefined_m},
          {"fallback_K", r.fallback_k},
          {"used", r.gap.count},
          {"mean_gap", number12(r.gap.mean)},
          {"gap_standard_error", number12(r.gap.standard_error)},
          {"mean_gap_over_sqrt_n", number12(r.gap_over_sqrt_n)},
          {"mean_M_over_n", number12(r.m_over_n.mean)},
          {"M_over_n_standard_error", number12(r.m_over_n.standard_error)},
          {"wall_seconds", number12(r.wall_seconds)}};
}

namespace {

json law_json(const std::map<long, double>& law) {
  json out = json::object();
  for (const auto& [k, v] : law) out[std::to_string(k)] = number12(v);
  return out;
}

}  // namespace

json to_json(const ExactLaw& law) {
  json coefficients = json::object();
  for (const auto& [e, row] : law.excess_coefficients) {
    json list = json::array();
    for (const Rational& c : row) list.push_back(std::to_string(c.num) + "/" + std::to_string(c.den));
    coefficients[std::to_string(e)] = list;
  }
  return {{"n", law.n},
          {"p", law.p},
          {"excess", law_json(law.excess)},
          {"T", law_json(law.t_three)},
          {"T2_backbone", law_json(law.t_backbone)},
          {"T2_projected", law_json(law.t_projected)},
          {"excess_coefficients", coefficients}};
}

json to_json(const LandmarkSet& l) {
  const auto opt = [](const std::optional<long>& v) { return v ? json(*v) : json(nullptr); };
  return {{"n", l.n},
          {"L", l.L},
          {"R", l.R},
          {"U", opt(l.U)},
          {"M", opt(l.M())},
          {"levels", l.levels},
          {"K", l.K},
          {"K_fallback", l.k_fallback},
          {"m", l.m ? json(*l.m) : json(nullptr)}};
}

json to_json(const ExcursionRecord& rec) {
  return {{"horizon", rec.horizon}, {"tau", rec.tau},     {"indicators", rec.indicators},
          {"N", rec.N},             {"total", rec.total}, {"lengths", rec.lengths()}};
}

std::string config_hash(const json& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : config.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string histogram_csv(std::span<const double> samples, const std::string& hash, std::uint64_t seed) {
  std::ostringstream os;
  os << "# config_hash=" << hash << "\n# seed=" << seed << "\nvalue,count\n";
  for (const auto& [value, count] : value_counts(std::vector<double>(samples.begin(), samples.end()))) {
    os << format12(value) << ',' << count << '\n';
  }
  return os.str();
}

}  // namespace tasep
