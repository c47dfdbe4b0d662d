#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "json.hpp"
#include "tasep/experiments.hpp"
#include "tasep/random_walk.hpp"
#include "tasep/structure.hpp"

namespace tasep {

inline constexpr int kSchemaVersion = 1;

/// Decimal text with 12 significant digits.
std::string format12(double x);

/// x rounded to 12 significant digits, as a JSON number.
nlohmann::json number12(double x);

nlohmann::json to_json(const ExperimentConfig& cfg);
nlohmann::json to_json(const ExperimentResult& r, bool with_samples = false);
nlohmann::json to_json(const MkGapResult& r);
nlohmann::json to_json(const ExactLaw& law);
nlohmann::json to_json(const LandmarkSet& l);
nlohmann::json to_json(const ExcursionRecord& rec);

/// 64-bit FNV-1a of the compact JSON text, as 16 hex digits.
std::string config_hash(const nlohmann::json& config);

/// CSV with columns value,count preceded by `# config_hash=` and `# seed=` lines.
std::string histogram_csv(std::span<const double> samples, const std::string& hash, std::uint64_t seed);

}  // namespace tasep
