#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trevhc/planted.hpp"

namespace trevhc {

enum class Method { adds3_al, adds4_al, cosine_al };

std::string method_name(Method method);
Method parse_method(const std::string& name);

// One row per (config point, trial, method). wall_ms is 0 unless timing was
// requested, so identically seeded runs produce byte-identical CSVs.
struct ResultRow {
  std::string experiment;
  std::string method;
  int n = 0;
  double param = 0;  // separation for sweeps, sampling probability p for recovery
  std::int64_t num_comparisons = 0;
  double flip_prob = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::int64_t revenue = 0;
  std::string revenue_kind;
  std::optional<double> aari;
  std::optional<double> ratio_to_latent;
  std::int64_t wall_ms = 0;
};

struct SweepConfig {
  PlantedParams planted;                    // separation is overridden per point
  std::vector<double> separations = {0.15};
  std::vector<std::int64_t> budgets = {};   // sampled comparisons per point
  double flip_prob = 0.0;
  int trials = 10;
  std::uint64_t base_seed = 0;
  std::vector<Method> methods = {Method::adds3_al};
  int jobs = 1;
  bool record_timing = false;

  void validate() const;
};

struct RecoveryConfig {
  int n = 64;
  double p = 0.5;          // per-pair inclusion probability, in (0, 1]
  double flip_prob = 0.0;
  int trials = 10;
  std::uint64_t base_seed = 0;
  bool brute_force = false;  // additionally reports the exhaustive maximizer
  int oracle_cap = 9;
  int jobs = 1;
  bool record_timing = false;

  void validate() const;
};

// Planted sweep: per point and trial, draw the planted similarity, sample
// comparisons (optionally flipped), run each method, and score the tree's
// revenue against the sampled comparison set plus its AARI against the
// planted tree.
std::vector<ResultRow> run_planted_sweep(const SweepConfig& config);

// Latent recovery: per trial, draw a random latent tree, Bernoulli-sample
// its triplet pairs (optionally flipped), run AddS3-AL (and the brute-force
// maximizer when requested), and report revenue against the full latent set
// together with the ratio to the latent tree's revenue.
std::vector<ResultRow> run_latent_recovery(const RecoveryConfig& config);

std::string results_csv(std::span<const ResultRow> rows);
void write_results_csv(const std::filesystem::path& path, std::span<const ResultRow> rows);

}  // namespace trevhc
