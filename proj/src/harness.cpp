#include "trevhc/harness.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "trevhc/comparisons.hpp"
#include "trevhc/evaluation.hpp"
#include "trevhc/linkage.hpp"
#include "trevhc/objective.hpp"
#include "trevhc/oracle.hpp"

namespace trevhc {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// Runs tasks 0..count-1 on up to jobs threads. Each task writes only its own
// output slots, so scheduling cannot affect results.
void run_tasks(std::size_t count, int jobs, const std::function<void(std::size_t)>& task) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t index = 0; index < count; ++index) task(index);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t index = next.fetch_add(1);
        if (index >= count) return;
        try {
          task(index);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::string format_value(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string method_name(Method method) {
  switch (method) {
    case Method::adds3_al: return "adds3-al";
    case Method::adds4_al: return "adds4-al";
    case Method::cosine_al: return "cosine-al";
  }
  fail("unknown method");
}

Method parse_method(const std::string& name) {
  if (name == "adds3-al") return Method::adds3_al;
  if (name == "adds4-al") return Method::adds4_al;
  if (name == "cosine-al") return Method::cosine_al;
  fail("unknown method '" + name + "' (expected adds3-al, adds4-al or cosine-al)");
}

void SweepConfig::validate() const {
  planted.validate();
  if (separations.empty()) fail("sweep: at least one separation value required");
  for (double sep : separations)
    if (!(sep > 0)) fail("sweep: separations must be > 0");
  if (budgets.empty()) fail("sweep: at least one comparison budget required");
  const std::int64_t n = planted.n();
  const std::int64_t tri_space = n >= 3 ? n * (n - 1) * (n - 2) / 2 : 0;
  const std::int64_t pairs = n * (n - 1) / 2;
  const std::int64_t quad_space = pairs * (pairs - 1) / 2;
  for (std::int64_t m : budgets) {
    if (m < 0) fail("sweep: negative budget");
    for (Method method : methods) {
      if (method != Method::adds4_al && m > tri_space) fail("sweep: budget exceeds the triplet space");
      if (method == Method::adds4_al && m > quad_space) fail("sweep: budget exceeds the quadruplet space");
    }
  }
  if (flip_prob < 0 || flip_prob > 1) fail("sweep: flip probability must be in [0, 1]");
  if (trials < 1) fail("sweep: trials must be >= 1");
  if (methods.empty()) fail("sweep: at least one method required");
  if (jobs < 1) fail("sweep: jobs must be >= 1");
}

void RecoveryConfig::validate() const {
  if (n < 3) fail("recovery: n must be >= 3");
  if (!(p > 0) || p > 1) fail("recovery: p must be in (0, 1]");
  if (flip_prob < 0 || flip_prob > 1) fail("recovery: flip probability must be in [0, 1]");
  if (trials < 1) fail("recovery: trials must be >= 1");
  if (jobs < 1) fail("recovery: jobs must be >= 1");
  if (brute_force && n > oracle_cap)
    fail("recovery: brute force requested but n exceeds the oracle cap");
}

std::vector<ResultRow> run_planted_sweep(const SweepConfig& config) {
  config.validate();
  const int n = config.planted.n();
  const std::size_t points = config.separations.size() * config.budgets.size();
  const std::size_t methods = config.methods.size();
  const std::size_t tasks = points * static_cast<std::size_t>(config.trials);
  std::vector<ResultRow> rows(tasks * methods);

  bool needs_triplets = false;
  bool needs_quadruplets = false;
  for (Method method : config.methods) {
    if (method == Method::adds4_al)
      needs_quadruplets = true;
    else
      needs_triplets = true;
  }

  run_tasks(tasks, config.jobs, [&](std::size_t task) {
    const std::size_t point = task / config.trials;
    const int trial = static_cast<int>(task % config.trials);
    const double separation = config.separations[point / config.budgets.size()];
    const std::int64_t budget = config.budgets[point % config.budgets.size()];
    const std::uint64_t seed = mix_seed(mix_seed(config.base_seed, point), static_cast<std::uint64_t>(trial));

    PlantedParams params = config.planted;
    params.separation = separation;
    Rng rng_planted(mix_seed(seed, 0));
    const PlantedInstance instance = planted_similarity(params, rng_planted);

    TripletSet triplets(n);
    if (needs_triplets) {
      Rng rng_sample(mix_seed(seed, 1));
      triplets = sample_uniform_triplets(instance.similarity, budget, rng_sample);
      if (config.flip_prob > 0) {
        Rng rng_flip(mix_seed(seed, 2));
        triplets = flip_noise(triplets, NoiseParams{config.flip_prob}, rng_flip);
      }
    }
    QuadrupletSet quadruplets(n);
    if (needs_quadruplets) {
      Rng rng_sample(mix_seed(seed, 3));
      quadruplets = sample_uniform_quadruplets(instance.similarity, budget, rng_sample);
      if (config.flip_prob > 0) {
        Rng rng_flip(mix_seed(seed, 4));
        quadruplets = flip_noise(quadruplets, NoiseParams{config.flip_prob}, rng_flip);
      }
    }

    for (std::size_t m = 0; m < methods; ++m) {
      const Method method = config.methods[m];
      const std::int64_t started = config.record_timing ? now_ms() : 0;
      Dendrogram tree = [&] {
        switch (method) {
          case Method::adds3_al: return average_linkage(adds3(triplets));
          case Method::adds4_al: return average_linkage(adds4(quadruplets));
          case Method::cosine_al: return average_linkage(instance.similarity);
        }
        fail("unknown method");
      }();

      ResultRow row;
      row.experiment = "planted-sweep";
      row.method = method_name(method);
      row.n = n;
      row.param = separation;
      row.flip_prob = config.flip_prob;
      row.trial = trial;
      row.seed = seed;
      if (method == Method::adds4_al) {
        row.num_comparisons = static_cast<std::int64_t>(quadruplets.size());
        row.revenue = qrev(tree, quadruplets);
        row.revenue_kind = "quadruplet";
      } else {
        row.num_comparisons = static_cast<std::int64_t>(triplets.size());
        row.revenue = trev(tree, triplets);
        row.revenue_kind = "triplet";
      }
      if (config.planted.height >= 1) row.aari = aari(tree, instance.ground_truth, config.planted.height);
      if (config.record_timing) row.wall_ms = now_ms() - started;
      rows[task * methods + m] = std::move(row);
    }
  });
  return rows;
}

std::vector<ResultRow> run_latent_recovery(const RecoveryConfig& config) {
  config.validate();
  const std::size_t slots_per_trial = config.brute_force ? 2 : 1;
  std::vector<ResultRow> rows(static_cast<std::size_t>(config.trials) * slots_per_trial);
  const std::string experiment = config.flip_prob > 0 ? "noisy-recovery" : "latent-recovery";

  run_tasks(config.trials, config.jobs, [&](std::size_t task) {
    const int trial = static_cast<int>(task);
    const std::uint64_t seed = mix_seed(config.base_seed, static_cast<std::uint64_t>(trial));
    const std::int64_t started = config.record_timing ? now_ms() : 0;

    Rng rng_tree(mix_seed(seed, 0));
    const Dendrogram latent = random_tree(config.n, rng_tree);
    const TripletSet latent_triplets = triplets_from_tree(latent);
    const std::int64_t latent_revenue = latent_trev_closed_form(latent);

    Rng rng_sample(mix_seed(seed, 1));
    TripletSet sample = sample_pairs_bernoulli(latent_triplets, SamplingParams{config.p}, rng_sample);
    if (config.flip_prob > 0) {
      Rng rng_flip(mix_seed(seed, 2));
      sample = flip_noise(sample, NoiseParams{config.flip_prob}, rng_flip);
    }

    const Dendrogram tree = average_linkage(adds3(sample));
    ResultRow row;
    row.experiment = experiment;
    row.method = method_name(Method::adds3_al);
    row.n = config.n;
    row.param = config.p;
    row.num_comparisons = static_cast<std::int64_t>(sample.size());
    row.flip_prob = config.flip_prob;
    row.trial = trial;
    row.seed = seed;
    row.revenue = trev(tree, latent_triplets);
    row.revenue_kind = "triplet";
    row.ratio_to_latent = static_cast<double>(row.revenue) / static_cast<double>(latent_revenue);
    if (config.record_timing) row.wall_ms = now_ms() - started;
    rows[task * slots_per_trial] = row;

    if (config.brute_force) {
      const BruteForceResult best = brute_force_max_trev(sample, config.n, config.oracle_cap);
      ResultRow oracle_row = row;
      oracle_row.method = "brute-force";
      oracle_row.revenue = trev(best.tree, latent_triplets);
      oracle_row.ratio_to_latent =
          static_cast<double>(oracle_row.revenue) / static_cast<double>(latent_revenue);
      if (config.record_timing) oracle_row.wall_ms = now_ms() - started;
      rows[task * slots_per_trial + 1] = std::move(oracle_row);
    }
  });
  return rows;
}

std::string results_csv(std::span<const ResultRow> rows) {
  std::string out =
      "experiment,method,n,param,num_comparisons,flip_prob,trial,seed,revenue,"
      "revenue_kind,aari,ratio_to_latent,wall_ms\n";
  for (const ResultRow& row : rows) {
    out += row.experiment;
    out += ',';
    out += row.method;
    out += ',';
    out += std::to_string(row.n);
    out += ',';
    out += format_value(row.param);
    out += ',';
    out += std::to_string(row.num_comparisons);
    out += ',';
    out += format_value(row.flip_prob);
    out += ',';
    out += std::to_string(row.trial);
    out += ',';
    out += std::to_string(row.seed);
    out += ',';
    out += std::to_string(row.revenue);
    out += ',';
    out += row.revenue_kind;
    out += ',';
    if (row.aari) out += format_value(*row.aari);
    out += ',';
    if (row.ratio_to_latent) out += format_value(*row.ratio_to_latent);
    out += ',';
    out += std::to_string(row.wall_ms);
    out += '\n';
  }
  return out;
}

void write_results_csv(const std::filesystem::path& path, std::span<const ResultRow> rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << results_csv(rows);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace trevhc
