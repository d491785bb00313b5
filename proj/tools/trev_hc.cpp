// Command-line front end: every pipeline stage (tree/planted generation,
// comparison extraction, sampling, noise, additive similarities, average
// linkage, revenue / AARI scoring, the exhaustive oracle and the experiment
// harness) is exposed as a subcommand so runs can be scripted and replayed.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "trevhc/comparisons.hpp"
#include "trevhc/dendrogram.hpp"
#include "trevhc/evaluation.hpp"
#include "trevhc/harness.hpp"
#include "trevhc/linkage.hpp"
#include "trevhc/objective.hpp"
#include "trevhc/oracle.hpp"
#include "trevhc/planted.hpp"
#include "trevhc/similarity.hpp"

namespace {

using namespace trevhc;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("TREVHC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::runtime_error("TREVHC_SEED is not an unsigned integer");
    }
  }
  return 0;
}

std::vector<Method> parse_methods(const std::vector<std::string>& names) {
  std::vector<Method> methods;
  for (const std::string& name : names) methods.push_back(parse_method(name));
  return methods;
}

struct Options {
  // shared
  std::uint64_t seed = 0;
  std::string out;
  std::string tree_file;
  std::string truth_file;
  std::string triplet_file;
  std::string quadruplet_file;
  std::string similarity_file;
  std::string embedding_file;
  std::string query_file;
  int n = -1;
  // gen-planted / sweep
  int cluster_size = 30;
  int height = 3;
  double mu = 0.8;
  double sigma = 0.1;
  double separation = 0.15;
  std::vector<double> separations;
  std::vector<std::int64_t> budgets;
  std::vector<double> budget_multipliers;
  std::vector<std::string> methods = {"adds3-al"};
  // sampling / noise
  std::int64_t count = 0;
  std::string kind = "triplet";
  double p = -1;
  double flip_prob = 0.0;
  // linkage inputs
  bool use_adds3 = false;
  bool use_adds4 = false;
  // harness
  int trials = 10;
  int jobs = 1;
  bool timing = false;
  bool brute_force = false;
  int cap = kEnumerationCap;
  // revenue
  bool json = false;
  // output of gen-planted
  std::string out_similarity;
  std::string out_tree;
  int levels = 0;
};

int resolve_n(int given, int inferred) { return given > 0 ? given : inferred; }

void cmd_gen_tree(const Options& opt) {
  Rng rng(opt.seed);
  write_merge_list(opt.out, random_tree(opt.n, rng));
}

void cmd_gen_planted(const Options& opt) {
  PlantedParams params{opt.cluster_size, opt.height, opt.mu, opt.sigma, opt.separation};
  Rng rng(opt.seed);
  const PlantedInstance instance = planted_similarity(params, rng);
  write_similarity_csv(opt.out_similarity, instance.similarity);
  write_merge_list(opt.out_tree, instance.ground_truth);
}

void cmd_triplets(const Options& opt) {
  if (opt.tree_file.empty() == opt.similarity_file.empty())
    throw std::runtime_error("triplets: pass exactly one of --tree / --similarity");
  const TripletSet result = opt.tree_file.empty()
                                ? triplets_from_similarity(read_similarity_csv(opt.similarity_file))
                                : triplets_from_tree(read_merge_list(opt.tree_file));
  write_triplets(opt.out, result.items());
}

void cmd_quadruplets(const Options& opt) {
  const QuadrupletSet result = quadruplets_from_similarity(read_similarity_csv(opt.similarity_file));
  write_quadruplets(opt.out, result.items());
}

void cmd_sample(const Options& opt) {
  Rng rng(opt.seed);
  if (!opt.triplet_file.empty()) {
    if (opt.p < 0) throw std::runtime_error("sample: --p is required with --triplets");
    const auto items = read_triplets(opt.triplet_file);
    const int n = resolve_n(opt.n, infer_object_count(std::span<const Triplet>(items)));
    const TripletSet set = triplet_set_from(items, n);
    SamplingParams params;
    params.p = opt.p;
    write_triplets(opt.out, sample_pairs_bernoulli(set, params, rng).items());
    return;
  }
  if (opt.similarity_file.empty())
    throw std::runtime_error("sample: pass --triplets (pair sampling) or --similarity (uniform sampling)");
  const SimilarityMatrix s = read_similarity_csv(opt.similarity_file);
  if (opt.kind == "triplet") {
    write_triplets(opt.out, sample_uniform_triplets(s, opt.count, rng).items());
  } else if (opt.kind == "quadruplet") {
    write_quadruplets(opt.out, sample_uniform_quadruplets(s, opt.count, rng).items());
  } else {
    throw std::runtime_error("sample: --kind must be triplet or quadruplet");
  }
}

void cmd_noise(const Options& opt) {
  Rng rng(opt.seed);
  const NoiseParams params{opt.flip_prob};
  if (!opt.triplet_file.empty()) {
    const auto items = read_triplets(opt.triplet_file);
    const int n = resolve_n(opt.n, infer_object_count(std::span<const Triplet>(items)));
    write_triplets(opt.out, flip_noise(triplet_set_from(items, n), params, rng).items());
  } else if (!opt.quadruplet_file.empty()) {
    const auto items = read_quadruplets(opt.quadruplet_file);
    const int n = resolve_n(opt.n, infer_object_count(std::span<const Quadruplet>(items)));
    write_quadruplets(opt.out, flip_noise(quadruplet_set_from(items, n), params, rng).items());
  } else {
    throw std::runtime_error("noise: pass --triplets or --quadruplets");
  }
}

void cmd_adds3(const Options& opt) {
  const auto items = read_triplets(opt.triplet_file);
  const int n = resolve_n(opt.n, infer_object_count(std::span<const Triplet>(items)));
  write_similarity_csv(opt.out, adds3(items, n));
}

void cmd_adds4(const Options& opt) {
  const auto items = read_quadruplets(opt.quadruplet_file);
  const int n = resolve_n(opt.n, infer_object_count(std::span<const Quadruplet>(items)));
  write_similarity_csv(opt.out, adds4(items, n));
}

void cmd_cluster(const Options& opt) {
  const int sources = (!opt.similarity_file.empty()) + (!opt.triplet_file.empty()) +
                      (!opt.quadruplet_file.empty()) + (!opt.embedding_file.empty());
  if (sources != 1)
    throw std::runtime_error(
        "cluster: pass exactly one of --similarity, --triplets --adds3, --quadruplets --adds4, "
        "--embedding");
  Dendrogram tree = [&] {
    if (!opt.similarity_file.empty()) return average_linkage(read_similarity_csv(opt.similarity_file));
    if (!opt.embedding_file.empty())
      return average_linkage(cosine_similarity(read_embedding_csv(opt.embedding_file)));
    if (!opt.triplet_file.empty()) {
      if (!opt.use_adds3) throw std::runtime_error("cluster: triplet input requires --adds3");
      const auto items = read_triplets(opt.triplet_file);
      const int n = resolve_n(opt.n, infer_object_count(std::span<const Triplet>(items)));
      return average_linkage(adds3(items, n));
    }
    if (!opt.use_adds4) throw std::runtime_error("cluster: quadruplet input requires --adds4");
    const auto items = read_quadruplets(opt.quadruplet_file);
    const int n = resolve_n(opt.n, infer_object_count(std::span<const Quadruplet>(items)));
    return average_linkage(adds4(items, n));
  }();
  write_merge_list(opt.out, tree);
}

void cmd_revenue(const Options& opt) {
  const Dendrogram tree = read_merge_list(opt.tree_file);
  const LcaSizeMatrix lca(tree);
  if (opt.triplet_file.empty() == opt.quadruplet_file.empty())
    throw std::runtime_error("revenue: pass exactly one of --triplets / --quadruplets");

  std::int64_t revenue = 0;
  std::int64_t consistency = 0;
  std::size_t observed = 0;
  if (!opt.triplet_file.empty()) {
    const auto items = read_triplets(opt.triplet_file);
    if (infer_object_count(std::span<const Triplet>(items)) > tree.leaf_count())
      throw std::runtime_error("revenue: triplet index exceeds the tree's leaves");
    revenue = trev(lca, items);
    consistency = consistency_count(lca, std::span<const Triplet>(items));
    observed = items.size();
  } else {
    const auto items = read_quadruplets(opt.quadruplet_file);
    if (infer_object_count(std::span<const Quadruplet>(items)) > tree.leaf_count())
      throw std::runtime_error("revenue: quadruplet index exceeds the tree's leaves");
    revenue = qrev(lca, items);
    consistency = consistency_count(lca, std::span<const Quadruplet>(items));
    observed = items.size();
  }
  if (opt.json) {
    nlohmann::json out{{"revenue", revenue},
                       {"consistency", consistency},
                       {"n", tree.leaf_count()},
                       {"num_comparisons", observed}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << revenue << "\n";
  }
}

void cmd_aari(const Options& opt) {
  const Dendrogram tree = read_merge_list(opt.tree_file);
  const Dendrogram truth = read_merge_list(opt.truth_file);
  std::cout << aari(tree, truth, opt.levels) << "\n";
}

void cmd_oracle(const Options& opt) {
  const auto items = read_triplets(opt.triplet_file);
  const int n = resolve_n(opt.n, infer_object_count(std::span<const Triplet>(items)));
  const BruteForceResult best = brute_force_max_trev(triplet_set_from(items, n), n, opt.cap);
  std::cout << "best_trev " << best.value << "\n";
  std::cout << "unique " << (best.unique ? "true" : "false") << "\n";
  std::cout << serialize(best.tree);
}

void cmd_convert(const Options& opt) {
  write_triplets(opt.out, convert_query_csv(opt.query_file, opt.n).items());
}

void cmd_sweep(const Options& opt) {
  SweepConfig config;
  config.planted = PlantedParams{opt.cluster_size, opt.height, opt.mu, opt.sigma, opt.separation};
  config.separations = opt.separations.empty() ? std::vector<double>{opt.separation} : opt.separations;
  config.budgets = opt.budgets;
  const double n2 = static_cast<double>(config.planted.n()) * config.planted.n();
  for (double multiplier : opt.budget_multipliers)
    config.budgets.push_back(static_cast<std::int64_t>(multiplier * n2));
  config.flip_prob = opt.flip_prob;
  config.trials = opt.trials;
  config.base_seed = opt.seed;
  config.methods = parse_methods(opt.methods);
  config.jobs = opt.jobs;
  config.record_timing = opt.timing;
  const auto rows = run_planted_sweep(config);
  write_results_csv(opt.out, rows);
}

void cmd_recover(const Options& opt) {
  RecoveryConfig config;
  config.n = opt.n;
  config.p = opt.p < 0 ? 1.0 : opt.p;
  config.flip_prob = opt.flip_prob;
  config.trials = opt.trials;
  config.base_seed = opt.seed;
  config.brute_force = opt.brute_force;
  config.oracle_cap = opt.cap;
  config.jobs = opt.jobs;
  config.record_timing = opt.timing;
  const auto rows = run_latent_recovery(config);
  write_results_csv(opt.out, rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Comparison-based hierarchical clustering: dendrogram revenue, additive "
               "similarities and average linkage"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI key=value file");

  Options opt;
  try {
    opt.seed = default_seed();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "Random seed (default: $TREVHC_SEED or 0)");
  };

  auto* gen_tree = app.add_subcommand("gen-tree", "Generate a random dendrogram");
  gen_tree->add_option("--n", opt.n, "Number of leaves")->required()->check(CLI::PositiveNumber);
  gen_tree->add_option("--out", opt.out, "Output merge-list file")->required();
  add_seed(gen_tree);
  gen_tree->callback([&] { cmd_gen_tree(opt); });

  auto* gen_planted = app.add_subcommand("gen-planted", "Generate a planted-model similarity matrix");
  gen_planted->add_option("--n0", opt.cluster_size, "Ground-cluster size")->check(CLI::PositiveNumber);
  gen_planted->add_option("--levels", opt.height, "Hierarchy height L")->check(CLI::NonNegativeNumber);
  gen_planted->add_option("--mu", opt.mu, "Within-cluster mean");
  gen_planted->add_option("--sigma", opt.sigma, "Noise standard deviation");
  gen_planted->add_option("--separation", opt.separation, "Mean gap per level");
  gen_planted->add_option("--out-similarity", opt.out_similarity, "Output similarity CSV")->required();
  gen_planted->add_option("--out-tree", opt.out_tree, "Output ground-truth merge list")->required();
  add_seed(gen_planted);
  gen_planted->callback([&] { cmd_gen_planted(opt); });

  auto* triplets = app.add_subcommand("triplets", "Derive the complete triplet set of a tree or similarity");
  triplets->add_option("--tree", opt.tree_file, "Merge-list file (latent-tree triplets)");
  triplets->add_option("--similarity", opt.similarity_file, "Similarity CSV (all tie-free triplets)");
  triplets->add_option("--out", opt.out, "Output triplet file")->required();
  triplets->callback([&] { cmd_triplets(opt); });

  auto* quadruplets = app.add_subcommand("quadruplets", "Derive all tie-free quadruplets of a similarity");
  quadruplets->add_option("--similarity", opt.similarity_file, "Similarity CSV")->required();
  quadruplets->add_option("--out", opt.out, "Output quadruplet file")->required();
  quadruplets->callback([&] { cmd_quadruplets(opt); });

  auto* sample = app.add_subcommand("sample", "Sample comparisons");
  sample->add_option("--similarity", opt.similarity_file, "Similarity CSV for uniform sampling");
  sample->add_option("--count", opt.count, "Number of comparisons to draw")->check(CLI::NonNegativeNumber);
  sample->add_option("--kind", opt.kind, "triplet | quadruplet (uniform sampling)");
  sample->add_option("--triplets", opt.triplet_file, "Triplet file for Bernoulli pair sampling");
  sample->add_option("--p", opt.p, "Per-pair inclusion probability");
  sample->add_option("--n", opt.n, "Object count (default: inferred)");
  sample->add_option("--out", opt.out, "Output file")->required();
  add_seed(sample);
  sample->callback([&] { cmd_sample(opt); });

  auto* noise = app.add_subcommand("noise", "Flip comparisons independently");
  noise->add_option("--triplets", opt.triplet_file, "Input triplet file");
  noise->add_option("--quadruplets", opt.quadruplet_file, "Input quadruplet file");
  noise->add_option("--flip-prob", opt.flip_prob, "Flip probability")->required();
  noise->add_option("--n", opt.n, "Object count (default: inferred)");
  noise->add_option("--out", opt.out, "Output file")->required();
  add_seed(noise);
  noise->callback([&] { cmd_noise(opt); });

  auto* s3 = app.add_subcommand("adds3", "Additive similarity from triplets");
  s3->add_option("--triplets", opt.triplet_file, "Input triplet file")->required();
  s3->add_option("--n", opt.n, "Object count (default: inferred)");
  s3->add_option("--out", opt.out, "Output similarity CSV")->required();
  s3->callback([&] { cmd_adds3(opt); });

  auto* s4 = app.add_subcommand("adds4", "Additive similarity from quadruplets");
  s4->add_option("--quadruplets", opt.quadruplet_file, "Input quadruplet file")->required();
  s4->add_option("--n", opt.n, "Object count (default: inferred)");
  s4->add_option("--out", opt.out, "Output similarity CSV")->required();
  s4->callback([&] { cmd_adds4(opt); });

  auto* cluster = app.add_subcommand("cluster", "Average-linkage dendrogram from a similarity source");
  cluster->add_option("--similarity", opt.similarity_file, "Similarity CSV");
  cluster->add_option("--triplets", opt.triplet_file, "Triplet file (with --adds3)");
  cluster->add_flag("--adds3", opt.use_adds3, "Use the AddS3 similarity of --triplets");
  cluster->add_option("--quadruplets", opt.quadruplet_file, "Quadruplet file (with --adds4)");
  cluster->add_flag("--adds4", opt.use_adds4, "Use the AddS4 similarity of --quadruplets");
  cluster->add_option("--embedding", opt.embedding_file, "Embedding CSV (cosine similarity)");
  cluster->add_option("--n", opt.n, "Object count (default: inferred)");
  cluster->add_option("--out", opt.out, "Output merge-list file")->required();
  cluster->callback([&] { cmd_cluster(opt); });

  auto* revenue = app.add_subcommand("revenue", "Comparison revenue of a dendrogram");
  revenue->add_option("--tree", opt.tree_file, "Merge-list file")->required();
  revenue->add_option("--triplets", opt.triplet_file, "Triplet file");
  revenue->add_option("--quadruplets", opt.quadruplet_file, "Quadruplet file");
  revenue->add_flag("--json", opt.json, "Emit {revenue, consistency, n, num_comparisons}");
  revenue->callback([&] { cmd_revenue(opt); });

  auto* aari_cmd = app.add_subcommand("aari", "Averaged ARI between two dendrograms");
  aari_cmd->add_option("tree", opt.tree_file, "Learned merge-list file")->required();
  aari_cmd->add_option("truth", opt.truth_file, "Ground-truth merge-list file")->required();
  aari_cmd->add_option("--levels", opt.levels, "Top levels to average")->required()->check(CLI::PositiveNumber);
  aari_cmd->callback([&] { cmd_aari(opt); });

  auto* oracle = app.add_subcommand("oracle", "Exhaustive triplet-revenue maximizer (small n)");
  oracle->add_option("--triplets", opt.triplet_file, "Triplet file")->required();
  oracle->add_option("--n", opt.n, "Object count (default: inferred)");
  oracle->add_option("--cap", opt.cap, "Enumeration cap override");
  oracle->callback([&] { cmd_oracle(opt); });

  auto* convert = app.add_subcommand("convert", "Convert crowd-query answers to standard triplets");
  convert->add_option("--queries", opt.query_file, "CSV of answers (central | oddout | rank2of8)")->required();
  convert->add_option("--n", opt.n, "Object count (default: inferred)");
  convert->add_option("--out", opt.out, "Output triplet file")->required();
  convert->callback([&] { cmd_convert(opt); });

  auto* sweep = app.add_subcommand("sweep", "Planted-model sweep (per-trial CSV rows)");
  sweep->add_option("--n0", opt.cluster_size, "Ground-cluster size")->check(CLI::PositiveNumber);
  sweep->add_option("--levels", opt.height, "Hierarchy height L")->check(CLI::NonNegativeNumber);
  sweep->add_option("--mu", opt.mu, "Within-cluster mean");
  sweep->add_option("--sigma", opt.sigma, "Noise standard deviation");
  sweep->add_option("--separations", opt.separations, "Separation values")->delimiter(',');
  sweep->add_option("--budgets", opt.budgets, "Comparison counts")->delimiter(',');
  sweep->add_option("--budget-multipliers", opt.budget_multipliers, "Budgets as multiples of n^2")
      ->delimiter(',');
  sweep->add_option("--methods", opt.methods, "adds3-al | adds4-al | cosine-al")->delimiter(',');
  sweep->add_option("--flip-prob", opt.flip_prob, "Comparison flip probability");
  sweep->add_option("--trials", opt.trials, "Trials per point")->check(CLI::PositiveNumber);
  sweep->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_flag("--timing", opt.timing, "Record wall-clock times (breaks byte reproducibility)");
  sweep->add_option("--out", opt.out, "Output results CSV")->required();
  add_seed(sweep);
  sweep->callback([&] { cmd_sweep(opt); });

  auto* recover = app.add_subcommand("recover", "Latent-tree recovery from sampled triplets");
  recover->add_option("--n", opt.n, "Number of leaves")->required()->check(CLI::PositiveNumber);
  recover->add_option("--p", opt.p, "Per-pair inclusion probability")->required();
  recover->add_option("--flip-prob", opt.flip_prob, "Triplet flip probability");
  recover->add_option("--trials", opt.trials, "Number of trials")->check(CLI::PositiveNumber);
  recover->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  recover->add_flag("--brute-force", opt.brute_force, "Also report the exhaustive maximizer");
  recover->add_option("--cap", opt.cap, "Enumeration cap override");
  recover->add_flag("--timing", opt.timing, "Record wall-clock times (breaks byte reproducibility)");
  recover->add_option("--out", opt.out, "Output results CSV")->required();
  add_seed(recover);
  recover->callback([&] { cmd_recover(opt); });

  // Let "trev-hc <sub> --config file.ini" reach the global --config option.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
