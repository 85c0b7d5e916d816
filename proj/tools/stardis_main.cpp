#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stardis/analysis.hpp"
#include "stardis/discrepancy.hpp"
#include "stardis/errors.hpp"
#include "stardis/experiment.hpp"
#include "stardis/io.hpp"
#include "stardis/kernels/box_count.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("STARDIS_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::domain_error("STARDIS_SEED must be an unsigned integer");
    }
  }
  return 0;
}

// "-" means stdout.
void emit(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::domain_error("cannot open output file: " + path);
  out << body;
}

std::string pretty(const nlohmann::json& j) { return j.dump(2) + "\n"; }

stardis::AnchoredBox parse_corner(const std::vector<double>& values) {
  return stardis::AnchoredBox(values);
}

struct GenerateOptions {
  std::uint32_t dimension = 2;
  std::uint32_t cells_per_axis = 0;
  std::uint64_t count = 0;
  std::string sampler = "jittered";
  std::optional<std::uint64_t> seed;
  std::string out = "-";
};

int run_generate(const GenerateOptions& opt) {
  const auto kind = stardis::parse_sampler_kind(opt.sampler);
  if (!kind) throw std::domain_error("unknown sampler: " + opt.sampler);
  const std::uint64_t seed = opt.seed ? *opt.seed : default_seed();
  stardis::RandomStream stream(seed);

  std::ostringstream body;
  if (*kind == stardis::SamplerKind::jittered) {
    if (opt.cells_per_axis == 0) {
      throw std::domain_error("jittered generation needs --m (cells per axis)");
    }
    if (opt.count != 0) {
      throw std::domain_error("--n conflicts with --sampler jittered; the grid fixes the count");
    }
    const stardis::GridPartition grid(opt.dimension, opt.cells_per_axis);
    stardis::write_point_set_csv(stardis::jittered(grid, stream), body);
  } else {
    if (opt.count == 0) throw std::domain_error("simple generation needs --n (point count)");
    if (opt.cells_per_axis != 0) {
      throw std::domain_error("--m conflicts with --sampler simple");
    }
    stardis::write_point_set_csv(stardis::simple_random(opt.count, opt.dimension, stream), body);
  }
  emit(opt.out, body.str());
  return kExitOk;
}

struct DiscrepancyOptions {
  std::string points;
  std::string method = "auto";
  double delta = 0.0;
  double guard = stardis::kDefaultWorkGuard;
  std::string out = "-";
};

int run_discrepancy(const DiscrepancyOptions& opt) {
  const stardis::PointSet points = stardis::read_point_set_csv_file(opt.points);

  std::string method = opt.method;
  if (method == "auto") {
    const double work = std::pow(static_cast<double>(points.size()),
                                 static_cast<double>(points.dimension()));
    method = work <= opt.guard ? "exact" : "cover";
  }

  nlohmann::json j;
  if (method == "exact") {
    j = stardis::to_json(stardis::exact_star_discrepancy(points, opt.guard));
  } else if (method == "cover") {
    const double delta = opt.delta > 0.0
                             ? opt.delta
                             : 1.0 / static_cast<double>(points.size());
    const auto cover = stardis::build_delta_cover(points.dimension(), delta);
    j = stardis::to_json(stardis::cover_discrepancy_result(points, cover, opt.guard));
    j["delta"] = delta;
    j["resolution"] = cover.resolution;
  } else {
    throw std::domain_error("unknown method: " + opt.method);
  }
  j["method"] = method;
  j["n"] = points.size();
  j["d"] = points.dimension();
  j["kernel"] = stardis::kernels::backend_name(stardis::kernels::active_backend());
  emit(opt.out, pretty(j));
  return kExitOk;
}

struct CoverOptions {
  std::uint32_t dimension = 2;
  double delta = 0.1;
  std::string out = "-";
};

int run_cover(const CoverOptions& opt) {
  const auto cover = stardis::build_delta_cover(opt.dimension, opt.delta);
  nlohmann::json j{
      {"d", cover.dimension},
      {"delta", cover.delta},
      {"resolution", cover.resolution},
      {"cardinality_bound", stardis::cover_cardinality_bound(opt.dimension, opt.delta)},
  };
  // The corner count is reported only when it fits in 64 bits.
  try {
    j["corner_count"] = cover.corner_count();
  } catch (const std::domain_error&) {
    j["corner_count"] = nullptr;
  }
  emit(opt.out, pretty(j));
  return kExitOk;
}

struct VarianceOptions {
  std::uint32_t dimension = 2;
  std::uint32_t cells_per_axis = 2;
  std::vector<double> corner;
  std::string out = "-";
};

int run_variance(const VarianceOptions& opt) {
  const stardis::GridPartition grid(opt.dimension, opt.cells_per_axis);
  const stardis::AnchoredBox box = parse_corner(opt.corner);
  const auto cmp = stardis::variance_comparison(grid, box);
  nlohmann::json j{
      {"d", opt.dimension},
      {"m", opt.cells_per_axis},
      {"n", grid.cell_count()},
      {"corner", opt.corner},
      {"var_stratified", cmp.stratified},
      {"var_simple", cmp.simple},
      {"gap", cmp.gap},
  };
  emit(opt.out, pretty(j));
  return kExitOk;
}

struct BoundsOptions {
  std::uint32_t dimension = 2;
  std::uint64_t point_count = 4;
  double failure_mass = 0.5;
  double sigma0 = 0.0;
  std::optional<double> lambda;
  double variance_sum = 0.0;
  double magnitude_bound = 1.0;
  std::string out = "-";
};

int run_bounds(const BoundsOptions& opt) {
  nlohmann::json j{
      {"d", opt.dimension},
      {"n", opt.point_count},
      {"q", opt.failure_mass},
      {"sigma0", opt.sigma0},
      {"A", stardis::bound_exponent_a(opt.dimension, opt.failure_mass, opt.point_count)},
      {"bound", stardis::high_prob_discrepancy_bound(opt.dimension, opt.failure_mass,
                                                     opt.point_count, opt.sigma0)},
      {"bound_sharp", stardis::high_prob_discrepancy_bound_sharp(opt.dimension, opt.failure_mass,
                                                                 opt.point_count, opt.sigma0)},
  };
  const auto constants = stardis::bound_constants(opt.dimension, opt.point_count, opt.sigma0);
  j["C0"] = constants.c0;
  j["C1"] = constants.c1;
  if (opt.lambda) {
    j["lambda"] = *opt.lambda;
    j["variance_sum"] = opt.variance_sum;
    j["bernstein"] =
        stardis::bernstein_tail_bound(opt.variance_sum, opt.magnitude_bound, *opt.lambda);
    j["union"] = stardis::union_tail_bound(opt.dimension, opt.point_count, opt.variance_sum,
                                           *opt.lambda);
    j["union_log"] = stardis::union_tail_bound_log(opt.dimension, opt.point_count,
                                                   opt.variance_sum, *opt.lambda);
  }
  emit(opt.out, pretty(j));
  return kExitOk;
}

struct ExperimentOptions {
  std::string config;
  std::string out;
  std::string summary;
  unsigned threads = 1;
};

int run_experiment(const ExperimentOptions& opt) {
  const stardis::RunConfig config = stardis::read_run_config_file(opt.config);
  const auto result = stardis::compare_samplers(config, opt.threads);

  if (!opt.out.empty()) {
    std::ostringstream body;
    stardis::write_samples_csv(result, body);
    emit(opt.out, body.str());
  }
  const std::string summary_path = opt.summary.empty() ? "-" : opt.summary;
  emit(summary_path, pretty(stardis::to_json(result)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star discrepancy toolkit for jittered and simple random sampling"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* cmd_gen = app.add_subcommand("generate", "Sample a point set and write it as CSV");
  cmd_gen->add_option("--d", gen.dimension, "Dimension")->check(CLI::PositiveNumber);
  cmd_gen->add_option("--m", gen.cells_per_axis, "Cells per axis (jittered; N = m^d)");
  cmd_gen->add_option("--n", gen.count, "Point count (simple)");
  cmd_gen->add_option("--sampler", gen.sampler, "simple or jittered")
      ->check(CLI::IsMember({"simple", "jittered"}));
  cmd_gen->add_option("--seed", gen.seed, "Stream seed (default STARDIS_SEED or 0)");
  cmd_gen->add_option("--out", gen.out, "Output file, - for stdout");

  DiscrepancyOptions dis;
  auto* cmd_dis = app.add_subcommand("discrepancy", "Star discrepancy of a CSV point set");
  cmd_dis->add_option("--points", dis.points, "Point set CSV")->required();
  cmd_dis->add_option("--method", dis.method, "exact, cover, or auto")
      ->check(CLI::IsMember({"exact", "cover", "auto"}));
  cmd_dis->add_option("--delta", dis.delta, "Cover tolerance (cover method; default 1/N)");
  cmd_dis->add_option("--guard", dis.guard, "Work guard on corner evaluations");
  cmd_dis->add_option("--out", dis.out, "Output file, - for stdout");

  CoverOptions cov;
  auto* cmd_cov = app.add_subcommand("cover", "Delta cover geometry and cardinality bound");
  cmd_cov->add_option("--d", cov.dimension, "Dimension")->check(CLI::PositiveNumber);
  cmd_cov->add_option("--delta", cov.delta, "Cover tolerance in (0,1]")->required();
  cmd_cov->add_option("--out", cov.out, "Output file, - for stdout");

  VarianceOptions var;
  auto* cmd_var = app.add_subcommand("variance", "Stratified vs simple count variance for a box");
  cmd_var->add_option("--d", var.dimension, "Dimension")->check(CLI::PositiveNumber);
  cmd_var->add_option("--m", var.cells_per_axis, "Cells per axis")->check(CLI::PositiveNumber);
  cmd_var->add_option("--corner", var.corner, "Box corner, comma separated")
      ->required()
      ->delimiter(',');
  cmd_var->add_option("--out", var.out, "Output file, - for stdout");

  BoundsOptions bnd;
  auto* cmd_bnd = app.add_subcommand("bounds", "Concentration and high-probability bounds");
  cmd_bnd->add_option("--d", bnd.dimension, "Dimension")->check(CLI::PositiveNumber);
  cmd_bnd->add_option("--n", bnd.point_count, "Point count")->check(CLI::PositiveNumber);
  cmd_bnd->add_option("--q", bnd.failure_mass, "Failure mass in (0,1)");
  cmd_bnd->add_option("--sigma0", bnd.sigma0, "Sigma0 scale");
  cmd_bnd->add_option("--lambda", bnd.lambda, "Tail level; enables the tail bounds");
  cmd_bnd->add_option("--variance-sum", bnd.variance_sum, "Sum of term variances");
  cmd_bnd->add_option("--magnitude-bound", bnd.magnitude_bound, "Per-term magnitude bound");
  cmd_bnd->add_option("--out", bnd.out, "Output file, - for stdout");

  ExperimentOptions exp;
  auto* cmd_exp = app.add_subcommand("experiment", "Replicated sampler comparison");
  cmd_exp->add_option("--config", exp.config, "Run config JSON")->required();
  cmd_exp->add_option("--out", exp.out, "Per-replication samples CSV");
  cmd_exp->add_option("--summary", exp.summary, "Summary JSON, - for stdout");
  cmd_exp->add_option("--threads", exp.threads, "Worker threads (does not affect results)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
    if (cmd_gen->parsed()) return run_generate(gen);
    if (cmd_dis->parsed()) return run_discrepancy(dis);
    if (cmd_cov->parsed()) return run_cover(cov);
    if (cmd_var->parsed()) return run_variance(var);
    if (cmd_bnd->parsed()) return run_bounds(bnd);
    if (cmd_exp->parsed()) return run_experiment(exp);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const stardis::resource_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}
