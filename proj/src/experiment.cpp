#include "stardis/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/students_t.hpp>

#include "stardis/discrepancy.hpp"

namespace stardis {

namespace {

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // n-1 denominator
};

Moments sample_moments(std::span<const double> values) {
  const auto n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, values.size() > 1 ? ss / (n - 1.0) : 0.0};
}

double replication_discrepancy(const RunConfig& config, SamplerKind kind, RandomStream& stream,
                               const DeltaCover* cover) {
  const GridPartition grid(config.dimension, config.cells_per_axis);
  const PointSet points = kind == SamplerKind::jittered
                              ? jittered(grid, stream)
                              : simple_random(grid.cell_count(), config.dimension, stream);
  if (cover != nullptr) return cover_discrepancy(points, *cover);
  return exact_star_discrepancy(points).value;
}

DiscrepancySummary estimate_by_position(const RunConfig& config, std::size_t position,
                                        unsigned threads) {
  const SamplerKind kind = config.samplers.at(position);
  constexpr std::uint64_t stride = 2;  // fixed stream layout, offsets {0,1}
  const std::uint64_t reps = config.replications;

  DeltaCover cover;
  const bool use_cover = config.resolved_method() == DiscrepancyMethod::cover;
  if (use_cover) cover = build_delta_cover(config.dimension, config.resolved_delta());

  DiscrepancySummary out;
  out.kind = kind;
  out.samples.assign(reps, 0.0);

  const auto worker = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t k = begin; k < end; ++k) {
      RandomStream stream = derive_stream(config.master_seed, k * stride + position);
      out.samples[k] =
          replication_discrepancy(config, kind, stream, use_cover ? &cover : nullptr);
    }
  };

  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, reps));
  if (workers == 1) {
    worker(0, reps);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = reps * w / workers;
      const std::uint64_t end = reps * (w + 1) / workers;
      pool.emplace_back(worker, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  const Moments m = sample_moments(out.samples);
  out.mean = m.mean;
  out.stddev = std::sqrt(m.variance);
  out.standard_error = out.stddev / std::sqrt(static_cast<double>(reps));
  return out;
}

}  // namespace

const char* discrepancy_method_name(DiscrepancyMethod method) noexcept {
  switch (method) {
    case DiscrepancyMethod::exact: return "exact";
    case DiscrepancyMethod::cover: return "cover";
    default: return "auto";
  }
}

std::uint64_t RunConfig::point_count() const {
  return GridPartition(dimension, cells_per_axis).cell_count();
}

void RunConfig::validate() const {
  GridPartition probe(dimension, cells_per_axis);
  (void)probe;
  if (samplers.empty() || samplers.size() > 2) {
    throw std::domain_error("config needs one or two samplers");
  }
  if (replications < 2) throw std::domain_error("need at least two replications");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::domain_error("confidence must lie in (0,1)");
  }
  if (delta < 0.0 || delta > 1.0) throw std::domain_error("delta must lie in [0,1]");
}

DiscrepancyMethod RunConfig::resolved_method() const {
  if (method != DiscrepancyMethod::automatic) return method;
  const double work = std::pow(static_cast<double>(point_count()), static_cast<double>(dimension));
  return work <= kDefaultWorkGuard ? DiscrepancyMethod::exact : DiscrepancyMethod::cover;
}

double RunConfig::resolved_delta() const {
  if (delta > 0.0) return delta;
  return 1.0 / static_cast<double>(point_count());
}

DiscrepancySummary estimate_expected_discrepancy(const RunConfig& config, SamplerKind kind,
                                                 unsigned threads) {
  config.validate();
  const auto it = std::find(config.samplers.begin(), config.samplers.end(), kind);
  if (it == config.samplers.end()) {
    throw std::domain_error("sampler kind is not enabled in the config");
  }
  return estimate_by_position(config, static_cast<std::size_t>(it - config.samplers.begin()),
                              threads);
}

ExperimentResult compare_samplers(const RunConfig& config, unsigned threads) {
  config.validate();
  if (config.samplers.size() != 2) {
    throw std::domain_error("comparison needs exactly two samplers");
  }
  const auto start = std::chrono::steady_clock::now();

  ExperimentResult out;
  out.config = config;
  out.summaries.push_back(estimate_by_position(config, 0, threads));
  out.summaries.push_back(estimate_by_position(config, 1, threads));

  // Sign convention: simple minus jittered whenever both kinds appear,
  // first minus second otherwise.
  std::size_t lhs = 0;
  std::size_t rhs = 1;
  if (config.samplers[0] != config.samplers[1] &&
      config.samplers[0] == SamplerKind::jittered) {
    std::swap(lhs, rhs);
  }
  const WelchComparison w =
      welch_compare(out.summaries[lhs].samples, out.summaries[rhs].samples, config.confidence);
  out.difference = w.difference;
  out.ci_low = w.ci_low;
  out.ci_high = w.ci_high;
  out.t_statistic = w.t_statistic;
  out.degrees_of_freedom = w.degrees_of_freedom;
  out.p_value = w.p_value;
  if (w.ci_low > 0.0) {
    out.verdict = "confirmed";
  } else if (w.ci_high < 0.0) {
    out.verdict = "contradicted";
  } else {
    out.verdict = "inconclusive";
  }

  out.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

double tail_integral_expectation(std::span<const double> samples) {
  if (samples.empty()) throw std::domain_error("need at least one sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  for (double v : sorted) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::domain_error("samples must lie in [0,1]");
  }
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  double integral = 0.0;
  double prev = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    integral += (sorted[k] - prev) * (n - static_cast<double>(k)) / n;
    prev = sorted[k];
  }
  return integral;
}

WelchComparison welch_compare(std::span<const double> first, std::span<const double> second,
                              double confidence) {
  if (first.size() < 2 || second.size() < 2) {
    throw std::domain_error("welch comparison needs at least two samples per side");
  }
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::domain_error("confidence must lie in (0,1)");
  }
  const Moments a = sample_moments(first);
  const Moments b = sample_moments(second);
  const auto n1 = static_cast<double>(first.size());
  const auto n2 = static_cast<double>(second.size());
  const double q1 = a.variance / n1;
  const double q2 = b.variance / n2;

  WelchComparison out;
  out.difference = a.mean - b.mean;
  out.standard_error = std::sqrt(q1 + q2);
  if (out.standard_error == 0.0) {
    out.degrees_of_freedom = n1 + n2 - 2.0;
    out.t_statistic = out.difference == 0.0
                          ? 0.0
                          : std::copysign(std::numeric_limits<double>::infinity(), out.difference);
    out.p_value = out.difference == 0.0 ? 1.0 : 0.0;
    out.ci_low = out.ci_high = out.difference;
    return out;
  }
  out.degrees_of_freedom =
      (q1 + q2) * (q1 + q2) / (q1 * q1 / (n1 - 1.0) + q2 * q2 / (n2 - 1.0));
  out.t_statistic = out.difference / out.standard_error;

  const boost::math::students_t dist(out.degrees_of_freedom);
  out.p_value = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(out.t_statistic)));
  const double tq = boost::math::quantile(dist, 0.5 + confidence / 2.0);
  out.ci_low = out.difference - tq * out.standard_error;
  out.ci_high = out.difference + tq * out.standard_error;
  return out;
}

}  // namespace stardis
