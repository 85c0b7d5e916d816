// Acceptance suite: runs every acceptance criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion. Exit status is
// the number of failed criteria.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "stardis/analysis.hpp"
#include "stardis/discrepancy.hpp"
#include "stardis/experiment.hpp"
#include "stardis/geometry.hpp"
#include "stardis/io.hpp"
#include "stardis/rng.hpp"
#include "stardis/samplers.hpp"

namespace {

struct Checker {
  int failures = 0;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      notes.push_back(what);
    }
  }
};

using CriterionFn = std::function<void(Checker&)>;

// 1. Exact-engine oracle: midpoint lattices give exactly 1/(2N); random
//    1D sets match the order-statistics formula.
void criterion_exact_oracle(Checker& check) {
  for (std::uint64_t n = 1; n <= 64; ++n) {
    stardis::PointSet p(1, n);
    for (std::uint64_t i = 0; i < n; ++i) {
      p.coord(i, 0) = static_cast<double>(2 * i + 1) / static_cast<double>(2 * n);
    }
    const double got = stardis::exact_star_discrepancy(p).value;
    const double want = 1.0 / static_cast<double>(2 * n);
    check.require(std::abs(got - want) <= 1e-12,
                  "midpoint lattice N=" + std::to_string(n) + " off by " +
                      std::to_string(std::abs(got - want)));
  }

  stardis::RandomStream rng(1001);
  for (int t = 0; t < 50; ++t) {
    const std::uint64_t n = 1 + rng.next_u64() % 64;
    stardis::PointSet p(1, n);
    std::vector<double> flat(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      flat[i] = rng.next_double();
      p.coord(i, 0) = flat[i];
    }
    const double got = stardis::exact_star_discrepancy(p).value;
    const double want = oracle::star_discrepancy_1d(flat);
    check.require(std::abs(got - want) <= 1e-12,
                  "random 1d set " + std::to_string(t) + " disagrees with order statistics");
  }
}

// 2. Discretization guarantee: cover <= exact <= cover + delta.
void criterion_cover_bracket(Checker& check) {
  stardis::RandomStream rng(1002);
  for (int t = 0; t < 100; ++t) {
    const auto d = static_cast<std::uint32_t>(1 + rng.next_u64() % 3);
    const std::uint64_t n = 1 + rng.next_u64() % 64;
    stardis::PointSet p(d, n);
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < d; ++j) p.coord(i, j) = rng.next_double();
    }
    const double exact = stardis::exact_star_discrepancy(p).value;
    for (const double delta : {0.2, 0.1, 0.05}) {
      const double cover = stardis::cover_discrepancy(p, stardis::build_delta_cover(d, delta));
      check.require(cover <= exact + 1e-12, "cover exceeds exact (set " + std::to_string(t) +
                                                ", delta " + std::to_string(delta) + ")");
      check.require(exact <= cover + delta + 1e-12,
                    "exact above cover+delta (set " + std::to_string(t) + ", delta " +
                        std::to_string(delta) + ")");
    }
  }
}

// 3. Variance formulas against 1e5-replication empirical variances;
//    Cauchy-Schwarz gap sign.
void criterion_variance_formulas(Checker& check) {
  stardis::RandomStream rng(1003);
  const int reps = 100000;
  for (int pair = 0; pair < 20; ++pair) {
    const auto d = static_cast<std::uint32_t>(1 + rng.next_u64() % 3);
    const auto m = static_cast<std::uint32_t>(2 + rng.next_u64() % 4);
    const stardis::GridPartition grid(d, m);
    std::vector<double> corner(d);
    bool off_lattice = true;
    for (auto& c : corner) {
      do {
        c = rng.next_double();
      } while (c == 0.0);
      off_lattice = off_lattice && c * m != std::floor(c * m);
    }
    const stardis::AnchoredBox box(corner);

    const auto count_inside = [&](const stardis::PointSet& points) {
      std::uint64_t c = 0;
      for (std::uint64_t i = 0; i < points.size(); ++i) {
        bool inside = true;
        for (std::uint32_t j = 0; j < d; ++j) {
          inside = inside && points.coord(i, j) < corner[j];
        }
        c += inside ? 1 : 0;
      }
      return static_cast<double>(c);
    };

    std::vector<double> jit(reps);
    std::vector<double> sim(reps);
    for (int r = 0; r < reps; ++r) {
      stardis::RandomStream js = stardis::derive_stream(9000 + pair, 2 * r);
      stardis::RandomStream ss = stardis::derive_stream(9000 + pair, 2 * r + 1);
      jit[r] = count_inside(stardis::jittered(grid, js));
      sim[r] = count_inside(stardis::simple_random(grid.cell_count(), d, ss));
    }

    const auto jm = oracle::moments(jit);
    const auto sm = oracle::moments(sim);
    const double j_analytic = stardis::stratified_count_variance(grid, box);
    const double s_analytic = stardis::simple_count_variance(grid.cell_count(), box);
    const double j_se = oracle::variance_standard_error(jm, jit.size());
    const double s_se = oracle::variance_standard_error(sm, sim.size());
    check.require(std::abs(jm.variance - j_analytic) <= 3.0 * j_se + 1e-12,
                  "stratified variance off at pair " + std::to_string(pair) + ": analytic " +
                      std::to_string(j_analytic) + " empirical " + std::to_string(jm.variance));
    check.require(std::abs(sm.variance - s_analytic) <= 3.0 * s_se + 1e-12,
                  "simple variance off at pair " + std::to_string(pair) + ": analytic " +
                      std::to_string(s_analytic) + " empirical " + std::to_string(sm.variance));

    const auto cmp = stardis::variance_comparison(grid, box);
    check.require(cmp.gap >= -1e-12, "gap negative at pair " + std::to_string(pair));
    if (off_lattice) {
      check.require(cmp.gap > 0.0, "gap not strictly positive off-lattice at pair " +
                                       std::to_string(pair));
    }
  }
}

// 4. Strong partition principle: d=2, m in {2,3,4}, R=2000, exact; the
//    99% CI of E[D*(simple)] - E[D*(jittered)] sits above 0 for every
//    seed in the fixed panel.
void criterion_partition_principle(Checker& check) {
  for (const std::uint32_t m : {2u, 3u, 4u}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      stardis::RunConfig config;
      config.dimension = 2;
      config.cells_per_axis = m;
      config.replications = 2000;
      config.master_seed = seed;
      config.method = stardis::DiscrepancyMethod::exact;
      config.confidence = 0.99;
      const auto result = stardis::compare_samplers(config, 1);
      check.require(result.verdict == "confirmed" && result.ci_low > 0.0,
                    "m=" + std::to_string(m) + " seed=" + std::to_string(seed) +
                        ": ci_low=" + std::to_string(result.ci_low) + " verdict=" +
                        result.verdict);
    }
  }
}

// 5. Bound-function fidelity: A(2,0.5,4), the A >= 3 grid, and Bernstein
//    empirical soundness.
void criterion_bound_fidelity(Checker& check) {
  const double a = stardis::bound_exponent_a(2, 0.5, 4);
  check.require(std::abs(a - 6.0328) <= 5e-4,
                "A(2,0.5,4) = " + std::to_string(a) + " not within 5e-4 of 6.0328");

  for (const std::uint32_t d : {2u, 3u, 4u}) {
    for (std::uint32_t m = d; m <= 8; ++m) {
      const auto n = stardis::GridPartition(d, m).cell_count();
      for (const double q : {1e-6, 0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999}) {
        check.require(stardis::bound_exponent_a(d, q, n) >= 3.0,
                      "A < 3 at d=" + std::to_string(d) + " m=" + std::to_string(m) +
                          " q=" + std::to_string(q));
      }
    }
  }

  const int n_terms = 64;
  const double p = 0.3;
  const double sigma_sq = n_terms * p * (1.0 - p);
  const double sigma = std::sqrt(sigma_sq);
  const int trials = 100000;
  stardis::RandomStream rng(1005);
  std::vector<double> sums(trials);
  for (int t = 0; t < trials; ++t) {
    int count = 0;
    for (int i = 0; i < n_terms; ++i) count += rng.next_double() < p ? 1 : 0;
    sums[t] = static_cast<double>(count) - n_terms * p;
  }
  for (const double mult : {1.0, 2.0, 3.0}) {
    const double lambda = mult * sigma;
    int exceed = 0;
    for (const double s : sums) exceed += std::abs(s) >= lambda ? 1 : 0;
    const double freq = static_cast<double>(exceed) / trials;
    const double bound = stardis::bernstein_tail_bound(sigma_sq, 1.0, lambda);
    const double se = std::sqrt(std::max(freq * (1.0 - freq), 1.0 / trials) / trials);
    check.require(freq <= bound + 3.0 * se,
                  "Bernstein bound violated at lambda=" + std::to_string(mult) +
                      "*sigma: freq=" + std::to_string(freq) + " bound=" +
                      std::to_string(bound));
  }
}

// 6. Identity checks: tail integral vs mean on real runs; the C1/C0
//    affine identity for the high-probability bound.
void criterion_identities(Checker& check) {
  for (const std::uint64_t seed : {21ull, 22ull, 23ull}) {
    stardis::RunConfig config;
    config.dimension = 2;
    config.cells_per_axis = 3;
    config.replications = 400;
    config.master_seed = seed;
    for (const auto kind : {stardis::SamplerKind::simple, stardis::SamplerKind::jittered}) {
      const auto est = stardis::estimate_expected_discrepancy(config, kind, 1);
      const double integral = stardis::tail_integral_expectation(est.samples);
      check.require(std::abs(integral - est.mean) <= 1e-12,
                    "tail integral deviates from mean by " +
                        std::to_string(std::abs(integral - est.mean)));
    }
  }

  stardis::RandomStream rng(1006);
  for (int t = 0; t < 500; ++t) {
    const auto d = static_cast<std::uint32_t>(1 + rng.next_u64() % 4);
    const std::uint64_t n = 1 + rng.next_u64() % 4096;
    const double sigma0 = 3.0 * rng.next_double();
    const double q = std::min(0.999999, std::max(1e-9, rng.next_double()));
    const auto c = stardis::bound_constants(d, n, sigma0);
    const double via_constants = c.c1 - c.c0 * std::log1p(-q);
    const double direct = stardis::high_prob_discrepancy_bound(d, q, n, sigma0);
    check.require(std::abs(via_constants - direct) <= 1e-12 * std::max(1.0, std::abs(direct)),
                  "C1 - C0 ln(1-q) identity off at trial " + std::to_string(t));
  }
}

// 7. Determinism: CLI experiment output is bitwise identical across
//    reruns and thread counts.
void criterion_cli_determinism(Checker& check) {
  const std::string dir = "/tmp/stardis_acceptance_" + std::to_string(getpid());
  std::system(("mkdir -p " + dir).c_str());
  const std::string cfg = dir + "/cfg.json";
  {
    std::ofstream out(cfg);
    out << R"({"dimension": 2, "cells_per_axis": 3, "replications": 120, "master_seed": 77})";
  }
  const auto run_one = [&](const std::string& csv, int threads) {
    const std::string cmd = std::string(STARDIS_CLI_PATH) + " experiment --config " + cfg +
                            " --out " + csv + " --summary " + dir + "/summary.json --threads " +
                            std::to_string(threads) + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) && WEXITSTATUS(status) == 0;
  };
  const auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  check.require(run_one(dir + "/a.csv", 1), "experiment run (threads=1) failed");
  check.require(run_one(dir + "/b.csv", 4), "experiment run (threads=4) failed");
  check.require(run_one(dir + "/c.csv", 2), "experiment rerun (threads=2) failed");
  const std::string bytes = slurp(dir + "/a.csv");
  check.require(!bytes.empty(), "experiment csv is empty");
  check.require(bytes == slurp(dir + "/b.csv"), "csv differs between thread counts 1 and 4");
  check.require(bytes == slurp(dir + "/c.csv"), "csv differs across reruns");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, CriterionFn>> criteria{
      {"exact-engine oracle (1d lattices and order statistics)", criterion_exact_oracle},
      {"discretization guarantee (cover brackets exact)", criterion_cover_bracket},
      {"variance formulas vs 1e5-replication empirical variances", criterion_variance_formulas},
      {"strong partition principle (d=2, m=2..4, 10-seed panel)", criterion_partition_principle},
      {"bound-function fidelity (A, A>=3 grid, Bernstein)", criterion_bound_fidelity},
      {"identities (tail integral, C1 - C0 ln(1-q))", criterion_identities},
      {"CLI determinism (bitwise CSV across threads)", criterion_cli_determinism},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker check;
    const auto start = std::chrono::steady_clock::now();
    criteria[i].second(check);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = check.failures == 0;
    failed += ok ? 0 : 1;
    std::ostringstream line;
    line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first
         << " (" << std::fixed << secs << "s)";
    std::cout << line.str() << '\n';
    if (!ok) {
      int shown = 0;
      for (const auto& note : check.notes) {
        std::cout << "       - " << note << '\n';
        if (++shown == 8) {
          std::cout << "       - (" << check.notes.size() - 8 << " more)\n";
          break;
        }
      }
    }
  }
  std::cout << (failed == 0 ? "all criteria passed" : "criteria failed: " + std::to_string(failed))
            << '\n';
  return failed;
}
