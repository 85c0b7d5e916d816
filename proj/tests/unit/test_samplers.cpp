#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "support/oracles.hpp"
#include "stardis/samplers.hpp"

using stardis::GridPartition;
using stardis::PointSet;
using stardis::RandomStream;
using stardis::SamplerKind;

TEST_CASE("random stream is reproducible and uniform-range") {
  RandomStream a(42);
  RandomStream b(42);
  for (int i = 0; i < 1000; ++i) {
    const double x = a.next_double();
    CHECK(x == b.next_double());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  RandomStream c(43);
  CHECK(RandomStream(42).next_u64() != c.next_u64());
  CHECK(a.seed() == 42);
}

TEST_CASE("derived streams are deterministic and distinct") {
  RandomStream s0 = stardis::derive_stream(5, 0);
  RandomStream s0_again = stardis::derive_stream(5, 0);
  RandomStream s1 = stardis::derive_stream(5, 1);
  const double first0 = s0.next_double();
  CHECK(first0 == s0_again.next_double());
  CHECK(first0 != s1.next_double());

  std::set<std::uint64_t> seeds;
  for (std::uint64_t k = 0; k < 1000; ++k) {
    seeds.insert(stardis::derive_stream(5, k).seed());
  }
  CHECK(seeds.size() == 1000);
}

TEST_CASE("first deviates across derived streams look uniform") {
  std::vector<double> firsts;
  firsts.reserve(1000);
  for (std::uint64_t k = 0; k < 1000; ++k) {
    RandomStream s = stardis::derive_stream(99, k);
    firsts.push_back(s.next_double());
  }
  CHECK(oracle::ks_uniform_statistic(firsts) < oracle::ks_uniform_critical_1pct(firsts.size()));
}

TEST_CASE("point set validation and layout") {
  CHECK_THROWS_AS(PointSet(0, 3), std::domain_error);
  CHECK_THROWS_AS(PointSet(2, 0), std::domain_error);
  PointSet p(2, 3);
  p.coord(2, 1) = 0.25;
  CHECK(p.axis_coords(1)[2] == 0.25);
  CHECK(p.axis_coords(0).size() == 3);
  CHECK(p.point(2) == std::vector<double>{0.0, 0.25});
}

TEST_CASE("simple_random determinism and provenance") {
  CHECK_THROWS_AS(
      [] {
        RandomStream s(1);
        stardis::simple_random(0, 1, s);
      }(),
      std::domain_error);

  RandomStream s1(42);
  RandomStream s2(42);
  const PointSet a = stardis::simple_random(64, 2, s1);
  const PointSet b = stardis::simple_random(64, 2, s2);
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    CHECK(a.coord(i, 0) == b.coord(i, 0));
    CHECK(a.coord(i, 1) == b.coord(i, 1));
  }
  REQUIRE(a.provenance.has_value());
  CHECK(a.provenance->kind == SamplerKind::simple);
  CHECK(a.provenance->seed == 42);

  // Deviates are drawn point-major.
  RandomStream s3(42);
  const double first = s3.next_double();
  const double second = s3.next_double();
  CHECK(a.coord(0, 0) == first);
  CHECK(a.coord(0, 1) == second);
}

TEST_CASE("simple_random mean near one half") {
  RandomStream s(7);
  const PointSet p = stardis::simple_random(10000, 1, s);
  double mean = 0.0;
  for (std::uint64_t i = 0; i < p.size(); ++i) mean += p.coord(i, 0);
  mean /= static_cast<double>(p.size());
  CHECK(std::abs(mean - 0.5) < 0.015);  // 5 sigma of sqrt(1/12/n)
}

TEST_CASE("simple_random marginals pass a KS check") {
  RandomStream s(123);
  const PointSet p = stardis::simple_random(10000, 3, s);
  for (std::uint32_t j = 0; j < 3; ++j) {
    const auto axis = p.axis_coords(j);
    CHECK(oracle::ks_uniform_statistic({axis.begin(), axis.end()}) <
          oracle::ks_uniform_critical_1pct(axis.size()));
  }
}

TEST_CASE("jittered stratification: one point per cell, in id order") {
  for (const std::uint32_t d : {1u, 2u, 3u}) {
    for (const std::uint32_t m : {1u, 2u, 3u, 4u, 7u}) {
      const GridPartition g(d, m);
      RandomStream s(17 + d + m);
      const PointSet p = stardis::jittered(g, s);
      REQUIRE(p.size() == g.cell_count());
      for (std::uint64_t i = 0; i < p.size(); ++i) {
        CHECK(g.cell_index(p.point(i)) == i);
      }
      REQUIRE(p.provenance.has_value());
      CHECK(p.provenance->kind == SamplerKind::jittered);
      CHECK(p.provenance->cells_per_axis == m);
    }
  }
}

TEST_CASE("jittered with one cell matches simple_random bitwise") {
  RandomStream s1(99);
  RandomStream s2(99);
  const PointSet j = stardis::jittered(GridPartition(1, 1), s1);
  const PointSet r = stardis::simple_random(1, 1, s2);
  CHECK(j.coord(0, 0) == r.coord(0, 0));
}

TEST_CASE("jittered per-cell means sit at cell centers") {
  const std::uint32_t m = 4;
  const GridPartition g(1, m);
  const int reps = 10000;
  std::vector<double> sums(m, 0.0);
  RandomStream s(2718);
  for (int r = 0; r < reps; ++r) {
    const PointSet p = stardis::jittered(g, s);
    for (std::uint32_t k = 0; k < m; ++k) sums[k] += p.coord(k, 0);
  }
  // Uniform on a cell of width 1/m: sd = 1/(m sqrt(12)).
  const double tol = 5.0 / (m * std::sqrt(12.0)) / std::sqrt(static_cast<double>(reps));
  for (std::uint32_t k = 0; k < m; ++k) {
    const double center = (k + 0.5) / m;
    CHECK(std::abs(sums[k] / reps - center) < tol);
  }
}

TEST_CASE("jittered coordinates within cells are uniform under KS") {
  const std::uint32_t m = 3;
  const GridPartition g(1, m);
  RandomStream s(31);
  std::vector<std::vector<double>> rescaled(m);
  for (int r = 0; r < 2000; ++r) {
    const PointSet p = stardis::jittered(g, s);
    for (std::uint32_t k = 0; k < m; ++k) {
      rescaled[k].push_back(p.coord(k, 0) * m - k);
    }
  }
  for (std::uint32_t k = 0; k < m; ++k) {
    CHECK(oracle::ks_uniform_statistic(rescaled[k]) <
          oracle::ks_uniform_critical_1pct(rescaled[k].size()));
  }
}
