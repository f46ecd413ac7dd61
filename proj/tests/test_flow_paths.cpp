#include <doctest.h>

#include <random>

#include "orient/connectivity.hpp"
#include "orient/flow_paths.hpp"
#include "orient/graph_io.hpp"
#include "orient/oracle.hpp"
#include "orient/unit_flow.hpp"
#include "support/graph_family.hpp"

using namespace orient;
using namespace orient::testing;

namespace {

int max_flow_lambda(const Orientation& d, int u, int v) {
  return network_of(d).max_flow(u, v);
}

Orientation random_orientation(const Multigraph& g, std::mt19937_64& rng) {
  Orientation d(g);
  for (int e = 0; e < g.edge_count(); ++e) d.set_forward(e, rng() & 1U);
  return d;
}

void check_path_shape(const Orientation& d, const PathResult& p, int s, int t) {
  REQUIRE(p.found);
  REQUIRE_FALSE(p.arcs.empty());
  CHECK(p.arcs.front().from == s);
  CHECK(p.arcs.back().to == t);
  std::vector<int> seen(d.edge_count(), 0);
  for (std::size_t i = 0; i < p.arcs.size(); ++i) {
    const Arc& a = p.arcs[i];
    CHECK(d.tail(a.edge) == a.from);
    CHECK(d.head(a.edge) == a.to);
    CHECK(seen[a.edge]++ == 0);
    if (i > 0) CHECK(p.arcs[i - 1].to == a.from);
  }
}

}  // namespace

TEST_CASE("find_directed_path examples") {
  const Multigraph tri = triangle();
  const Orientation d(tri);  // 0->1->2->0

  PathResult p = find_directed_path(d, 1, 0);
  REQUIRE(p.found);
  CHECK(p.arcs == std::vector<Arc>{{1, 1, 2}, {2, 2, 0}});

  std::vector<std::uint8_t> forbid{0, 1, 0};
  CHECK_FALSE(find_directed_path(d, 1, 0, forbid).found);

  const Multigraph two = bundle(2);
  PathResult single = find_directed_path(parse_orientation(two, "+-"), 0, 1);
  REQUIRE(single.found);
  CHECK(single.arcs == std::vector<Arc>{{0, 0, 1}});

  CHECK_THROWS_AS(find_directed_path(d, 1, 1), std::invalid_argument);
}

TEST_CASE("find_directed_path prefers the lowest edge index among ties") {
  const Multigraph three = bundle(3);
  PathResult p = find_directed_path(parse_orientation(three, "-++"), 0, 1);
  REQUIRE(p.found);
  CHECK(p.arcs.front().edge == 1);
}

TEST_CASE("found paths are arc-simple directed shortest paths") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Multigraph g = random_connected(rng, n, n + static_cast<int>(rng() % 8));
    const Orientation d = random_orientation(g, rng);
    const int s = static_cast<int>(rng() % n);
    const int t = (s + 1 + static_cast<int>(rng() % (n - 1))) % n;
    PathResult p = find_directed_path(d, s, t);
    CHECK(p.found == (max_flow_lambda(d, s, t) > 0));
    if (p.found) check_path_shape(d, p, s, t);
  }
}

TEST_CASE("reverse_path examples") {
  const Multigraph tri = triangle();
  const Orientation d(tri);
  const Orientation r = reverse_path(d, find_directed_path(d, 1, 0));
  CHECK(r.outdegree(1) == d.outdegree(1) - 1);
  CHECK(r.outdegree(0) == d.outdegree(0) + 1);
  CHECK(r.outdegree(2) == d.outdegree(2));

  const Orientation single = reverse_path(d, PathResult{true, {{0, 0, 1}}});
  CHECK(single.tail(0) == 1);
  CHECK(single.head(0) == 0);

  const std::vector<int> whole{0, 1, 2};
  CHECK(d.reversed(whole).outdegrees() == d.outdegrees());
}

TEST_CASE("reverse_path rejects non-paths") {
  const Multigraph tri = triangle();
  const Orientation d(tri);
  CHECK_THROWS_AS(reverse_path(d, PathResult{}), std::invalid_argument);
  CHECK_THROWS_AS(reverse_path(d, PathResult{true, {{0, 1, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(reverse_path(d, PathResult{true, {{0, 0, 1}, {2, 2, 0}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(reverse_path(d, PathResult{true, {{0, 0, 1}, {1, 1, 2}, {2, 2, 0}, {0, 0, 1}}}),
                  std::invalid_argument);
}

TEST_CASE("reversing a u-v path shifts cut outdegrees by the break-connect law") {
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 200) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Multigraph g = random_connected(rng, n, n + static_cast<int>(rng() % 6));
    const Orientation d = random_orientation(g, rng);
    const int u = static_cast<int>(rng() % n);
    const int v = (u + 1 + static_cast<int>(rng() % (n - 1))) % n;
    PathResult p = find_directed_path(d, u, v);
    if (!p.found) continue;
    ++checked;
    const Orientation r = reverse_path(d, p);
    for (std::uint64_t x = 1; x + 1 < (std::uint64_t{1} << n); ++x) {
      const CutSet cut = CutSet::from_mask(n, x);
      int expected = cut_outdegree(d, cut);
      if (!cut.contains(u) && cut.contains(v)) ++expected;
      if (cut.contains(u) && !cut.contains(v)) --expected;
      CHECK(cut_outdegree(r, cut) == expected);
    }
  }
}

TEST_CASE("lambda_at_least examples") {
  const Multigraph tri = triangle();
  const Orientation d(tri);
  CHECK(lambda_at_least(d, 0, 1, 1));
  CHECK_FALSE(lambda_at_least(d, 0, 1, 2));

  const Multigraph dt = doubled(triangle());
  const Orientation opposite = parse_orientation(dt, "+-+-+-");
  CHECK(max_flow_lambda(opposite, 0, 1) == 2);
  CHECK(lambda_at_least(opposite, 0, 1, 2));
  CHECK_FALSE(lambda_at_least(opposite, 0, 1, 3));

  CHECK_THROWS_AS(lambda_at_least(d, 0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(lambda_at_least(d, 0, 1, 0), std::invalid_argument);
}

TEST_CASE("lambda_at_least leaves its input untouched") {
  const Multigraph dt = doubled(triangle());
  const Orientation d = parse_orientation(dt, "+-+-+-");
  const Orientation before = d;
  (void)lambda_at_least(d, 0, 1, 2);
  CHECK(d == before);
}

TEST_CASE("path reversal lambda matches an independent max-flow") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Multigraph g = random_connected(rng, n, n + static_cast<int>(rng() % 8));
    const Orientation d = random_orientation(g, rng);
    const int u = static_cast<int>(rng() % n);
    const int v = (u + 1 + static_cast<int>(rng() % (n - 1))) % n;
    const int exact = max_flow_lambda(d, u, v);
    CHECK(path_reversal_lambda(d, u, v) == exact);
    for (int t = 1; t <= exact + 1; ++t) {
      CHECK(lambda_at_least(d, u, v, t) == (exact >= t));
    }
  }
}

TEST_CASE("path reversal lowers lambda(u,v) by one and keeps the min bound") {
  // Exhaustive over all orientations of a few graphs with m <= 8.
  const std::vector<Multigraph> graphs{doubled(triangle()), complete(4), wheel(3),
                                       doubled(path(3)), cycle(5)};
  for (const Multigraph& g : graphs) {
    const int n = g.vertex_count();
    oracle::all_orientations(g, [&](const Orientation& d) {
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if (u == v) continue;
          PathResult p = find_directed_path(d, u, v);
          if (!p.found) continue;
          const Orientation r = reverse_path(d, p);
          const int before = max_flow_lambda(d, u, v);
          CHECK(max_flow_lambda(r, u, v) == before - 1);
          for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
              if (a == b) continue;
              CHECK(max_flow_lambda(r, a, b) >=
                    std::min(before - 1, max_flow_lambda(d, a, b)));
            }
          }
        }
      }
    });
  }
}

TEST_CASE("is_flippable_pair examples") {
  const Multigraph tri = triangle();
  const Orientation d(tri);
  for (int u = 0; u < 3; ++u) {
    for (int v = 0; v < 3; ++v) {
      if (u != v) CHECK_FALSE(is_flippable_pair(d, u, v, 1));
    }
  }
  const Multigraph dt = doubled(triangle());
  CHECK(is_flippable_pair(parse_orientation(dt, "+-+-+-"), 0, 1, 1));

  const Multigraph c4 = cycle(4);
  CHECK_FALSE(is_flippable_pair(Orientation(c4), 0, 2, 1));
  CHECK_FALSE(is_flippable_pair(Orientation(c4), 3, 1, 1));
}

TEST_CASE("flipping a flippable pair preserves k-connectivity") {
  const std::vector<Multigraph> graphs{doubled(triangle()), complete(4), bundle(5),
                                       doubled(cycle(4))};
  for (const Multigraph& g : graphs) {
    const int n = g.vertex_count();
    for (int k = 1; k <= 2; ++k) {
      oracle::all_orientations(g, [&](const Orientation& d) {
        if (!oracle::is_k_connected(d, k)) return;
        for (int u = 0; u < n; ++u) {
          for (int v = 0; v < n; ++v) {
            if (u == v || !is_flippable_pair(d, u, v, k)) continue;
            const Orientation r = reverse_path(d, find_directed_path(d, u, v));
            CHECK(is_k_connected(r, k));
          }
        }
      });
    }
  }
}

TEST_CASE("delay meter counts one BFS per search") {
  const Multigraph tri = triangle();
  DelayMeter meter;
  (void)lambda_at_least(Orientation(tri), 0, 1, 2, &meter);
  CHECK(meter.total_bfs_runs() == 2);
  CHECK(meter.total_operations() > 2);
}
