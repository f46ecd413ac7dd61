#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "orient/alpha_orient.hpp"
#include "orient/connectivity.hpp"
#include "orient/graph_io.hpp"
#include "orient/oracle.hpp"
#include "support/graph_family.hpp"

using namespace orient;
using namespace orient::testing;

namespace {

DegreeSequence seq(std::vector<int> v) { return DegreeSequence{std::move(v)}; }

std::vector<std::string> collect(const Multigraph& g, const DegreeSequence& alpha,
                                 const AlphaOptions& options = {}) {
  std::vector<std::string> out;
  enumerate_alpha(
      g, alpha, [&](const Orientation& d) { out.push_back(format_orientation(d)); },
      options);
  return out;
}

// Achievable outdegree sequences with their brute-force classes.
std::map<DegreeSequence, std::set<std::string>> classes(const Multigraph& g) {
  std::map<DegreeSequence, std::set<std::string>> by_alpha;
  oracle::all_orientations(g, [&](const Orientation& d) {
    by_alpha[d.outdegrees()].insert(format_orientation(d));
  });
  return by_alpha;
}

}  // namespace

TEST_CASE("find_alpha_orientation examples") {
  const Multigraph c4 = cycle(4);
  auto d = find_alpha_orientation(c4, seq({1, 1, 1, 1}));
  REQUIRE(d);
  CHECK(d->outdegrees() == seq({1, 1, 1, 1}));
  const std::string s = format_orientation(*d);
  CHECK((s == "++++" || s == "----"));

  const Multigraph tri = triangle();
  CHECK(oracle::alpha_orientations(tri, seq({2, 1, 0})) == std::set<std::string>{"++-"});
  auto unique = find_alpha_orientation(tri, seq({2, 1, 0}));
  REQUIRE(unique);
  CHECK(format_orientation(*unique) == "++-");

  CHECK_FALSE(find_alpha_orientation(tri, seq({3, 0, 0})));
  CHECK_FALSE(find_alpha_orientation(tri, seq({1, 1, 0})));
  CHECK_THROWS_AS(find_alpha_orientation(tri, seq({1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(find_alpha_orientation(tri, seq({-1, 2, 2})), std::invalid_argument);
}

TEST_CASE("find_alpha_orientation finds a member of every nonempty class") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Multigraph g = random_connected(rng, n, n - 1 + static_cast<int>(rng() % 6));
    const auto by_alpha = classes(g);
    // Every vector with entries in 0..deg(v) summing to m.
    std::vector<int> alpha(n, 0);
    std::function<void(int, int)> sweep = [&](int v, int left) {
      if (v == n) {
        if (left != 0) return;
        const DegreeSequence a{alpha};
        auto found = find_alpha_orientation(g, a);
        CHECK(found.has_value() == (by_alpha.count(a) == 1));
        if (found) CHECK(found->outdegrees() == a);
        return;
      }
      for (int x = 0; x <= std::min(g.degree(v), left); ++x) {
        alpha[v] = x;
        sweep(v + 1, left - x);
      }
    };
    sweep(0, g.edge_count());
  }
}

TEST_CASE("enumerate_alpha examples") {
  CHECK(collect(cycle(4), seq({1, 1, 1, 1})) == std::vector<std::string>{"++++", "----"});
  CHECK(collect(triangle(), seq({2, 1, 0})) == std::vector<std::string>{"++-"});

  // alpha = (2,2,2) on the doubled triangle: x copies 0->1 force x copies
  // 1->2 and 2-x copies 0->2, so 1 + 8 + 1 = 10 orientations.
  const Multigraph dt = doubled(triangle());
  const auto listed = collect(dt, seq({2, 2, 2}));
  const auto expected = oracle::alpha_orientations(dt, seq({2, 2, 2}));
  CHECK(expected.size() == 10);
  CHECK(listed.size() == 10);
  CHECK(std::set<std::string>(listed.begin(), listed.end()) == expected);

  CHECK(collect(triangle(), seq({3, 0, 0})).empty());
}

TEST_CASE("enumerate_alpha output order is fixed") {
  // Keep-before-reverse along edge order.
  const Multigraph dt = doubled(triangle());
  const auto listed = collect(dt, seq({2, 2, 2}));
  const auto again = collect(dt, seq({2, 2, 2}));
  CHECK(listed == again);
  auto start = find_alpha_orientation(dt, seq({2, 2, 2}));
  REQUIRE(start);
  CHECK(listed.front() == format_orientation(*start));
}

TEST_CASE("enumerate_alpha matches the brute-force classes exactly once") {
  std::vector<Multigraph> graphs{cycle(4), complete(4), doubled(triangle()), wheel(3),
                                 bundle(4), doubled(path(3)), path(4)};
  std::mt19937_64 rng(29);
  for (int i = 0; i < 40; ++i) {
    const int n = 2 + static_cast<int>(rng() % 4);
    graphs.push_back(random_connected(rng, n, n - 1 + static_cast<int>(rng() % 7)));
  }
  for (const Multigraph& g : graphs) {
    for (const auto& [alpha, members] : classes(g)) {
      std::vector<std::string> listed;
      enumerate_alpha(g, alpha, [&](const Orientation& d) {
        CHECK(d.outdegrees() == alpha);
        listed.push_back(format_orientation(d));
      });
      std::set<std::string> unique(listed.begin(), listed.end());
      CHECK(unique.size() == listed.size());
      CHECK(unique == members);
    }
  }
}

TEST_CASE("fixed edges never change inside a subtree") {
  const Multigraph g = doubled(cycle(4));
  auto start = find_alpha_orientation(g, seq({2, 2, 2, 2}));
  REQUIRE(start);
  // Stack of (fixed count, orientation) along the current branch.
  std::vector<std::pair<int, std::string>> branch;
  int violations = 0;
  AlphaOptions options;
  options.on_node = [&](const Orientation& d, int fixed) {
    while (!branch.empty() && branch.back().first >= fixed) branch.pop_back();
    const std::string s = format_orientation(d);
    for (const auto& [prefix, ancestor] : branch) {
      if (s.compare(0, prefix, ancestor, 0, prefix) != 0) ++violations;
    }
    branch.emplace_back(fixed, s);
  };
  const auto count = enumerate_alpha_from(*start, [](const Orientation&) {}, options);
  CHECK(count > 1);
  CHECK(violations == 0);
}

TEST_CASE("alpha enumeration delay stays within 2m searches and 8 m^2 operations") {
  std::vector<Multigraph> graphs{cycle(4), complete(4), doubled(triangle()),
                                 doubled(cycle(4)), wheel(4), doubled(wheel(3)),
                                 complete(5)};
  for (const Multigraph& g : graphs) {
    const std::uint64_t m = g.edge_count();
    for (const auto& [alpha, members] : classes(g)) {
      DelayMeter meter(true);
      const auto count =
          enumerate_alpha(g, alpha, [](const Orientation&) {}, AlphaOptions{&meter, {}});
      CHECK(count == members.size());
      CHECK(meter.gaps().size() == count + 1);
      CHECK(meter.max_gap().bfs_runs <= 2 * m);
      CHECK(meter.max_gap().operations <= 8 * m * m);
    }
  }
}

TEST_CASE("members of one alpha-class agree on k-connectivity") {
  const std::vector<Multigraph> graphs{complete(4), doubled(triangle()), doubled(cycle(4)),
                                       wheel(4), bundle(5)};
  for (const Multigraph& g : graphs) {
    for (const auto& [alpha, members] : classes(g)) {
      for (int k = 1; k <= 2; ++k) {
        std::set<bool> verdicts;
        for (const auto& s : members) {
          verdicts.insert(is_k_connected(parse_orientation(g, s), k));
        }
        CHECK(verdicts.size() == 1);
      }
    }
  }
}

TEST_CASE("same_alpha_cycle_decomposition examples") {
  const Multigraph c4 = cycle(4);
  const Orientation fwd(c4);
  auto none = same_alpha_cycle_decomposition(fwd, fwd);
  REQUIRE(none);
  CHECK(none->empty());

  auto one = same_alpha_cycle_decomposition(fwd, fwd.reversed_all());
  REQUIRE(one);
  REQUIRE(one->size() == 1);
  CHECK(one->front().size() == 4);

  const Multigraph tri = triangle();
  CHECK_FALSE(same_alpha_cycle_decomposition(Orientation(tri),
                                             parse_orientation(tri, "++-")));

  const Multigraph other = triangle();
  const Multigraph path3 = path(3);
  CHECK_NOTHROW(same_alpha_cycle_decomposition(Orientation(tri), Orientation(other)));
  CHECK_THROWS_AS(same_alpha_cycle_decomposition(Orientation(tri), Orientation(path3)),
                  std::invalid_argument);
}

TEST_CASE("reversing the returned cycles turns D into D2") {
  const std::vector<Multigraph> graphs{doubled(triangle()), complete(4), doubled(cycle(4))};
  for (const Multigraph& g : graphs) {
    for (const auto& [alpha, members] : classes(g)) {
      for (const auto& a : members) {
        for (const auto& b : members) {
          const Orientation d = parse_orientation(g, a);
          const Orientation target = parse_orientation(g, b);
          auto cycles = same_alpha_cycle_decomposition(d, target);
          REQUIRE(cycles);
          Orientation r = d;
          std::vector<int> used(g.edge_count(), 0);
          for (const DirectedCycle& c : *cycles) {
            REQUIRE_FALSE(c.empty());
            CHECK(c.back().to == c.front().from);
            for (std::size_t i = 0; i < c.size(); ++i) {
              CHECK(d.tail(c[i].edge) == c[i].from);
              CHECK(used[c[i].edge]++ == 0);
              if (i > 0) CHECK(c[i - 1].to == c[i].from);
            }
            flip_arcs(r, c);
          }
          CHECK(r == target);
        }
      }
    }
  }
}

TEST_CASE("graphs without edges have exactly one orientation") {
  const Multigraph lone(1, {});
  CHECK(collect(lone, seq({0})).size() == 1);
}
