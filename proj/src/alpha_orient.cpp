#include "orient/alpha_orient.hpp"

#include <numeric>
#include <stdexcept>

namespace orient {

namespace {

class AlphaSearch {
 public:
  AlphaSearch(const Orientation& start, const OrientationSink& sink,
              const AlphaOptions& options)
      : current_(start),
        fixed_(start.edge_count(), 0),
        sink_(sink),
        options_(options) {}

  std::uint64_t run() {
    visit(0);
    return count_;
  }

 private:
  void visit(int next) {
    if (options_.on_node) options_.on_node(current_, next);
    if (next == current_.edge_count()) {
      ++count_;
      if (options_.meter) options_.meter->emit();
      sink_(current_);
      return;
    }
    fixed_[next] = 1;
    visit(next + 1);

    // A v-u path closes a directed cycle with the arc (u, v). Fixed edges
    // are excluded, and so is `next` itself: a simple path ending at u
    // never leaves u.
    const int u = current_.tail(next);
    const int v = current_.head(next);
    PathResult path = find_directed_path(current_, v, u, fixed_, options_.meter);
    if (path.found) {
      flip_arcs(current_, path.arcs, options_.meter);
      current_.flip(next);
      visit(next + 1);
      current_.flip(next);
      flip_arcs(current_, path.arcs, options_.meter);
    }
    fixed_[next] = 0;
  }

  Orientation current_;
  std::vector<std::uint8_t> fixed_;
  const OrientationSink& sink_;
  const AlphaOptions& options_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::optional<Orientation> find_alpha_orientation(const Multigraph& g,
                                                  const DegreeSequence& alpha,
                                                  DelayMeter* meter) {
  const int n = g.vertex_count();
  if (alpha.size() != n) {
    throw std::invalid_argument("alpha has " + std::to_string(alpha.size()) +
                                " entries, graph has " + std::to_string(n) +
                                " vertices");
  }
  long long total = 0;
  for (int v = 0; v < n; ++v) {
    if (alpha[v] < 0) throw std::invalid_argument("alpha has a negative entry");
    if (alpha[v] > g.degree(v)) return std::nullopt;
    total += alpha[v];
  }
  if (total != g.edge_count()) return std::nullopt;

  Orientation d(g);
  std::vector<int> excess(n);
  for (int v = 0; v < n; ++v) excess[v] = d.outdegree(v) - alpha[v];
  if (meter) meter->touch(2 * g.edge_count());

  for (int v = 0; v < n; ++v) {
    while (excess[v] > 0) {
      PathResult path = find_directed_path_to_any(
          d, v, [&excess](int w) { return excess[w] < 0; }, {}, meter);
      // Nothing with a deficit is reachable: the reachable set already
      // spends more outdegree on its internal edges than alpha allows.
      if (!path.found) return std::nullopt;
      flip_arcs(d, path.arcs, meter);
      --excess[v];
      ++excess[path.arcs.back().to];
    }
  }
  return d;
}

std::uint64_t enumerate_alpha_from(const Orientation& start,
                                   const OrientationSink& sink,
                                   const AlphaOptions& options) {
  return AlphaSearch(start, sink, options).run();
}

std::uint64_t enumerate_alpha(const Multigraph& g, const DegreeSequence& alpha,
                              const OrientationSink& sink,
                              const AlphaOptions& options) {
  std::optional<Orientation> start = find_alpha_orientation(g, alpha, options.meter);
  std::uint64_t count = 0;
  if (start) count = enumerate_alpha_from(*start, sink, options);
  if (options.meter) options.meter->finish();
  return count;
}

std::optional<std::vector<DirectedCycle>> same_alpha_cycle_decomposition(
    const Orientation& d, const Orientation& target) {
  const Multigraph& g = d.graph();
  if (&g != &target.graph() && !(g == target.graph())) {
    throw std::invalid_argument("orientations of different graphs");
  }
  if (d.outdegrees() != target.outdegrees()) return std::nullopt;

  // Differing arcs of d form an Eulerian subdigraph; peel cycles off a walk.
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out(n);
  for (int e = 0; e < d.edge_count(); ++e) {
    if (d.is_forward(e) != target.is_forward(e)) out[d.tail(e)].push_back(e);
  }
  std::vector<std::size_t> cursor(n, 0);
  std::vector<int> position(n, -1);
  std::vector<DirectedCycle> cycles;

  for (int s = 0; s < n; ++s) {
    while (cursor[s] < out[s].size()) {
      std::vector<int> walk{s};
      std::vector<Arc> arcs;
      position[s] = 0;
      int x = s;
      for (;;) {
        const int e = out[x][cursor[x]++];
        const int y = d.head(e);
        arcs.push_back({e, x, y});
        if (position[y] >= 0) {
          const int at = position[y];
          cycles.emplace_back(arcs.begin() + at, arcs.end());
          arcs.resize(at);
          for (std::size_t i = at + 1; i < walk.size(); ++i) position[walk[i]] = -1;
          walk.resize(at + 1);
          if (arcs.empty()) break;
        } else {
          position[y] = static_cast<int>(walk.size());
          walk.push_back(y);
        }
        x = y;
      }
      position[s] = -1;
    }
  }
  return cycles;
}

}  // namespace orient
