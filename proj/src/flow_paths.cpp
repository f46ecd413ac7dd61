#include "orient/flow_paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace orient {

namespace {

void check_vertex(const Orientation& d, int v) {
  if (v < 0 || v >= d.graph().vertex_count()) {
    throw std::out_of_range("vertex out of range");
  }
}

PathResult bfs_path(const Orientation& d, int source,
                    const std::function<bool(int)>& is_target,
                    EdgeMask forbidden, DelayMeter* meter) {
  const Multigraph& g = d.graph();
  if (!forbidden.empty() && static_cast<int>(forbidden.size()) != g.edge_count()) {
    throw std::invalid_argument("forbidden mask length does not match edge count");
  }
  if (meter) meter->count_bfs();

  std::vector<int> via(g.vertex_count(), -1);
  std::vector<int> queue;
  queue.push_back(source);
  via[source] = -2;

  std::uint64_t touched = 0;
  int reached = -1;
  for (std::size_t head = 0; head < queue.size() && reached < 0; ++head) {
    const int x = queue[head];
    for (int e : g.incident(x)) {
      ++touched;
      if (d.tail(e) != x) continue;
      if (!forbidden.empty() && forbidden[e]) continue;
      const int y = d.head(e);
      if (via[y] != -1) continue;
      via[y] = e;
      if (is_target(y)) {
        reached = y;
        break;
      }
      queue.push_back(y);
    }
  }
  if (meter) meter->touch(touched);

  PathResult result;
  if (reached < 0) return result;
  result.found = true;
  for (int y = reached; y != source;) {
    const int e = via[y];
    const int x = d.tail(e);
    result.arcs.push_back({e, x, y});
    y = x;
  }
  std::reverse(result.arcs.begin(), result.arcs.end());
  return result;
}

}  // namespace

std::vector<int> PathResult::edges() const {
  std::vector<int> ids;
  ids.reserve(arcs.size());
  for (const Arc& a : arcs) ids.push_back(a.edge);
  return ids;
}

PathResult find_directed_path(const Orientation& d, int source, int target,
                              EdgeMask forbidden, DelayMeter* meter) {
  check_vertex(d, source);
  check_vertex(d, target);
  if (source == target) {
    throw std::invalid_argument("find_directed_path: source equals target");
  }
  return bfs_path(
      d, source, [target](int w) { return w == target; }, forbidden, meter);
}

PathResult find_directed_path_to_any(const Orientation& d, int source,
                                     const std::function<bool(int)>& is_target,
                                     EdgeMask forbidden, DelayMeter* meter) {
  check_vertex(d, source);
  return bfs_path(d, source, is_target, forbidden, meter);
}

Orientation reverse_path(const Orientation& d, const PathResult& path) {
  if (!path.found || path.arcs.empty()) {
    throw std::invalid_argument("reverse_path: no path");
  }
  std::vector<std::uint8_t> used(d.edge_count(), 0);
  for (std::size_t i = 0; i < path.arcs.size(); ++i) {
    const Arc& a = path.arcs[i];
    if (a.edge < 0 || a.edge >= d.edge_count() || d.tail(a.edge) != a.from ||
        d.head(a.edge) != a.to) {
      throw std::invalid_argument("reverse_path: arc not in orientation");
    }
    if (used[a.edge]) {
      throw std::invalid_argument("reverse_path: repeated edge");
    }
    used[a.edge] = 1;
    if (i > 0 && path.arcs[i - 1].to != a.from) {
      throw std::invalid_argument("reverse_path: arcs are not head-to-tail");
    }
  }
  Orientation out = d;
  flip_arcs(out, path.arcs);
  return out;
}

void flip_arcs(Orientation& d, std::span<const Arc> arcs, DelayMeter* meter) {
  for (const Arc& a : arcs) d.flip(a.edge);
  if (meter) meter->touch(arcs.size());
}

bool lambda_at_least(const Orientation& d, int u, int v, int threshold,
                     DelayMeter* meter) {
  if (u == v) throw std::invalid_argument("lambda_at_least: u equals v");
  if (threshold < 1) throw std::invalid_argument("lambda_at_least: threshold < 1");
  Orientation scratch = d;
  if (meter) meter->touch(d.edge_count());
  for (int i = 0; i < threshold; ++i) {
    PathResult p = find_directed_path(scratch, u, v, {}, meter);
    if (!p.found) return false;
    flip_arcs(scratch, p.arcs, meter);
  }
  return true;
}

int path_reversal_lambda(const Orientation& d, int u, int v) {
  if (u == v) throw std::invalid_argument("path_reversal_lambda: u equals v");
  Orientation scratch = d;
  int count = 0;
  for (;;) {
    PathResult p = find_directed_path(scratch, u, v);
    if (!p.found) return count;
    flip_arcs(scratch, p.arcs);
    ++count;
  }
}

bool is_flippable_pair(const Orientation& d, int u, int v, int k,
                       DelayMeter* meter) {
  if (k < 1) throw std::invalid_argument("is_flippable_pair: k < 1");
  return lambda_at_least(d, u, v, k + 1, meter);
}

}  // namespace orient
