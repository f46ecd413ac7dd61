#include "orient/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "orient/graph_io.hpp"

namespace orient::oracle {

namespace {

void guard(bool ok, const char* what) {
  if (!ok) throw std::length_error(what);
}

void require_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
}

// Arcs as (tail, head) bit masks; true iff every proper cut has >= k out-arcs.
bool cuts_at_least(int n, const std::vector<std::uint32_t>& tails,
                   const std::vector<std::uint32_t>& heads, int k) {
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t x = 1; x < full; ++x) {
    int out = 0;
    for (std::size_t e = 0; e < tails.size() && out < k; ++e) {
      if ((tails[e] & x) && !(heads[e] & x)) ++out;
    }
    if (out < k) return false;
  }
  return true;
}

}  // namespace

void all_orientations(const Multigraph& g, const OrientationSink& visit) {
  const int m = g.edge_count();
  guard(m <= kMaxEdges, "all_orientations: too many edges");
  Orientation d(g);
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t code = 0; code < total; ++code) {
    // Edge 0 is the most significant digit and '+' sorts before '-'.
    for (int e = 0; e < m; ++e) d.set_forward(e, ((code >> (m - 1 - e)) & 1U) == 0);
    visit(d);
  }
}

bool is_k_connected(const Orientation& d, int k) {
  require_k(k);
  const int n = d.graph().vertex_count();
  guard(n <= kMaxCutVertices, "oracle::is_k_connected: too many vertices");
  std::vector<std::uint32_t> tails(d.edge_count());
  std::vector<std::uint32_t> heads(d.edge_count());
  for (int e = 0; e < d.edge_count(); ++e) {
    tails[e] = std::uint32_t{1} << d.tail(e);
    heads[e] = std::uint32_t{1} << d.head(e);
  }
  return cuts_at_least(n, tails, heads, k);
}

std::set<std::string> alpha_orientations(const Multigraph& g,
                                         const DegreeSequence& alpha) {
  if (alpha.size() != g.vertex_count()) {
    throw std::invalid_argument("alpha length does not match vertex count");
  }
  std::set<std::string> found;
  all_orientations(g, [&](const Orientation& d) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (d.outdegree(v) != alpha[v]) return;
    }
    found.insert(format_orientation(d));
  });
  return found;
}

std::set<std::string> k_connected_orientations(const Multigraph& g, int k) {
  require_k(k);
  std::set<std::string> found;
  all_orientations(g, [&](const Orientation& d) {
    if (is_k_connected(d, k)) found.insert(format_orientation(d));
  });
  return found;
}

std::set<DegreeSequence> k_connected_sequences(const Multigraph& g, int k) {
  require_k(k);
  std::set<DegreeSequence> found;
  all_orientations(g, [&](const Orientation& d) {
    if (is_k_connected(d, k)) found.insert(d.outdegrees());
  });
  return found;
}

int lambda(const Orientation& d, int u, int v) {
  const int n = d.graph().vertex_count();
  guard(n <= kMaxLambdaVertices, "oracle::lambda: too many vertices");
  if (u == v) throw std::invalid_argument("oracle::lambda: u equals v");
  int best = d.edge_count();
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x) {
    if (!((x >> u) & 1U) || ((x >> v) & 1U)) continue;
    int out = 0;
    for (int e = 0; e < d.edge_count(); ++e) {
      if (((x >> d.tail(e)) & 1U) && !((x >> d.head(e)) & 1U)) ++out;
    }
    best = std::min(best, out);
  }
  return best;
}

int MixedGraph::open_count() const {
  return static_cast<int>(std::count(state_.begin(), state_.end(), kOpen));
}

bool mixed_extension(const MixedGraph& mixed, int k) {
  require_k(k);
  const Multigraph& g = mixed.graph();
  const int n = g.vertex_count();
  guard(n <= kMaxCutVertices, "oracle::mixed_extension: too many vertices");
  std::vector<int> open;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!mixed.is_fixed(e)) open.push_back(e);
  }
  guard(static_cast<int>(open.size()) <= kMaxUnfixedEdges,
        "oracle::mixed_extension: too many open edges");

  std::vector<std::uint32_t> tails(g.edge_count());
  std::vector<std::uint32_t> heads(g.edge_count());
  auto set_arc = [&](int e, bool forward) {
    const Edge& edge = g.edge(e);
    tails[e] = std::uint32_t{1} << (forward ? edge.u : edge.v);
    heads[e] = std::uint32_t{1} << (forward ? edge.v : edge.u);
  };
  for (int e = 0; e < g.edge_count(); ++e) {
    if (mixed.is_fixed(e)) set_arc(e, mixed.is_forward(e));
  }
  const std::uint64_t total = std::uint64_t{1} << open.size();
  for (std::uint64_t code = 0; code < total; ++code) {
    for (std::size_t i = 0; i < open.size(); ++i) set_arc(open[i], (code >> i) & 1U);
    if (cuts_at_least(n, tails, heads, k)) return true;
  }
  return false;
}

namespace {

void extend(MixedGraph& mixed, int next, int k, std::uint64_t& count,
            const OrientationSink& sink) {
  const Multigraph& g = mixed.graph();
  if (next == g.edge_count()) {
    Orientation d(g);
    for (int e = 0; e < g.edge_count(); ++e) d.set_forward(e, mixed.is_forward(e));
    ++count;
    sink(d);
    return;
  }
  for (bool forward : {true, false}) {
    mixed.fix(next, forward);
    if (mixed_extension(mixed, k)) extend(mixed, next + 1, k, count, sink);
  }
  mixed.release(next);
}

}  // namespace

std::uint64_t enumerate_by_extension(const Multigraph& g, int k,
                                     const OrientationSink& sink) {
  guard(g.edge_count() <= kMaxUnfixedEdges,
        "oracle::enumerate_by_extension: too many edges");
  MixedGraph mixed(g);
  std::uint64_t count = 0;
  if (mixed_extension(mixed, k)) extend(mixed, 0, k, count, sink);
  return count;
}

}  // namespace orient::oracle
