#ifndef ORIENT_MULTIGRAPH_HPP
#define ORIENT_MULTIGRAPH_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace orient {

/// Undirected edge between two distinct vertices. The order of the
/// endpoints matters only for orientation encoding: an edge is "forward"
/// when it points from `u` to `v`.
struct Edge {
  int u = 0;
  int v = 0;

  bool operator==(const Edge&) const = default;
};

/// Loopless undirected multigraph on vertices 0..n-1.
///
/// Edges are identified by their position in the edge list. Parallel edges
/// are distinct edges with distinct indices, and the edge list order is the
/// linear order every enumerator uses when it fixes edges one by one.
/// Immutable after construction.
class Multigraph {
 public:
  /// Throws std::invalid_argument on n < 1, loops, or endpoints out of range.
  Multigraph(int n, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const Edge& edge(int e) const { return edges_[e]; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Indices of the edges incident to v, in increasing index order.
  std::span<const int> incident(int v) const {
    return {incident_.data() + offsets_[v], incident_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Endpoint of edge e that is not w.
  int opposite(int e, int w) const {
    return edges_[e].u == w ? edges_[e].v : edges_[e].u;
  }

  bool operator==(const Multigraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<int> incident_;
};

/// Outdegree vector of an orientation: out[v] is the number of arcs leaving v.
struct DegreeSequence {
  std::vector<int> out;

  int size() const noexcept { return static_cast<int>(out.size()); }
  int operator[](int v) const { return out[v]; }
  auto operator<=>(const DegreeSequence&) const = default;
};

/// Assignment of a direction to every edge of a Multigraph.
///
/// Holds a non-owning pointer to its graph; the graph must outlive every
/// orientation built on it. Copying an orientation copies the directions.
class Orientation {
 public:
  /// All edges forward (u -> v).
  explicit Orientation(const Multigraph& graph);
  /// `forward[e] != 0` means edge e points from its first to its second
  /// endpoint. Throws std::invalid_argument on a length mismatch.
  Orientation(const Multigraph& graph, std::vector<std::uint8_t> forward);

  const Multigraph& graph() const noexcept { return *graph_; }
  int edge_count() const noexcept { return static_cast<int>(forward_.size()); }

  bool is_forward(int e) const { return forward_[e] != 0; }
  int tail(int e) const {
    return forward_[e] ? graph_->edge(e).u : graph_->edge(e).v;
  }
  int head(int e) const {
    return forward_[e] ? graph_->edge(e).v : graph_->edge(e).u;
  }

  void flip(int e) { forward_[e] ^= 1U; }
  void flip(std::span<const int> edges) {
    for (int e : edges) flip(e);
  }
  void set_forward(int e, bool forward) { forward_[e] = forward ? 1 : 0; }

  /// D^B: a copy with the edges in `edges` reversed.
  Orientation reversed(std::span<const int> edges) const;
  /// D^-: every arc reversed.
  Orientation reversed_all() const;

  int outdegree(int v) const;
  DegreeSequence outdegrees() const;

  std::span<const std::uint8_t> directions() const noexcept { return forward_; }

  bool operator==(const Orientation& other) const {
    return graph_ == other.graph_ && forward_ == other.forward_;
  }

 private:
  const Multigraph* graph_;
  std::vector<std::uint8_t> forward_;
};

/// Nonempty proper vertex subset, used as the source side of a cut.
class CutSet {
 public:
  /// Throws std::invalid_argument unless the set is nonempty and proper.
  CutSet(int n, std::span<const int> members);
  static CutSet from_mask(int n, std::uint64_t mask);

  int vertex_count() const noexcept { return static_cast<int>(member_.size()); }
  bool contains(int v) const { return member_[v] != 0; }

 private:
  explicit CutSet(std::vector<std::uint8_t> member);
  std::vector<std::uint8_t> member_;
};

int outdegree(const Orientation& d, int v);

/// Number of arcs with tail in X and head outside X.
int cut_outdegree(const Orientation& d, const CutSet& x);

/// Number of edges with exactly one endpoint in X.
int crossing_edges(const Multigraph& g, const CutSet& x);

}  // namespace orient

#endif  // ORIENT_MULTIGRAPH_HPP
