#ifndef ORIENT_ORACLE_HPP
#define ORIENT_ORACLE_HPP

// Brute-force reference implementations. Exponential by construction and
// guarded by hard input-size limits; each guard violation throws
// std::length_error.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "orient/alpha_orient.hpp"
#include "orient/multigraph.hpp"

namespace orient::oracle {

inline constexpr int kMaxEdges = 25;
inline constexpr int kMaxCutVertices = 20;
inline constexpr int kMaxLambdaVertices = 12;
inline constexpr int kMaxUnfixedEdges = 20;

/// All 2^m orientations, in lexicographic order of their '+/-' strings.
void all_orientations(const Multigraph& g, const OrientationSink& visit);

/// k-connectivity by checking every nonempty proper vertex subset.
bool is_k_connected(const Orientation& d, int k);

std::set<std::string> alpha_orientations(const Multigraph& g,
                                         const DegreeSequence& alpha);
std::set<std::string> k_connected_orientations(const Multigraph& g, int k);
std::set<DegreeSequence> k_connected_sequences(const Multigraph& g, int k);

/// min delta+(X) over all X with u in X and v not in X.
int lambda(const Orientation& d, int u, int v);

/// Graph whose edges are either fixed to a direction or still undirected.
class MixedGraph {
 public:
  explicit MixedGraph(const Multigraph& g)
      : graph_(&g), state_(g.edge_count(), kOpen) {}

  const Multigraph& graph() const noexcept { return *graph_; }
  void fix(int e, bool forward) { state_[e] = forward ? kForward : kBackward; }
  void release(int e) { state_[e] = kOpen; }
  bool is_fixed(int e) const { return state_[e] != kOpen; }
  bool is_forward(int e) const { return state_[e] == kForward; }
  int open_count() const;

 private:
  static constexpr std::int8_t kOpen = -1;
  static constexpr std::int8_t kBackward = 0;
  static constexpr std::int8_t kForward = 1;

  const Multigraph* graph_;
  std::vector<std::int8_t> state_;
};

/// Whether some orientation of the open edges makes the graph k-connected.
bool mixed_extension(const MixedGraph& mixed, int k);

/// Edge-by-edge backtracking that keeps a direction only when the partial
/// orientation still extends to a k-connected one (decided by
/// mixed_extension). Streams every k-connected orientation once.
std::uint64_t enumerate_by_extension(const Multigraph& g, int k,
                                     const OrientationSink& sink);

}  // namespace orient::oracle

#endif  // ORIENT_ORACLE_HPP
