#ifndef ORIENT_FLOW_PATHS_HPP
#define ORIENT_FLOW_PATHS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "orient/delay_meter.hpp"
#include "orient/multigraph.hpp"

namespace orient {

/// One traversed arc: edge index plus the direction it is traversed in.
struct Arc {
  int edge = 0;
  int from = 0;
  int to = 0;

  bool operator==(const Arc&) const = default;
};

struct PathResult {
  bool found = false;
  std::vector<Arc> arcs;

  std::vector<int> edges() const;
};

/// Per-edge flag set; an empty span means "nothing forbidden".
using EdgeMask = std::span<const std::uint8_t>;

/// Shortest directed path from source to target in D minus the forbidden
/// edges. Vertices are expanded in BFS order and each vertex scans its
/// incident edges by increasing index, so among shortest paths the result
/// is deterministic. Throws std::invalid_argument when source == target.
PathResult find_directed_path(const Orientation& d, int source, int target,
                              EdgeMask forbidden = {},
                              DelayMeter* meter = nullptr);

/// Same search, stopping at the first reached vertex w != source with
/// is_target(w).
PathResult find_directed_path_to_any(const Orientation& d, int source,
                                     const std::function<bool(int)>& is_target,
                                     EdgeMask forbidden = {},
                                     DelayMeter* meter = nullptr);

/// D with exactly the edges of P reversed. Throws std::invalid_argument if P
/// is not a directed, arc-simple path in D.
Orientation reverse_path(const Orientation& d, const PathResult& path);

/// In-place reversal of the arcs of a path or cycle, without validation.
void flip_arcs(Orientation& d, std::span<const Arc> arcs,
               DelayMeter* meter = nullptr);

/// Whether lambda_D(u, v) >= threshold: reverses up to `threshold`
/// successive u-v paths on a scratch copy. D itself is not modified.
bool lambda_at_least(const Orientation& d, int u, int v, int threshold,
                     DelayMeter* meter = nullptr);

/// lambda_D(u, v) by exhaustive successive path reversal.
int path_reversal_lambda(const Orientation& d, int u, int v);

/// (u, v) is flippable for k when lambda_D(u, v) > k: every directed u-v path
/// can then be reversed without dropping below k-arc-connectivity.
bool is_flippable_pair(const Orientation& d, int u, int v, int k,
                       DelayMeter* meter = nullptr);

}  // namespace orient

#endif  // ORIENT_FLOW_PATHS_HPP
