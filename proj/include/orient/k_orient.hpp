#ifndef ORIENT_K_ORIENT_HPP
#define ORIENT_K_ORIENT_HPP

#include <cstdint>
#include <optional>

#include "orient/alpha_orient.hpp"
#include "orient/delay_meter.hpp"
#include "orient/multigraph.hpp"

namespace orient {

/// A k-arc-connected orientation of g, or nullopt if none exists.
///
/// Rejects immediately when g is not 2k-edge-connected (Nash-Williams).
/// Otherwise runs a backtracking search over edges in index order that
/// prunes a partial orientation as soon as some vertex can no longer reach
/// k outgoing or k incoming arcs, or some cut has fewer than k arcs leaving
/// it when every undecided edge is counted in both directions.
/// Single-vertex graphs yield their empty orientation. Throws
/// std::invalid_argument for k < 1.
std::optional<Orientation> find_k_connected_orientation(const Multigraph& g,
                                                        int k);

struct KOrientOptions {
  DelayMeter* meter = nullptr;
  /// Start from this orientation instead of searching for one. Must be a
  /// k-connected orientation of the graph.
  const Orientation* seed = nullptr;
};

/// Streams every k-arc-connected orientation of g exactly once and returns
/// their number. Orientations with the same outdegree sequence appear
/// contiguously. An infeasible graph yields an empty stream. Seed search
/// is not metered. Throws std::invalid_argument for k < 1 or a bad seed.
std::uint64_t enumerate_k_connected(const Multigraph& g, int k,
                                    const OrientationSink& sink,
                                    const KOrientOptions& options = {});

/// (k - 1) n + 2: the least possible size of a k-connected alpha-class.
std::uint64_t class_size_lower_bound(int n, int k);

/// Whether the number of alpha-orientations reaches class_size_lower_bound.
/// Throws std::invalid_argument unless alpha is a k-connected outdegree
/// sequence of g.
bool class_size_lower_bound_check(const Multigraph& g,
                                  const DegreeSequence& alpha, int k);

}  // namespace orient

#endif  // ORIENT_K_ORIENT_HPP
