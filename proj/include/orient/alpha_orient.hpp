#ifndef ORIENT_ALPHA_ORIENT_HPP
#define ORIENT_ALPHA_ORIENT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "orient/delay_meter.hpp"
#include "orient/flow_paths.hpp"
#include "orient/multigraph.hpp"

namespace orient {

using OrientationSink = std::function<void(const Orientation&)>;
using DirectedCycle = std::vector<Arc>;

struct AlphaOptions {
  DelayMeter* meter = nullptr;
  /// Called on entry to every node of the search tree with the current
  /// orientation and the number of fixed edges (edges 0..fixed-1 are fixed).
  std::function<void(const Orientation&, int fixed)> on_node;
};

/// Some orientation with outdegree alpha(v) at every v, or nullopt if none
/// exists. Starts from the all-forward orientation and repeatedly reverses
/// a shortest path from a vertex with surplus outdegree to one with a
/// deficit. Throws std::invalid_argument if alpha has the wrong length or a
/// negative entry.
std::optional<Orientation> find_alpha_orientation(const Multigraph& g,
                                                  const DegreeSequence& alpha,
                                                  DelayMeter* meter = nullptr);

/// Streams every alpha-orientation of g to `sink` exactly once and returns
/// their number. Edges are fixed in index order; at each node the branch
/// that keeps the current direction of the next edge is explored before the
/// branch that reverses it (together with a directed cycle through it).
/// Closes the meter's trailing gap.
std::uint64_t enumerate_alpha(const Multigraph& g, const DegreeSequence& alpha,
                              const OrientationSink& sink,
                              const AlphaOptions& options = {});

/// The same search started from a given orientation with nothing fixed:
/// enumerates every orientation with the outdegrees of `start`. Does not
/// close the meter's trailing gap.
std::uint64_t enumerate_alpha_from(const Orientation& start,
                                   const OrientationSink& sink,
                                   const AlphaOptions& options = {});

/// If d and target have equal outdegrees, arc-disjoint directed cycles of d
/// covering exactly the edges on which they differ; reversing all of them
/// turns d into target. nullopt when the outdegrees differ. Throws
/// std::invalid_argument for orientations of different graphs.
std::optional<std::vector<DirectedCycle>> same_alpha_cycle_decomposition(
    const Orientation& d, const Orientation& target);

}  // namespace orient

#endif  // ORIENT_ALPHA_ORIENT_HPP
