#ifndef ORIENT_CONNECTIVITY_HPP
#define ORIENT_CONNECTIVITY_HPP

#include "orient/delay_meter.hpp"
#include "orient/multigraph.hpp"

namespace orient {

/// Whether every nonempty proper vertex subset has at least k leaving arcs.
/// Checked as lambda(0, v) >= k and lambda(v, 0) >= k for every v != 0.
/// Single-vertex graphs are k-connected for every k. Throws
/// std::invalid_argument for k < 1.
bool is_k_connected(const Orientation& d, int k, DelayMeter* meter = nullptr);

/// Minimum number of edges crossing a cut, via unit max-flow from vertex 0.
/// Throws std::invalid_argument when n < 2.
int edge_connectivity(const Multigraph& g);

}  // namespace orient

#endif  // ORIENT_CONNECTIVITY_HPP
