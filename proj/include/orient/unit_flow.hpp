#ifndef ORIENT_UNIT_FLOW_HPP
#define ORIENT_UNIT_FLOW_HPP

#include <limits>
#include <vector>

#include "orient/multigraph.hpp"

namespace orient {

// Unit-capacity flow network with Edmonds-Karp augmentation. Used for
// undirected edge connectivity and as an independent check of arc-disjoint
// path counts.
class UnitFlowNetwork {
 public:
  explicit UnitFlowNetwork(int n);

  void add_arc(int from, int to);
  // One unit usable in either direction.
  void add_undirected(int a, int b);

  // Maximum s-t flow, stopping early once `limit` is reached. Resets any
  // flow left by a previous call.
  int max_flow(int s, int t, int limit = std::numeric_limits<int>::max());

 private:
  struct Arc {
    int to;
    int capacity;
    int flow;
  };
  void add_pair(int a, int b, int cap_ab, int cap_ba);

  int n_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adjacent_;
};

// Flow network with one unit arc per arc of d.
UnitFlowNetwork network_of(const Orientation& d);

}  // namespace orient

#endif  // ORIENT_UNIT_FLOW_HPP
