#include "orient/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

#include "orient/flow_paths.hpp"
#include "orient/unit_flow.hpp"

namespace orient {

bool is_k_connected(const Orientation& d, int k, DelayMeter* meter) {
  if (k < 1) throw std::invalid_argument("is_k_connected: k must be >= 1");
  const int n = d.graph().vertex_count();
  for (int v = 1; v < n; ++v) {
    if (!lambda_at_least(d, 0, v, k, meter)) return false;
    if (!lambda_at_least(d, v, 0, k, meter)) return false;
  }
  return true;
}

int edge_connectivity(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("edge_connectivity: needs n >= 2");
  UnitFlowNetwork net(n);
  for (const Edge& e : g.edges()) net.add_undirected(e.u, e.v);
  int best = g.edge_count();
  for (int v = 1; v < n && best > 0; ++v) {
    best = std::min(best, net.max_flow(0, v, best));
  }
  return best;
}

}  // namespace orient
