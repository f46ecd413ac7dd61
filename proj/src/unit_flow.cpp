#include "orient/unit_flow.hpp"

#include <stdexcept>

namespace orient {

UnitFlowNetwork::UnitFlowNetwork(int n) : n_(n), adjacent_(n) {}

void UnitFlowNetwork::add_pair(int a, int b, int cap_ab, int cap_ba) {
  adjacent_[a].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({b, cap_ab, 0});
  adjacent_[b].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({a, cap_ba, 0});
}

void UnitFlowNetwork::add_arc(int from, int to) { add_pair(from, to, 1, 0); }

void UnitFlowNetwork::add_undirected(int a, int b) { add_pair(a, b, 1, 1); }

int UnitFlowNetwork::max_flow(int s, int t, int limit) {
  if (s == t) throw std::invalid_argument("max_flow: source equals sink");
  for (Arc& a : arcs_) a.flow = 0;

  int flow = 0;
  std::vector<int> via(n_);
  std::vector<int> queue;
  queue.reserve(n_);
  while (flow < limit) {
    std::fill(via.begin(), via.end(), -1);
    queue.clear();
    queue.push_back(s);
    via[s] = -2;
    for (std::size_t head = 0; head < queue.size() && via[t] == -1; ++head) {
      int x = queue[head];
      for (int id : adjacent_[x]) {
        const Arc& a = arcs_[id];
        if (via[a.to] == -1 && a.flow < a.capacity) {
          via[a.to] = id;
          queue.push_back(a.to);
        }
      }
    }
    if (via[t] == -1) break;
    for (int x = t; x != s;) {
      int id = via[x];
      ++arcs_[id].flow;
      --arcs_[id ^ 1].flow;
      x = arcs_[id ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

UnitFlowNetwork network_of(const Orientation& d) {
  UnitFlowNetwork net(d.graph().vertex_count());
  for (int e = 0; e < d.edge_count(); ++e) net.add_arc(d.tail(e), d.head(e));
  return net;
}

}  // namespace orient
