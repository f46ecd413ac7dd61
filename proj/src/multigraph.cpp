#include "orient/multigraph.hpp"

#include <stdexcept>

namespace orient {

Multigraph::Multigraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) {
    throw std::invalid_argument("multigraph needs at least one vertex");
  }
  offsets_.assign(n_ + 1, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      throw std::invalid_argument("edge " + std::to_string(i) +
                                  ": endpoint out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("edge " + std::to_string(i) + ": loop");
    }
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (int v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];

  incident_.resize(2 * edges_.size());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (int i = 0; i < edge_count(); ++i) {
    incident_[fill[edges_[i].u]++] = i;
    incident_[fill[edges_[i].v]++] = i;
  }
}

Orientation::Orientation(const Multigraph& graph)
    : graph_(&graph), forward_(graph.edge_count(), 1) {}

Orientation::Orientation(const Multigraph& graph,
                         std::vector<std::uint8_t> forward)
    : graph_(&graph), forward_(std::move(forward)) {
  if (static_cast<int>(forward_.size()) != graph.edge_count()) {
    throw std::invalid_argument("orientation length does not match edge count");
  }
  for (auto& f : forward_) f = f ? 1 : 0;
}

Orientation Orientation::reversed(std::span<const int> edges) const {
  Orientation copy = *this;
  copy.flip(edges);
  return copy;
}

Orientation Orientation::reversed_all() const {
  Orientation copy = *this;
  for (auto& f : copy.forward_) f ^= 1U;
  return copy;
}

int Orientation::outdegree(int v) const {
  int out = 0;
  for (int e : graph_->incident(v)) {
    if (tail(e) == v) ++out;
  }
  return out;
}

DegreeSequence Orientation::outdegrees() const {
  DegreeSequence seq{std::vector<int>(graph_->vertex_count(), 0)};
  for (int e = 0; e < edge_count(); ++e) ++seq.out[tail(e)];
  return seq;
}

CutSet::CutSet(std::vector<std::uint8_t> member) : member_(std::move(member)) {
  int count = 0;
  for (auto m : member_) count += m ? 1 : 0;
  if (count == 0 || count == vertex_count()) {
    throw std::invalid_argument("cut set must be a nonempty proper subset");
  }
}

CutSet::CutSet(int n, std::span<const int> members)
    : CutSet([&] {
        std::vector<std::uint8_t> member(n > 0 ? n : 0, 0);
        for (int v : members) {
          if (v < 0 || v >= n) {
            throw std::invalid_argument("cut member out of range");
          }
          member[v] = 1;
        }
        return member;
      }()) {}

CutSet CutSet::from_mask(int n, std::uint64_t mask) {
  std::vector<std::uint8_t> member(n, 0);
  for (int v = 0; v < n; ++v) member[v] = (mask >> v) & 1U;
  return CutSet(std::move(member));
}

int outdegree(const Orientation& d, int v) {
  if (v < 0 || v >= d.graph().vertex_count()) {
    throw std::out_of_range("vertex out of range");
  }
  return d.outdegree(v);
}

int cut_outdegree(const Orientation& d, const CutSet& x) {
  if (x.vertex_count() != d.graph().vertex_count()) {
    throw std::invalid_argument("cut set and orientation disagree on n");
  }
  int out = 0;
  for (int e = 0; e < d.edge_count(); ++e) {
    if (x.contains(d.tail(e)) && !x.contains(d.head(e))) ++out;
  }
  return out;
}

int crossing_edges(const Multigraph& g, const CutSet& x) {
  int crossing = 0;
  for (const Edge& e : g.edges()) {
    if (x.contains(e.u) != x.contains(e.v)) ++crossing;
  }
  return crossing;
}

}  // namespace orient
