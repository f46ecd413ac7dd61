#include "orient/k_orient.hpp"

#include <stdexcept>
#include <vector>

#include "orient/connectivity.hpp"
#include "orient/degree_seq.hpp"
#include "orient/unit_flow.hpp"

namespace orient {

namespace {

class SeedSearch {
 public:
  SeedSearch(const Multigraph& g, int k)
      : g_(g),
        k_(k),
        d_(g),
        out_(g.vertex_count(), 0),
        in_(g.vertex_count(), 0),
        open_(g.vertex_count(), 0) {
    for (int v = 0; v < g.vertex_count(); ++v) open_[v] = g.degree(v);
  }

  std::optional<Orientation> run() {
    if (search(0)) return d_;
    return std::nullopt;
  }

 private:
  bool search(int next) {
    if (!promising(next)) return false;
    if (next == g_.edge_count()) return true;
    const Edge& e = g_.edge(next);
    --open_[e.u];
    --open_[e.v];
    for (bool forward : {true, false}) {
      d_.set_forward(next, forward);
      const int tail = forward ? e.u : e.v;
      const int head = forward ? e.v : e.u;
      ++out_[tail];
      ++in_[head];
      if (search(next + 1)) return true;
      --out_[tail];
      --in_[head];
    }
    ++open_[e.u];
    ++open_[e.v];
    return false;
  }

  // Necessary conditions for edges next.. to complete into a k-connected
  // orientation.
  bool promising(int next) const {
    const int n = g_.vertex_count();
    for (int v = 0; v < n; ++v) {
      if (out_[v] + open_[v] < k_ || in_[v] + open_[v] < k_) return false;
    }
    UnitFlowNetwork net(n);
    for (int e = 0; e < g_.edge_count(); ++e) {
      if (e < next) {
        net.add_arc(d_.tail(e), d_.head(e));
      } else {
        net.add_undirected(g_.edge(e).u, g_.edge(e).v);
      }
    }
    for (int v = 1; v < n; ++v) {
      if (net.max_flow(0, v, k_) < k_ || net.max_flow(v, 0, k_) < k_) {
        return false;
      }
    }
    return true;
  }

  const Multigraph& g_;
  int k_;
  Orientation d_;
  std::vector<int> out_;
  std::vector<int> in_;
  std::vector<int> open_;
};

void require_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
}

}  // namespace

std::optional<Orientation> find_k_connected_orientation(const Multigraph& g,
                                                        int k) {
  require_k(k);
  if (g.vertex_count() == 1) return Orientation(g);
  if (edge_connectivity(g) < 2 * k) return std::nullopt;
  return SeedSearch(g, k).run();
}

std::uint64_t enumerate_k_connected(const Multigraph& g, int k,
                                    const OrientationSink& sink,
                                    const KOrientOptions& options) {
  require_k(k);
  std::optional<Orientation> seed;
  if (options.seed) {
    if (&options.seed->graph() != &g && !(options.seed->graph() == g)) {
      throw std::invalid_argument("seed is not an orientation of the graph");
    }
    if (!is_k_connected(*options.seed, k)) {
      throw std::invalid_argument("seed orientation is not k-connected");
    }
    seed = *options.seed;
  } else {
    seed = find_k_connected_orientation(g, k);
  }

  std::uint64_t count = 0;
  if (seed) {
    AlphaOptions alpha_options{.meter = options.meter, .on_node = {}};
    SequenceWalker walker(
        *seed, k,
        [&](const Orientation& leaf) {
          count += enumerate_alpha_from(leaf, sink, alpha_options);
        },
        SequenceOptions{.meter = options.meter, .on_reversal = {}});
    walker.run();
  }
  if (options.meter) options.meter->finish();
  return count;
}

std::uint64_t class_size_lower_bound(int n, int k) {
  return static_cast<std::uint64_t>(k - 1) * static_cast<std::uint64_t>(n) + 2;
}

bool class_size_lower_bound_check(const Multigraph& g,
                                  const DegreeSequence& alpha, int k) {
  require_k(k);
  std::optional<Orientation> d = find_alpha_orientation(g, alpha);
  if (!d || !is_k_connected(*d, k)) {
    throw std::invalid_argument("alpha is not a k-connected outdegree sequence");
  }
  const std::uint64_t size = enumerate_alpha_from(*d, [](const Orientation&) {});
  return size >= class_size_lower_bound(g.vertex_count(), k);
}

}  // namespace orient
