#include "orient/degree_seq.hpp"

#include <stdexcept>

#include "orient/connectivity.hpp"
#include "orient/flow_paths.hpp"

namespace orient {

std::optional<int> find_flippable_partner(const Orientation& d, int v,
                                          int first_unfixed, int k, Shift shift,
                                          DelayMeter* meter) {
  const int n = d.graph().vertex_count();
  for (int u = first_unfixed; u < n; ++u) {
    if (u == v) continue;
    const bool flippable = shift == Shift::Down
                               ? is_flippable_pair(d, v, u, k, meter)
                               : is_flippable_pair(d, u, v, k, meter);
    if (flippable) return u;
  }
  return std::nullopt;
}

SequenceWalker::SequenceWalker(const Orientation& seed, int k, LeafHandler leaf,
                               SequenceOptions options)
    : current_(seed), k_(k), leaf_(std::move(leaf)), options_(std::move(options)) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!is_k_connected(seed, k)) {
    throw std::invalid_argument("seed orientation is not k-connected");
  }
}

void SequenceWalker::descend(int v) {
  if (v == current_.graph().vertex_count()) {
    leaf_(current_);
    return;
  }
  reverse_minus(v);
  reverse_plus(v);
  descend(v + 1);
}

void SequenceWalker::reverse_minus(int v) { shift(v, Shift::Down); }

void SequenceWalker::reverse_plus(int v) { shift(v, Shift::Up); }

void SequenceWalker::shift(int v, Shift direction) {
  std::optional<int> u =
      find_flippable_partner(current_, v, v, k_, direction, options_.meter);
  if (!u) return;
  // Reversing a v-u path lowers the outdegree of v by one, a u-v path
  // raises it.
  PathResult path = direction == Shift::Down
                        ? find_directed_path(current_, v, *u, {}, options_.meter)
                        : find_directed_path(current_, *u, v, {}, options_.meter);
  flip_arcs(current_, path.arcs, options_.meter);
  ++depth_;
  if (options_.on_reversal) options_.on_reversal(current_, depth_);

  shift(v, direction);
  descend(v + 1);

  --depth_;
  flip_arcs(current_, path.arcs, options_.meter);
}

std::uint64_t enumerate_outdegree_sequences(const Multigraph& g, int k,
                                            const Orientation& seed,
                                            const SequenceSink& sink,
                                            const SequenceOptions& options) {
  if (&seed.graph() != &g && !(seed.graph() == g)) {
    throw std::invalid_argument("seed is not an orientation of the graph");
  }
  std::uint64_t count = 0;
  SequenceWalker walker(
      seed, k,
      [&](const Orientation& leaf) {
        ++count;
        if (options.meter) options.meter->emit();
        sink(leaf.outdegrees(), leaf);
      },
      options);
  walker.run();
  if (options.meter) options.meter->finish();
  return count;
}

}  // namespace orient
