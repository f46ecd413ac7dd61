#ifndef ORIENT_DEGREE_SEQ_HPP
#define ORIENT_DEGREE_SEQ_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "orient/delay_meter.hpp"
#include "orient/multigraph.hpp"

namespace orient {

using SequenceSink =
    std::function<void(const DegreeSequence&, const Orientation& witness)>;

struct SequenceOptions {
  DelayMeter* meter = nullptr;
  /// Called after every path reversal with the new current orientation and
  /// the number of reversals currently applied on top of the seed.
  std::function<void(const Orientation&, int depth)> on_reversal;
};

/// Which way a path reversal moves the outdegree of the pivot vertex.
enum class Shift { Down, Up };

/// Smallest u >= first_unfixed, u != v, such that (v, u) is flippable
/// (Shift::Down) or (u, v) is flippable (Shift::Up).
std::optional<int> find_flippable_partner(const Orientation& d, int v,
                                          int first_unfixed, int k, Shift shift,
                                          DelayMeter* meter = nullptr);

/// Depth-first walk over k-connected orientations that reaches exactly one
/// orientation per k-connected outdegree sequence.
///
/// The set of vertices with frozen outdegree is always a prefix 0..v-1, so
/// a recursion level is identified by its first unfixed vertex v. Each
/// level lowers the outdegree of v as far as it goes (reverse_minus), then
/// raises it (reverse_plus), then descends to v + 1 with the orientation it
/// was given. Every reached leaf is handed to `leaf`.
class SequenceWalker {
 public:
  using LeafHandler = std::function<void(const Orientation&)>;

  /// Throws std::invalid_argument for k < 1 or a seed that is not
  /// k-connected.
  SequenceWalker(const Orientation& seed, int k, LeafHandler leaf,
                 SequenceOptions options = {});

  /// Walks the whole tree from the seed.
  void run() { descend(0); }

  /// Visits every k-connected sequence agreeing with current() on 0..v-1.
  void descend(int v);
  /// Visits those with smaller outdegree at v.
  void reverse_minus(int v);
  /// Visits those with larger outdegree at v.
  void reverse_plus(int v);

  const Orientation& current() const noexcept { return current_; }

 private:
  void shift(int v, Shift direction);

  Orientation current_;
  int k_;
  int depth_ = 0;
  LeafHandler leaf_;
  SequenceOptions options_;
};

/// Streams every outdegree sequence of a k-connected orientation of g
/// exactly once, together with a k-connected witness orientation, and
/// returns their number. Throws std::invalid_argument for k < 1 or when
/// `seed` is not a k-connected orientation of g. Closes the meter's
/// trailing gap.
std::uint64_t enumerate_outdegree_sequences(const Multigraph& g, int k,
                                            const Orientation& seed,
                                            const SequenceSink& sink,
                                            const SequenceOptions& options = {});

}  // namespace orient

#endif  // ORIENT_DEGREE_SEQ_HPP
