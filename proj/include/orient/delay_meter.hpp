#ifndef ORIENT_DELAY_METER_HPP
#define ORIENT_DELAY_METER_HPP

#include <cstdint>
#include <vector>

namespace orient {

/// Counts abstract work between consecutive emitted solutions.
///
/// Work is measured in primitive operations: one per directed-path search
/// (BFS run) plus one per arc touched by a search, reversal or scratch copy.
/// A "gap" is the work between two emissions; the gap before the first
/// emission and the one after the last are included, so a run with s
/// solutions has s + 1 gaps once `finish()` has been called.
class DelayMeter {
 public:
  struct Gap {
    std::uint64_t bfs_runs = 0;
    std::uint64_t operations = 0;
  };

  /// Keep every gap (for per-solution reports). Off by default.
  explicit DelayMeter(bool record_gaps = false) : record_(record_gaps) {}

  void count_bfs() {
    ++current_.bfs_runs;
    ++current_.operations;
  }
  void touch(std::uint64_t arcs = 1) { current_.operations += arcs; }

  /// Closes the current gap at a solution.
  void emit();
  /// Closes the trailing gap. Idempotent until more work is counted.
  void finish();

  std::uint64_t solutions() const noexcept { return solutions_; }
  std::uint64_t total_operations() const noexcept {
    return total_.operations + current_.operations;
  }
  std::uint64_t total_bfs_runs() const noexcept {
    return total_.bfs_runs + current_.bfs_runs;
  }
  const Gap& max_gap() const noexcept { return max_; }
  const Gap& open_gap() const noexcept { return current_; }
  const std::vector<Gap>& gaps() const noexcept { return gaps_; }

  /// Total operations divided by the number of solutions (0 if none).
  double amortized_operations() const;

 private:
  void close_gap();

  bool record_;
  bool finished_ = false;
  std::uint64_t solutions_ = 0;
  Gap current_;
  Gap total_;
  Gap max_;
  std::vector<Gap> gaps_;
};

}  // namespace orient

#endif  // ORIENT_DELAY_METER_HPP
