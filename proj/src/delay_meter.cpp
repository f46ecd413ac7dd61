#include "orient/delay_meter.hpp"

#include <algorithm>

namespace orient {

void DelayMeter::close_gap() {
  total_.bfs_runs += current_.bfs_runs;
  total_.operations += current_.operations;
  max_.bfs_runs = std::max(max_.bfs_runs, current_.bfs_runs);
  max_.operations = std::max(max_.operations, current_.operations);
  if (record_) gaps_.push_back(current_);
  current_ = {};
}

void DelayMeter::emit() {
  close_gap();
  ++solutions_;
  finished_ = false;
}

void DelayMeter::finish() {
  if (finished_ && current_.operations == 0) return;
  close_gap();
  finished_ = true;
}

double DelayMeter::amortized_operations() const {
  if (solutions_ == 0) return 0.0;
  return static_cast<double>(total_operations()) /
         static_cast<double>(solutions_);
}

}  // namespace orient
