#ifndef ORIENT_GRAPH_IO_HPP
#define ORIENT_GRAPH_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "orient/multigraph.hpp"

namespace orient {

/// Malformed input text. `line()` is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Edge-list text: a header line "n m", then m lines "u v" with 0-based
/// vertices. Blank lines and lines starting with '#' are ignored.
Multigraph parse_graph(std::string_view text);
Multigraph read_graph_file(const std::filesystem::path& path);
std::string format_graph(const Multigraph& g);

/// One character per edge in index order: '+' for u -> v, '-' for v -> u.
std::string format_orientation(const Orientation& d);
Orientation parse_orientation(const Multigraph& g, std::string_view text);

/// Space-separated outdegrees in vertex order.
std::string format_sequence(const DegreeSequence& seq);
/// Comma- or space-separated natural numbers.
DegreeSequence parse_sequence(std::string_view text);

}  // namespace orient

#endif  // ORIENT_GRAPH_IO_HPP
