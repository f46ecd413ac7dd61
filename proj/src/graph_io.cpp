#include "orient/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace orient {

namespace {

std::vector<std::string_view> split_fields(std::string_view line,
                                           std::string_view separators) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    pos = line.find_first_not_of(separators, pos);
    if (pos == std::string_view::npos) break;
    std::size_t end = line.find_first_of(separators, pos);
    if (end == std::string_view::npos) end = line.size();
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

bool parse_int(std::string_view field, int& value) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                  : what),
      line_(line) {}

Multigraph parse_graph(std::string_view text) {
  int n = -1;
  int m = -1;
  int line_no = 0;
  std::vector<Edge> edges;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto fields = split_fields(line, " \t\r");
    if (fields.empty() || fields.front().starts_with('#')) continue;
    if (fields.size() != 2) {
      throw ParseError(line_no, "expected two integers");
    }
    int a = 0;
    int b = 0;
    if (!parse_int(fields[0], a) || !parse_int(fields[1], b)) {
      throw ParseError(line_no, "expected two integers");
    }
    if (n < 0) {
      if (a < 1 || b < 0) throw ParseError(line_no, "bad header \"n m\"");
      n = a;
      m = b;
      edges.reserve(m);
      continue;
    }
    if (static_cast<int>(edges.size()) == m) {
      throw ParseError(line_no, "more edge lines than announced");
    }
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw ParseError(line_no, "endpoint out of range");
    }
    if (a == b) throw ParseError(line_no, "loop edge");
    edges.push_back({a, b});
  }
  if (n < 0) throw ParseError(0, "missing header \"n m\"");
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) +
                                  " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Multigraph(n, std::move(edges));
}

Multigraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string format_graph(const Multigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string format_orientation(const Orientation& d) {
  std::string s(d.edge_count(), '+');
  for (int e = 0; e < d.edge_count(); ++e) {
    if (!d.is_forward(e)) s[e] = '-';
  }
  return s;
}

Orientation parse_orientation(const Multigraph& g, std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (static_cast<int>(text.size()) != g.edge_count()) {
    throw ParseError(0, "orientation has " + std::to_string(text.size()) +
                            " characters, graph has " +
                            std::to_string(g.edge_count()) + " edges");
  }
  std::vector<std::uint8_t> forward(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '+') {
      forward[i] = 1;
    } else if (text[i] == '-') {
      forward[i] = 0;
    } else {
      throw ParseError(0, "orientation character must be '+' or '-'");
    }
  }
  return Orientation(g, std::move(forward));
}

std::string format_sequence(const DegreeSequence& seq) {
  std::string s;
  for (int v = 0; v < seq.size(); ++v) {
    if (v > 0) s += ' ';
    s += std::to_string(seq[v]);
  }
  return s;
}

DegreeSequence parse_sequence(std::string_view text) {
  DegreeSequence seq;
  for (std::string_view field : split_fields(text, ", \t\r\n")) {
    int value = 0;
    if (!parse_int(field, value) || value < 0) {
      throw ParseError(0, "degree sequence entries must be natural numbers");
    }
    seq.out.push_back(value);
  }
  return seq;
}

}  // namespace orient
