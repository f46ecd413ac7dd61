#include "orient/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "orient/alpha_orient.hpp"
#include "orient/connectivity.hpp"
#include "orient/degree_seq.hpp"
#include "orient/graph_io.hpp"
#include "orient/k_orient.hpp"
#include "orient/oracle.hpp"

namespace orient {

namespace {

enum class Command { Enumerate, Count, Bench };

struct Params {
  std::string mode;
  int k = 0;
  std::string alpha;
  bool oracle = false;
  std::string seed_file;
  std::string graph_file;
};

// Invalid parameter values (exit code 2).
class ParameterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_common_options(CLI::App& sub, Params& p) {
  sub.add_option("--mode", p.mode, "alpha | odseq | korient")
      ->required()
      ->check(CLI::IsMember({"alpha", "odseq", "korient"}));
  sub.add_option("--k", p.k, "arc-connectivity (odseq, korient)");
  sub.add_option("--alpha", p.alpha, "comma-separated outdegrees (alpha)");
  sub.add_flag("--oracle", p.oracle, "use the brute-force reference instead");
  sub.add_option("--seed-orientation", p.seed_file,
                 "file holding a starting orientation as a +/- string");
  sub.add_option("graph", p.graph_file, "edge-list graph file")->required();
}

std::optional<Orientation> read_seed(const Multigraph& g, const std::string& path) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  return parse_orientation(g, line);
}

// Runs one enumeration, handing each solution's text to `emit`.
std::uint64_t run_mode(const Params& p, const Multigraph& g,
                       const std::function<void(const std::string&)>& emit,
                       DelayMeter* meter) {
  std::optional<Orientation> seed = read_seed(g, p.seed_file);

  if (p.mode == "alpha") {
    DegreeSequence alpha;
    try {
      alpha = parse_sequence(p.alpha);
    } catch (const ParseError& e) {
      throw ParameterError(std::string("--alpha: ") + e.what());
    }
    if (alpha.size() != g.vertex_count()) {
      throw ParameterError("--alpha needs " + std::to_string(g.vertex_count()) +
                           " entries");
    }
    if (p.oracle) {
      auto all = oracle::alpha_orientations(g, alpha);
      for (const auto& s : all) emit(s);
      return all.size();
    }
    auto sink = [&](const Orientation& d) { emit(format_orientation(d)); };
    if (seed) {
      if (seed->outdegrees() != alpha) {
        throw ParameterError("seed orientation does not have outdegrees alpha");
      }
      std::uint64_t count =
          enumerate_alpha_from(*seed, sink, AlphaOptions{.meter = meter, .on_node = {}});
      if (meter) meter->finish();
      return count;
    }
    return enumerate_alpha(g, alpha, sink, AlphaOptions{.meter = meter, .on_node = {}});
  }

  if (p.k < 1) throw ParameterError("--k must be >= 1");
  if (seed && !is_k_connected(*seed, p.k)) {
    throw ParameterError("seed orientation is not k-connected");
  }

  if (p.mode == "odseq") {
    if (p.oracle) {
      auto all = oracle::k_connected_sequences(g, p.k);
      for (const auto& s : all) emit(format_sequence(s));
      return all.size();
    }
    if (!seed) seed = find_k_connected_orientation(g, p.k);
    if (!seed) {
      if (meter) meter->finish();
      return 0;
    }
    return enumerate_outdegree_sequences(
        g, p.k, *seed,
        [&](const DegreeSequence& seq, const Orientation&) {
          emit(format_sequence(seq));
        },
        SequenceOptions{.meter = meter, .on_reversal = {}});
  }

  if (p.oracle) {
    auto all = oracle::k_connected_orientations(g, p.k);
    for (const auto& s : all) emit(s);
    return all.size();
  }
  return enumerate_k_connected(
      g, p.k, [&](const Orientation& d) { emit(format_orientation(d)); },
      KOrientOptions{.meter = meter, .seed = seed ? &*seed : nullptr});
}

void print_gap(std::ostream& out, const std::string& label,
               const DelayMeter::Gap& gap) {
  out << "gap solution=" << label << " bfs=" << gap.bfs_runs
      << " ops=" << gap.operations << '\n';
}

int execute(Command command, const Params& p, std::ostream& out) {
  const Multigraph g = read_graph_file(p.graph_file);

  switch (command) {
    case Command::Enumerate: {
      std::uint64_t count = run_mode(
          p, g, [&](const std::string& line) { out << line << '\n' << std::flush; },
          nullptr);
      out << "# count=" << count << '\n';
      break;
    }
    case Command::Count: {
      out << run_mode(p, g, [](const std::string&) {}, nullptr) << '\n';
      break;
    }
    case Command::Bench: {
      if (p.oracle) throw ParameterError("bench does not support --oracle");
      DelayMeter meter(true);
      std::uint64_t index = 0;
      std::uint64_t count = run_mode(
          p, g,
          [&](const std::string&) {
            print_gap(out, std::to_string(++index), meter.gaps().back());
            out << std::flush;
          },
          &meter);
      const auto& trailing = meter.gaps().back();
      if (count == 0) {
        out << "no_solution bfs=" << trailing.bfs_runs
            << " ops=" << trailing.operations << '\n';
        break;
      }
      print_gap(out, "end", trailing);
      const double m2 = static_cast<double>(g.edge_count()) * g.edge_count();
      out << "summary mode=" << p.mode << " n=" << g.vertex_count()
          << " m=" << g.edge_count() << " k=" << p.k << " solutions=" << count
          << " max_gap_bfs=" << meter.max_gap().bfs_runs
          << " max_gap_ops=" << meter.max_gap().operations
          << " total_ops=" << meter.total_operations() << std::fixed
          << std::setprecision(3)
          << " amortized_ops=" << meter.amortized_operations()
          << " max_gap_per_m2="
          << (m2 > 0 ? static_cast<double>(meter.max_gap().operations) / m2 : 0.0)
          << " amortized_per_m2="
          << (m2 > 0 ? meter.amortized_operations() / m2 : 0.0) << '\n';
      break;
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Enumerate alpha-orientations, k-arc-connected outdegree "
               "sequences and k-arc-connected orientations of multigraphs"};
  app.name("orient");
  app.require_subcommand(1);

  Params params;
  CLI::App* enumerate = app.add_subcommand("enumerate", "print every solution");
  CLI::App* count = app.add_subcommand("count", "print the number of solutions");
  CLI::App* bench = app.add_subcommand("bench", "report per-solution work");
  for (CLI::App* sub : {enumerate, count, bench}) add_common_options(*sub, params);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadParameter;
  }

  const Command command = enumerate->parsed() ? Command::Enumerate
                          : count->parsed()   ? Command::Count
                                              : Command::Bench;
  try {
    return execute(command, params, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadParameter;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadParameter;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadParameter;
  }
}

}  // namespace orient
