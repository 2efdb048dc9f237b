#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cvgraph/graph.hpp"

namespace cvgraph::cli {

enum class Command { graph_state, thermal, negativity, boundary_check, phase_diagram, area_law, classify, verify };
enum class Units { absolute, gap_rescaled };

struct GraphSource {
    enum class Kind { chain, ring, lattice, complete, file };
    Kind kind = Kind::chain;
    std::size_t n = 0;  ///< vertex count (generators only)
    std::size_t nx = 0; ///< lattice columns
    std::size_t ny = 0; ///< lattice rows
    std::filesystem::path file;
};

struct RunConfig {
    Command command = Command::verify;
    std::optional<GraphSource> graph;
    std::vector<double> squeeze{1.0}; ///< one value (broadcast) or one per mode
    std::vector<double> omega{1.0};
    double temperature = 0.0;
    std::vector<VertexSet> partition; ///< one block means block | complement
    double tol = 1e-9;
    std::optional<std::filesystem::path> out;
    Units units = Units::absolute;
    std::string format = "text";
    std::optional<std::filesystem::path> emit_graph;
    std::vector<double> s_grid;
    std::string cuts = "auto";
    unsigned threads = 0;
    std::uint64_t seed = 20240611;
};

/// Bad flags or flag values; exit code 1.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// --help was given; what() holds the help text.
class HelpRequested : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// `args` excludes the program name.
RunConfig parse_args(const std::vector<std::string> &args);

/// "0,1,2" or "0,1|2,3|4".
std::vector<VertexSet> parse_partition(const std::string &text);
/// "start:stop:step", inclusive of stop within half a step.
std::vector<double> parse_grid(const std::string &text);

/// Executes a validated config. Exit codes: 0 ok, 1 usage, 2 numerical
/// failure, 3 I/O.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// parse_args + run with exception-to-exit-code mapping.
int main_entry(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace cvgraph::cli
