#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>

#include "cvgraph/entanglement.hpp"
#include "cvgraph/gaussian.hpp"
#include "cvgraph/graph.hpp"

namespace cvgraph::io {

/// Malformed input file content; the message names the line or field.
class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// {"n": <int>, "edges": [[i, j], ...]} with 0-based indices.
Graph graph_from_json(const std::string &text);
Graph read_graph(const std::filesystem::path &path);
std::string graph_to_json(const Graph &g);
void write_graph(const std::filesystem::path &path, const Graph &g);

/// 17 significant digits, enough to round-trip a double.
std::string format_double(double x);

/// {"n": n, "V": [[...], ...], "mean": [...]}, rows in (q_1..q_n, p_1..p_n) order.
std::string covariance_to_json(const GaussianState &state);
/// Whitespace-separated rows preceded by '#' comment lines documenting the ordering.
std::string covariance_to_text(const GaussianState &state);

/// Header "s,inv_s,T2c,T3c,T2c_closed,T3c_closed,inv_T2c,inv_T3c", preceded by
/// a "# units: ..." comment line.
void write_phase_diagram_csv(std::ostream &out, std::span<const PhaseDiagramRow> rows, const std::string &units);
/// Header "cut_id,boundary_modes,crossing_edges,log_negativity".
void write_area_law_csv(std::ostream &out, std::span<const AreaLawRow> rows, const std::string &units);

} // namespace cvgraph::io
