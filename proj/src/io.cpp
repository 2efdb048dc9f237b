#include "cvgraph/io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace cvgraph::io {

namespace {

    using json = nlohmann::json;

    std::size_t as_index(const json &value, const std::string &field) {
        if(!value.is_number_integer() || value.get<std::int64_t>() < 0)
            throw FormatError("graph: field '" + field + "' must be a non-negative integer");
        return value.get<std::size_t>();
    }

    std::string read_file(const std::filesystem::path &path) {
        std::ifstream in(path, std::ios::binary);
        if(!in) throw IoError("cannot open '" + path.string() + "' for reading");
        std::ostringstream buf;
        buf << in.rdbuf();
        if(in.bad()) throw IoError("error while reading '" + path.string() + "'");
        return buf.str();
    }

    json matrix_rows(const Matrix &m) {
        json rows = json::array();
        for(Eigen::Index i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for(Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
            rows.push_back(std::move(row));
        }
        return rows;
    }

} // namespace

Graph graph_from_json(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch(const json::parse_error &e) {
        throw FormatError(std::string("graph: ") + e.what());
    }
    if(!doc.is_object()) throw FormatError("graph: top level must be a JSON object");
    if(!doc.contains("n")) throw FormatError("graph: missing field 'n'");
    if(!doc.contains("edges")) throw FormatError("graph: missing field 'edges'");
    const std::size_t n = as_index(doc.at("n"), "n");
    const json &edges = doc.at("edges");
    if(!edges.is_array()) throw FormatError("graph: field 'edges' must be an array");

    std::vector<Edge> list;
    for(std::size_t k = 0; k < edges.size(); ++k) {
        const std::string field = "edges[" + std::to_string(k) + "]";
        const json &e = edges[k];
        if(!e.is_array() || e.size() != 2) throw FormatError("graph: field '" + field + "' must be a pair [i, j]");
        list.emplace_back(as_index(e[0], field + "[0]"), as_index(e[1], field + "[1]"));
    }
    try {
        return Graph(n, std::move(list));
    } catch(const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
}

Graph read_graph(const std::filesystem::path &path) {
    const std::string text = read_file(path);
    try {
        return graph_from_json(text);
    } catch(const FormatError &e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

std::string graph_to_json(const Graph &g) {
    json edges = json::array();
    for(const auto &[i, j] : g.edges()) edges.push_back({i, j});
    json doc = {{"n", g.n()}, {"edges", std::move(edges)}};
    return doc.dump() + "\n";
}

void write_graph(const std::filesystem::path &path, const Graph &g) {
    std::ofstream out(path, std::ios::binary);
    if(!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << graph_to_json(g);
    if(!out) throw IoError("error while writing '" + path.string() + "'");
}

std::string format_double(double x) {
    std::ostringstream s;
    s << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
    return s.str();
}

std::string covariance_to_json(const GaussianState &state) {
    json mean = json::array();
    for(Eigen::Index i = 0; i < state.mean().size(); ++i) mean.push_back(state.mean()(i));
    json doc = {{"n", state.n()}, {"V", matrix_rows(state.covariance())}, {"mean", std::move(mean)}};
    return doc.dump() + "\n";
}

std::string covariance_to_text(const GaussianState &state) {
    std::ostringstream s;
    const Matrix &v = state.covariance();
    s << "# covariance matrix V_jk = <{dr_j, dr_k}>/2, hbar = 1, vacuum V = I/2\n";
    s << "# modes: " << state.n() << ", row/column order (q_1..q_n, p_1..p_n)\n";
    for(Eigen::Index i = 0; i < v.rows(); ++i) {
        for(Eigen::Index j = 0; j < v.cols(); ++j) s << (j ? " " : "") << format_double(v(i, j));
        s << "\n";
    }
    s << "# mean\n";
    for(Eigen::Index i = 0; i < state.mean().size(); ++i) s << (i ? " " : "") << format_double(state.mean()(i));
    s << "\n";
    return s.str();
}

void write_phase_diagram_csv(std::ostream &out, std::span<const PhaseDiagramRow> rows, const std::string &units) {
    out << "# units: " << units << "\n";
    out << "s,inv_s,T2c,T3c,T2c_closed,T3c_closed,inv_T2c,inv_T3c\n";
    for(const auto &r : rows) {
        out << format_double(r.s) << ',' << format_double(r.inv_s) << ',' << format_double(r.t2c) << ','
            << format_double(r.t3c) << ',' << format_double(r.t2c_closed) << ',' << format_double(r.t3c_closed) << ','
            << format_double(r.inv_t2c) << ',' << format_double(r.inv_t3c) << '\n';
    }
}

void write_area_law_csv(std::ostream &out, std::span<const AreaLawRow> rows, const std::string &units) {
    out << "# units: " << units << "\n";
    out << "cut_id,boundary_modes,crossing_edges,log_negativity\n";
    for(const auto &r : rows)
        out << r.cut_id << ',' << r.boundary_modes << ',' << r.crossing_edges << ',' << format_double(r.log_negativity) << '\n';
}

} // namespace cvgraph::io
