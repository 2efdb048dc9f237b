#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/cli.hpp"
#include "cvgraph/io.hpp"

using namespace cvgraph;
using namespace cvgraph::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = main_entry(args, out, err);
    return {code, out.str(), err.str()};
}

double field(const std::string &text, const std::string &key) {
    const auto pos = text.find(key + ": ");
    REQUIRE(pos != std::string::npos);
    return std::stod(text.substr(pos + key.size() + 2));
}

std::string usage_message(const std::vector<std::string> &args) {
    try {
        parse_args(args);
    } catch(const UsageError &e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("parse a negativity invocation") {
    const auto cfg = parse_args({"negativity", "--chain", "6", "--squeeze", "1.5", "--temp", "0.3", "--units",
                                 "gap-rescaled", "--partition", "0,1,2"});
    CHECK(cfg.command == Command::negativity);
    REQUIRE(cfg.graph.has_value());
    CHECK(cfg.graph->kind == GraphSource::Kind::chain);
    CHECK(cfg.graph->n == 6);
    CHECK(cfg.squeeze == std::vector<double>{1.5});
    CHECK(cfg.temperature == 0.3);
    CHECK(cfg.units == Units::gap_rescaled);
    CHECK(cfg.partition == std::vector<VertexSet>{{0, 1, 2}});

    const auto lat = parse_args({"area-law", "--lattice", "5x4", "--cuts", "horizontal"});
    CHECK(lat.graph->kind == GraphSource::Kind::lattice);
    CHECK(lat.graph->nx == 5);
    CHECK(lat.graph->ny == 4);

    CHECK(parse_args({"phase-diagram", "--s-grid", "1:2:0.5"}).units == Units::gap_rescaled);
    CHECK(parse_args({"thermal", "--ring", "4"}).units == Units::absolute);
}

TEST_CASE("usage errors") {
    CHECK(usage_message({"negativity", "--chain", "4", "--ring", "4", "--partition", "0"}).find("conflicting") !=
          std::string::npos);
    CHECK(usage_message({"negativity", "--partition", "0"}).find("missing graph") != std::string::npos);
    CHECK(usage_message({"negativity", "--chain", "4", "--partition", "0,9"}).find("out of range") !=
          std::string::npos);
    CHECK(usage_message({"negativity", "--chain", "4", "--partition", "0,1,2,3"}).find("complement") !=
          std::string::npos);
    CHECK_FALSE(usage_message({"negativity", "--chain", "4"}).empty());
    CHECK_FALSE(usage_message({"thermal", "--chain", "4", "--temp", "-1"}).empty());
    CHECK_FALSE(usage_message({"thermal", "--chain", "4", "--squeeze", "0"}).empty());
    CHECK_FALSE(usage_message({"thermal", "--ring", "2"}).empty());
    CHECK_FALSE(usage_message({"thermal", "--lattice", "4by4"}).empty());
    CHECK(usage_message({"area-law", "--chain", "4", "--cuts", "vertical"}).find("lattice") != std::string::npos);
    CHECK_FALSE(usage_message({"bogus"}).empty());
    CHECK_FALSE(usage_message({}).empty());
}

TEST_CASE("partition and grid syntax") {
    CHECK(parse_partition("0,1|2,3|4") == std::vector<VertexSet>{{0, 1}, {2, 3}, {4}});
    CHECK(parse_partition("3") == std::vector<VertexSet>{{3}});
    CHECK_THROWS_AS(parse_partition("0,,1"), UsageError);
    CHECK_THROWS_AS(parse_partition("0|"), UsageError);
    CHECK_THROWS_AS(parse_partition("a"), UsageError);

    const auto grid = parse_grid("0.5:4:0.25");
    REQUIRE(grid.size() == 15);
    CHECK(grid.front() == 0.5);
    CHECK(grid.back() == doctest::Approx(4.0));
    CHECK(parse_grid("1:1:0.1").size() == 1);
    CHECK_THROWS_AS(parse_grid("1:2"), UsageError);
    CHECK_THROWS_AS(parse_grid("1:2:0"), UsageError);
    CHECK_THROWS_AS(parse_grid("2:1:0.5"), UsageError);
}

TEST_CASE("exit codes") {
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({"negativity", "--chain", "4", "--partition", "0,9"}).code == 1);
    CHECK(invoke({"negativity", "--graph", "/nonexistent/graph.json", "--partition", "0"}).code == 3);

    const auto bad = std::filesystem::temp_directory_path() / "cvgraph_cli_bad.json";
    std::ofstream(bad) << "{\"n\": 2, \"edges\": [[0, 5]]}";
    const auto r = invoke({"thermal", "--graph", bad.string()});
    CHECK(r.code == 3);
    CHECK(r.err.find("outside") != std::string::npos);
    std::filesystem::remove(bad);

    // Partition validated against a file graph at run time.
    const auto ok = std::filesystem::temp_directory_path() / "cvgraph_cli_ok.json";
    io::write_graph(ok, chain(3));
    CHECK(invoke({"negativity", "--graph", ok.string(), "--partition", "7"}).code == 1);
    std::filesystem::remove(ok);

    CHECK(invoke({"classify", "--ring", "4", "--temp", "1"}).code == 2);
}

TEST_CASE("negativity and classify output") {
    const auto r = invoke({"negativity", "--chain", "2", "--partition", "0"});
    REQUIRE(r.code == 0);
    CHECK(field(r.out, "log_negativity") == doctest::Approx(std::log2(1.0 + std::sqrt(2.0))).epsilon(1e-12));

    const auto c = invoke({"classify", "--chain", "8", "--temp", "1.3", "--units", "gap-rescaled"});
    REQUIRE(c.code == 0);
    CHECK(c.out.find("verdict: bound-band") != std::string::npos);
}

TEST_CASE("boundary check output") {
    const auto r = invoke({"boundary-check", "--lattice", "4x4", "--squeeze", "1.2", "--temp", "0.4",
                           "--partition", "0,4,8,12"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("boundary_vertices: 0 1 4 5 8 9 12 13") != std::string::npos);
    CHECK(field(r.out, "max_difference") <= 1e-9);
    CHECK(field(r.out, "full_log_negativity") > 0.0);

    const auto multi = invoke({"boundary-check", "--chain", "6", "--partition", "0,1|2,3|4,5"});
    REQUIRE(multi.code == 0);
    CHECK(multi.out.find("block2_vs_rest.difference") != std::string::npos);
    CHECK(field(multi.out, "max_difference") <= 1e-9);
}

TEST_CASE("csv output is deterministic") {
    const std::vector<std::string> args{"phase-diagram", "--s-grid", "0.5:2:0.5", "--threads", "2"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("# units: gap-rescaled\ns,inv_s,", 0) == 0);

    const auto abs = invoke({"phase-diagram", "--s-grid", "1:1:1", "--omega", "2", "--units", "absolute"});
    CHECK(abs.out.find("# units: absolute") != std::string::npos);

    const std::vector<std::string> area{"area-law", "--lattice", "3x3", "--temp", "0.2", "--threads", "3"};
    const auto c = invoke(area);
    REQUIRE(c.code == 0);
    CHECK(c.out == invoke(area).out);
    CHECK(c.out.find("cut_id,boundary_modes,crossing_edges,log_negativity") != std::string::npos);
}

TEST_CASE("graph-state writes the covariance and the graph") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto cov = dir / "cvgraph_cli_cov.json";
    const auto graph = dir / "cvgraph_cli_graph.json";
    const auto r = invoke({"graph-state", "--ring", "5", "--squeeze", "1.3", "--format", "json", "--out",
                           cov.string(), "--emit-graph", graph.string()});
    REQUIRE(r.code == 0);
    CHECK(io::read_graph(graph) == ring(5));
    std::ifstream in(cov);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str().find("\"V\"") != std::string::npos);
    std::filesystem::remove(cov);
    std::filesystem::remove(graph);

    CHECK(invoke({"graph-state", "--chain", "2", "--out", "/nonexistent/dir/x.txt"}).code == 3);
}
