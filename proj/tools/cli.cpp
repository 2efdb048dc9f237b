#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cvgraph/entanglement.hpp"
#include "cvgraph/errors.hpp"
#include "cvgraph/gaussian.hpp"
#include "cvgraph/hamiltonian.hpp"
#include "cvgraph/io.hpp"
#include "cvgraph/verify.hpp"

namespace cvgraph::cli {

namespace {

    std::vector<std::string> split(const std::string &text, char sep) {
        std::vector<std::string> parts;
        std::string item;
        std::istringstream in(text);
        while(std::getline(in, item, sep)) parts.push_back(item);
        if(!text.empty() && text.back() == sep) parts.emplace_back();
        return parts;
    }

    std::string trim(const std::string &s) {
        const auto b = s.find_first_not_of(" \t");
        if(b == std::string::npos) return {};
        const auto e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
    }

    double parse_number(const std::string &raw, const std::string &what) {
        const std::string s = trim(raw);
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(s, &used);
        } catch(const std::exception &) { used = 0; }
        if(s.empty() || used != s.size() || !std::isfinite(x)) throw UsageError(what + ": '" + raw + "' is not a number");
        return x;
    }

    std::size_t parse_index(const std::string &raw, const std::string &what) {
        const std::string s = trim(raw);
        if(s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw UsageError(what + ": '" + raw + "' is not a non-negative integer");
        return static_cast<std::size_t>(std::stoull(s));
    }

    std::vector<double> parse_list(const std::string &text, const std::string &what) {
        std::vector<double> values;
        for(const auto &part : split(text, ',')) values.push_back(parse_number(part, what));
        if(values.empty()) throw UsageError(what + ": empty list");
        return values;
    }

    Command command_from_name(const std::string &name) {
        if(name == "graph-state") return Command::graph_state;
        if(name == "thermal") return Command::thermal;
        if(name == "negativity") return Command::negativity;
        if(name == "boundary-check") return Command::boundary_check;
        if(name == "phase-diagram") return Command::phase_diagram;
        if(name == "area-law") return Command::area_law;
        if(name == "classify") return Command::classify;
        return Command::verify;
    }

    bool needs_graph(Command c) { return c != Command::phase_diagram && c != Command::verify; }
    bool needs_partition(Command c) { return c == Command::negativity || c == Command::boundary_check; }

    std::optional<std::size_t> known_vertex_count(const GraphSource &g) {
        switch(g.kind) {
            case GraphSource::Kind::lattice: return g.nx * g.ny;
            case GraphSource::Kind::file: return std::nullopt;
            default: return g.n;
        }
    }

    Graph build_graph(const GraphSource &src) {
        switch(src.kind) {
            case GraphSource::Kind::chain: return chain(src.n);
            case GraphSource::Kind::ring: return ring(src.n);
            case GraphSource::Kind::lattice: return lattice2d(src.nx, src.ny);
            case GraphSource::Kind::complete: return complete(src.n);
            case GraphSource::Kind::file: return io::read_graph(src.file);
        }
        throw std::logic_error("unknown graph source");
    }

    Partition build_partition(const std::vector<VertexSet> &blocks, std::size_t n) {
        try {
            if(blocks.size() == 1) {
                VertexSet first = blocks.front();
                std::sort(first.begin(), first.end());
                first.erase(std::unique(first.begin(), first.end()), first.end());
                for(std::size_t v : first)
                    if(v >= n) throw UsageError("--partition: vertex " + std::to_string(v) + " out of range for " + std::to_string(n) + " vertices");
                if(first.size() == n) throw UsageError("--partition: block covers every vertex, complement would be empty");
                return Partition::bipartition(n, first);
            }
            return Partition(n, blocks);
        } catch(const std::invalid_argument &e) { throw UsageError(std::string("--partition: ") + e.what()); }
    }

    std::vector<double> broadcast(const std::vector<double> &values, std::size_t n, const char *flag) {
        if(values.size() == 1) return std::vector<double>(n, values.front());
        if(values.size() != n) {
            std::ostringstream msg;
            msg << flag << ": got " << values.size() << " values for " << n << " modes";
            throw UsageError(msg.str());
        }
        return values;
    }

    ModelParams build_params(const RunConfig &cfg, std::size_t n) {
        try {
            return ModelParams(broadcast(cfg.squeeze, n, "--squeeze"), broadcast(cfg.omega, n, "--omega"));
        } catch(const std::invalid_argument &e) { throw UsageError(e.what()); }
    }

    double absolute_temperature(const RunConfig &cfg, const ModelParams &params) {
        return cfg.units == Units::gap_rescaled ? cfg.temperature * params.gap() : cfg.temperature;
    }

    std::string units_name(Units u) { return u == Units::absolute ? "absolute" : "gap-rescaled"; }

    // Writes to --out when given, to `fallback` otherwise.
    template<class Fn>
    void emit(const RunConfig &cfg, std::ostream &fallback, Fn &&write) {
        if(!cfg.out) {
            write(fallback);
            return;
        }
        std::ofstream file(*cfg.out, std::ios::binary);
        if(!file) throw io::IoError("cannot open '" + cfg.out->string() + "' for writing");
        write(file);
        file.flush();
        if(!file) throw io::IoError("error while writing '" + cfg.out->string() + "'");
    }

    void write_state(const RunConfig &cfg, std::ostream &out, const GaussianState &state) {
        emit(cfg, out, [&](std::ostream &o) {
            o << (cfg.format == "json" ? io::covariance_to_json(state) : io::covariance_to_text(state));
        });
    }

    void print_negativity(std::ostream &o, const std::string &prefix, const NegativityResult &r) {
        o << prefix << "log_negativity: " << io::format_double(r.value) << "\n";
        o << prefix << "min_pt_eig: " << io::format_double(r.min_pt_eig) << "\n";
    }

    int run_boundary_check(const RunConfig &cfg, std::ostream &out, const Graph &g, const ModelParams &params,
                           const Partition &p, double t) {
        const auto bd = boundary(g, p);
        std::vector<Partition> cuts;
        if(p.is_bipartition()) {
            cuts.push_back(p);
        } else {
            for(const auto &block : p.blocks()) cuts.push_back(Partition::bipartition(g.n(), block));
        }
        emit(cfg, out, [&](std::ostream &o) {
            o << "boundary_vertices:";
            for(std::size_t v : bd.boundary_vertices) o << ' ' << v;
            o << "\ncrossing_edges:";
            for(const auto &[i, j] : bd.crossing_edges) o << " {" << i << ',' << j << '}';
            o << "\nnonboundary_vertices:";
            for(std::size_t v : bd.nonboundary_vertices) o << ' ' << v;
            o << "\n";
            double worst = 0.0;
            for(std::size_t c = 0; c < cuts.size(); ++c) {
                const std::string prefix = p.is_bipartition() ? "" : "block" + std::to_string(c) + "_vs_rest.";
                const auto full = thermal_negativity(g, params, t, cuts[c]);
                const auto reduced = boundary_negativity(g, params, t, cuts[c]);
                const double diff = std::abs(full.value - reduced.negativity.value);
                worst = std::max(worst, diff);
                o << prefix << "full_log_negativity: " << io::format_double(full.value) << "\n";
                o << prefix << "boundary_log_negativity: " << io::format_double(reduced.negativity.value) << "\n";
                o << prefix << "boundary_modes: " << reduced.boundary_modes << "\n";
                o << prefix << "difference: " << io::format_double(diff) << "\n";
            }
            o << "max_difference: " << io::format_double(worst) << "\n";
        });
        return 0;
    }

    int run_verify(const RunConfig &cfg, std::ostream &out) {
        const auto suites = run_invariant_suites(cfg.seed);
        bool ok = true;
        emit(cfg, out, [&](std::ostream &o) {
            for(const auto &s : suites) {
                o << (s.passed ? "PASS " : "FAIL ") << s.name << " max_residual=" << io::format_double(s.max_residual)
                  << " threshold=" << io::format_double(s.threshold) << "\n";
                ok = ok && s.passed;
            }
        });
        return ok ? 0 : 2;
    }

} // namespace

std::vector<VertexSet> parse_partition(const std::string &text) {
    std::vector<VertexSet> blocks;
    for(const auto &chunk : split(text, '|')) {
        VertexSet block;
        for(const auto &item : split(chunk, ',')) block.push_back(parse_index(item, "--partition"));
        if(block.empty()) throw UsageError("--partition: empty block in '" + text + "'");
        blocks.push_back(std::move(block));
    }
    if(blocks.empty()) throw UsageError("--partition: empty partition");
    return blocks;
}

std::vector<double> parse_grid(const std::string &text) {
    const auto parts = split(text, ':');
    if(parts.size() != 3) throw UsageError("--s-grid: expected start:stop:step, got '" + text + "'");
    const double start = parse_number(parts[0], "--s-grid");
    const double stop = parse_number(parts[1], "--s-grid");
    const double step = parse_number(parts[2], "--s-grid");
    if(!(step > 0.0)) throw UsageError("--s-grid: step must be > 0");
    if(stop < start) throw UsageError("--s-grid: stop must be >= start");
    std::vector<double> grid;
    for(std::size_t k = 0;; ++k) {
        const double x = start + static_cast<double>(k) * step;
        if(x > stop + 0.5 * step) break;
        grid.push_back(x);
    }
    return grid;
}

RunConfig parse_args(const std::vector<std::string> &args) {
    CLI::App app{"Gapped continuous-variable graph Hamiltonians: Gaussian states, negativity and phase diagrams",
                 "cvgraph"};
    app.require_subcommand(1);

    struct Raw {
        std::optional<std::size_t> chain, ring, complete;
        std::optional<std::string> lattice, graph, partition, s_grid, out, emit_graph;
        std::string squeeze = "1", omega = "1", units, format = "text", cuts = "auto";
        double temp = 0.0, tol = 1e-9;
        unsigned threads = 0;
        std::uint64_t seed = 20240611;
    } raw;

    auto add_graph = [&](CLI::App *sub) {
        sub->add_option("--chain", raw.chain, "open chain with N vertices");
        sub->add_option("--ring", raw.ring, "ring with N >= 3 vertices");
        sub->add_option("--lattice", raw.lattice, "2D lattice NXxNY, e.g. 4x4");
        sub->add_option("--complete", raw.complete, "complete graph on N vertices");
        sub->add_option("--graph", raw.graph, "graph JSON file {\"n\":..,\"edges\":[[i,j],..]}");
        sub->add_option("--squeeze", raw.squeeze, "squeezing s (scalar or comma list per mode)");
        sub->add_option("--omega", raw.omega, "frequency omega (scalar or comma list per mode)");
    };
    auto add_temp = [&](CLI::App *sub) {
        sub->add_option("--temp", raw.temp, "temperature (see --units)");
        sub->add_option("--units", raw.units, "absolute | gap-rescaled")->check(CLI::IsMember({"absolute", "gap-rescaled"}));
    };
    auto add_out = [&](CLI::App *sub) { sub->add_option("--out", raw.out, "output file (default stdout)"); };

    auto *gs = app.add_subcommand("graph-state", "covariance matrix of the Gaussian graph state");
    add_graph(gs);
    add_out(gs);
    gs->add_option("--format", raw.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    gs->add_option("--emit-graph", raw.emit_graph, "also write the canonical graph JSON here");

    auto *th = app.add_subcommand("thermal", "covariance matrix of the thermal state");
    add_graph(th);
    add_temp(th);
    add_out(th);
    th->add_option("--format", raw.format, "text | json")->check(CLI::IsMember({"text", "json"}));

    for(const char *name : {"negativity", "boundary-check"}) {
        auto *sub = app.add_subcommand(name, std::string(name) == "negativity"
                                                 ? "log-negativity of the thermal state across a bipartition"
                                                 : "full-system vs boundary-subgraph negativity");
        add_graph(sub);
        add_temp(sub);
        add_out(sub);
        sub->add_option("--partition", raw.partition, "first block '0,1,2' or blocks '0,1|2,3|4'")->required();
    }

    auto *pd = app.add_subcommand("phase-diagram", "critical temperatures T2c, T3c over a squeezing grid");
    pd->add_option("--s-grid", raw.s_grid, "start:stop:step")->required();
    pd->add_option("--omega", raw.omega, "frequency omega");
    pd->add_option("--tol", raw.tol, "bisection tolerance in gap units");
    pd->add_option("--units", raw.units, "absolute | gap-rescaled")->check(CLI::IsMember({"absolute", "gap-rescaled"}));
    pd->add_option("--threads", raw.threads, "worker threads (0 = all cores)");
    add_out(pd);

    auto *al = app.add_subcommand("area-law", "negativity across a family of cuts via boundary subgraphs");
    add_graph(al);
    add_temp(al);
    add_out(al);
    al->add_option("--cuts", raw.cuts, "vertical | horizontal | prefix | auto")
        ->check(CLI::IsMember({"vertical", "horizontal", "prefix", "auto"}));
    al->add_option("--threads", raw.threads, "worker threads (0 = all cores)");

    auto *cl = app.add_subcommand("classify", "distillability class of a thermal chain");
    add_graph(cl);
    add_temp(cl);
    add_out(cl);

    auto *vf = app.add_subcommand("verify", "run every invariant suite");
    vf->add_option("--seed", raw.seed, "RNG seed");
    add_out(vf);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch(const CLI::CallForHelp &) {
        throw HelpRequested(app.help());
    } catch(const CLI::CallForAllHelp &) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch(const CLI::ParseError &e) { throw UsageError(e.what()); }

    RunConfig cfg;
    cfg.command = command_from_name(app.get_subcommands().front()->get_name());

    auto source = [](GraphSource::Kind kind, std::size_t n) {
        GraphSource src;
        src.kind = kind;
        src.n = n;
        return src;
    };
    int sources = 0;
    if(raw.chain) {
        ++sources;
        cfg.graph = source(GraphSource::Kind::chain, *raw.chain);
    }
    if(raw.ring) {
        ++sources;
        cfg.graph = source(GraphSource::Kind::ring, *raw.ring);
    }
    if(raw.complete) {
        ++sources;
        cfg.graph = source(GraphSource::Kind::complete, *raw.complete);
    }
    if(raw.lattice) {
        ++sources;
        const auto dims = split(*raw.lattice, 'x');
        if(dims.size() != 2) throw UsageError("--lattice: expected NXxNY, got '" + *raw.lattice + "'");
        GraphSource src = source(GraphSource::Kind::lattice, 0);
        src.nx = parse_index(dims[0], "--lattice");
        src.ny = parse_index(dims[1], "--lattice");
        cfg.graph = src;
    }
    if(raw.graph) {
        ++sources;
        GraphSource src = source(GraphSource::Kind::file, 0);
        src.file = *raw.graph;
        cfg.graph = src;
    }
    if(sources > 1) throw UsageError("conflicting graph sources: give exactly one of --chain, --ring, --lattice, --complete, --graph");
    if(needs_graph(cfg.command) && sources == 0)
        throw UsageError("missing graph source: give one of --chain, --ring, --lattice, --complete, --graph");
    if(cfg.graph) {
        const auto &g = *cfg.graph;
        if(g.kind != GraphSource::Kind::file) {
            const std::size_t n = *known_vertex_count(g);
            if(n == 0) throw UsageError("graph must have at least one vertex");
            if(g.kind == GraphSource::Kind::ring && g.n < 3) throw UsageError("--ring: need at least 3 vertices");
        }
    }

    cfg.squeeze = parse_list(raw.squeeze, "--squeeze");
    cfg.omega = parse_list(raw.omega, "--omega");
    for(double s : cfg.squeeze)
        if(!(s > 0.0)) throw UsageError("--squeeze: values must be > 0");
    for(double w : cfg.omega)
        if(!(w > 0.0)) throw UsageError("--omega: values must be > 0");

    cfg.temperature = raw.temp;
    if(cfg.temperature < 0.0) throw UsageError("--temp: must be >= 0");
    cfg.tol = raw.tol;
    if(!(cfg.tol > 0.0)) throw UsageError("--tol: must be > 0");
    cfg.threads = raw.threads;
    cfg.seed = raw.seed;
    cfg.format = raw.format;
    cfg.cuts = raw.cuts;
    if(raw.out) cfg.out = *raw.out;
    if(raw.emit_graph) cfg.emit_graph = *raw.emit_graph;

    if(raw.units.empty())
        cfg.units = cfg.command == Command::phase_diagram ? Units::gap_rescaled : Units::absolute;
    else
        cfg.units = raw.units == "absolute" ? Units::absolute : Units::gap_rescaled;

    if(raw.s_grid) {
        cfg.s_grid = parse_grid(*raw.s_grid);
        for(double s : cfg.s_grid)
            if(!(s > 0.0)) throw UsageError("--s-grid: squeezing values must be > 0");
    }

    if(needs_partition(cfg.command)) {
        cfg.partition = parse_partition(*raw.partition);
        if(const auto n = known_vertex_count(*cfg.graph)) build_partition(cfg.partition, *n);
    }
    if(cfg.command == Command::area_law && (cfg.cuts == "vertical" || cfg.cuts == "horizontal") &&
       cfg.graph->kind != GraphSource::Kind::lattice)
        throw UsageError("--cuts " + cfg.cuts + " needs a --lattice graph");
    return cfg;
}

int run(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if(cfg.command == Command::verify) return run_verify(cfg, out);

    if(cfg.command == Command::phase_diagram) {
        if(cfg.omega.size() != 1) throw UsageError("phase-diagram: --omega takes a single value");
        const double omega = cfg.omega.front();
        auto rows = phase_diagram(cfg.s_grid, omega, cfg.tol, cfg.threads);
        if(cfg.units == Units::absolute)
            for(auto &r : rows) r = in_absolute_units(r, omega);
        emit(cfg, out, [&](std::ostream &o) { io::write_phase_diagram_csv(o, rows, units_name(cfg.units)); });
        return 0;
    }

    const Graph g = build_graph(*cfg.graph);
    const ModelParams params = build_params(cfg, g.n());
    const double t = absolute_temperature(cfg, params);

    switch(cfg.command) {
        case Command::graph_state: {
            if(cfg.emit_graph) io::write_graph(*cfg.emit_graph, g);
            write_state(cfg, out, graph_state(g, params));
            return 0;
        }
        case Command::thermal: write_state(cfg, out, thermal_state(hamiltonian_matrix(g, params), t)); return 0;
        case Command::negativity: {
            const Partition p = build_partition(cfg.partition, g.n());
            if(!p.is_bipartition()) throw UsageError("negativity: log-negativity needs a bipartition (two blocks)");
            const auto r = thermal_negativity(g, params, t, p);
            emit(cfg, out, [&](std::ostream &o) {
                o << "temperature: " << io::format_double(t) << "\n";
                print_negativity(o, "", r);
            });
            return 0;
        }
        case Command::boundary_check:
            return run_boundary_check(cfg, out, g, params, build_partition(cfg.partition, g.n()), t);
        case Command::area_law: {
            std::string family = cfg.cuts;
            if(family == "auto") family = cfg.graph->kind == GraphSource::Kind::lattice ? "vertical" : "prefix";
            std::vector<Partition> cuts;
            if(family == "vertical")
                cuts = vertical_cuts(cfg.graph->nx, cfg.graph->ny);
            else if(family == "horizontal")
                cuts = horizontal_cuts(cfg.graph->nx, cfg.graph->ny);
            else
                cuts = prefix_cuts(g.n());
            if(cuts.empty()) throw UsageError("area-law: the graph admits no cut of this family");
            const auto rows = area_law_scan(g, params, t, cuts, cfg.threads);
            emit(cfg, out, [&](std::ostream &o) { io::write_area_law_csv(o, rows, units_name(cfg.units)); });
            return 0;
        }
        case Command::classify: {
            const auto rep = classify_distillability(g, params, t);
            emit(cfg, out, [&](std::ostream &o) {
                o << "verdict: " << to_string(rep.verdict) << "\n";
                o << "temperature: " << io::format_double(t) << "\n";
                o << "max_two_block_log_negativity: " << io::format_double(rep.max_two_block) << "\n";
                o << "min_interior_one_vs_rest_log_negativity: " << io::format_double(rep.min_one_vs_rest) << "\n";
                for(std::size_t k = 0; k < rep.two_block.size(); ++k)
                    o << "two_block[0.." << k << "]: " << io::format_double(rep.two_block[k].value) << " "
                      << io::format_double(rep.two_block[k].min_pt_eig) << "\n";
                for(std::size_t j = 0; j < rep.one_vs_rest.size(); ++j)
                    o << "one_vs_rest[" << j << "]: " << io::format_double(rep.one_vs_rest[j].value) << " "
                      << io::format_double(rep.one_vs_rest[j].min_pt_eig) << "\n";
            });
            return 0;
        }
        default: break;
    }
    err << "unhandled command\n";
    return 1;
}

int main_entry(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    try {
        return run(parse_args(args), out, err);
    } catch(const HelpRequested &h) {
        out << h.what();
        return 0;
    } catch(const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch(const io::IoError &e) {
        err << "i/o error: " << e.what() << "\n";
        return 3;
    } catch(const io::FormatError &e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch(const std::exception &e) {
        err << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}

} // namespace cvgraph::cli
