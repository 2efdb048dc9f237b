#include "cvgraph/entanglement.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace cvgraph {

namespace {

    // Runs body(i) for i in [0, count) on a small worker pool. The first
    // exception (lowest index) is rethrown after all workers have joined.
    void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)> &body) {
        if(threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
        threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
        std::vector<std::exception_ptr> errors(count);
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for(std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch(...) { errors[i] = std::current_exception(); }
            }
        };
        if(threads <= 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            pool.reserve(threads);
            for(unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        }
        for(auto &e : errors)
            if(e) std::rethrow_exception(e);
    }

    double arccoth(double x) { return std::atanh(1.0 / x); }

    VertexSet first_block(const Partition &p, const char *what) {
        if(!p.is_bipartition()) {
            std::ostringstream msg;
            msg << what << ": log-negativity needs a bipartition, got " << p.block_count() << " blocks";
            throw std::invalid_argument(msg.str());
        }
        return p.blocks().front();
    }

    bool is_open_chain(const Graph &g) { return g.n() >= 2 && g.edges() == chain(g.n()).edges(); }

} // namespace

NegativityResult log_negativity(const GaussianState &state, std::span<const std::size_t> subset) {
    const std::size_t n = state.n();
    std::vector<bool> in(n, false);
    std::size_t count = 0;
    for(std::size_t j : subset) {
        if(j >= n) {
            std::ostringstream msg;
            msg << "log_negativity: mode " << j << " out of range for " << n << " modes";
            throw std::invalid_argument(msg.str());
        }
        if(!in[j]) ++count;
        in[j] = true;
    }
    if(count == 0 || count == n) throw std::invalid_argument("log_negativity: subset must be non-empty and proper");

    const Spectrum pt = symplectic_eigenvalues(partial_transpose(state.covariance(), subset));
    double value = 0.0;
    for(double nu : pt)
        if(nu < 0.5 - ppt_tolerance) value -= std::log2(2.0 * nu);
    return {value, pt.min()};
}

NegativityResult log_negativity(const GaussianState &state, const Partition &bipartition) {
    if(bipartition.n() != state.n()) throw std::invalid_argument("log_negativity: partition size does not match state");
    const VertexSet subset = first_block(bipartition, "log_negativity");
    return log_negativity(state, subset);
}

NegativityResult thermal_negativity(const Graph &g, const ModelParams &params, double temperature,
                                    const Partition &bipartition) {
    return log_negativity(thermal_state(hamiltonian_matrix(g, params), temperature), bipartition);
}

BoundaryNegativity boundary_negativity(const Graph &g, const ModelParams &params, double temperature,
                                       const Partition &bipartition) {
    first_block(bipartition, "boundary_negativity");
    const BoundaryDecomposition bd = boundary(g, bipartition);
    BoundaryNegativity out{{0.0, std::numeric_limits<double>::infinity()}, bd.boundary_vertices.size(),
                           bd.crossing_edges.size()};
    if(bd.boundary_vertices.empty()) return out;

    const ModelParams local = params.restricted_to(bd.boundary_vertices);
    const Partition induced = bipartition.restricted_to(bd.boundary_vertices);
    out.negativity = thermal_negativity(bd.boundary_subgraph, local, temperature, induced);
    return out;
}

double critical_temperature(const Graph &g, const ModelParams &params, const Partition &bipartition, double tol) {
    if(!(tol > 0.0)) throw std::invalid_argument("critical_temperature: tolerance must be > 0");
    const VertexSet subset = first_block(bipartition, "critical_temperature");
    const QuadraticForm h = hamiltonian_matrix(g, params);

    std::vector<std::pair<double, double>> samples;
    auto criterion = [&](double t) {
        const double f = log_negativity(thermal_state(h, t), subset).min_pt_eig - 0.5;
        samples.emplace_back(t, f);
        return f;
    };

    if(criterion(0.0) >= -ppt_tolerance)
        throw std::invalid_argument("critical_temperature: state is not entangled across the cut at T = 0");

    constexpr int max_expansions = 60;
    const double gap = params.gap();
    double lo = gap / 100.0;
    double hi = 100.0 * gap;
    for(int k = 0; criterion(lo) >= 0.0; ++k) {
        if(k == max_expansions) throw NoTransitionError("critical_temperature: no entangled temperature above 0 found");
        lo /= 2.0;
    }
    for(int k = 0; criterion(hi) < 0.0; ++k) {
        if(k == max_expansions) throw NoTransitionError("critical_temperature: entanglement persists at all bracketed temperatures");
        hi *= 2.0;
    }

    constexpr int max_iterations = 200;
    for(int it = 0; it < max_iterations && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        (criterion(mid) < 0.0 ? lo : hi) = mid;
    }

    std::sort(samples.begin(), samples.end());
    for(std::size_t k = 1; k < samples.size(); ++k) {
        if(samples[k].second < samples[k - 1].second - 1e-12) {
            std::ostringstream msg;
            msg << "critical_temperature: PT criterion is not monotone in T near T = " << samples[k].first;
            throw NumericalError(msg.str());
        }
    }
    return 0.5 * (lo + hi);
}

double closed_form_t2c(double s) {
    const double s2 = s * s;
    return 1.0 / (2.0 * arccoth(std::sqrt(1.0 + s2 * s2) + s2));
}

double closed_form_t3c(double s) {
    const double s4 = s * s * s * s;
    const double inner = 1.0 + 4.0 * s4 - 2.0 * std::sqrt(2.0) * std::sqrt(2.0 * s4 * s4 + s4);
    return 1.0 / (2.0 * arccoth(1.0 / std::sqrt(inner)));
}

std::vector<PhaseDiagramRow> phase_diagram(std::span<const double> s_grid, double omega, double tol,
                                           unsigned threads) {
    for(double s : s_grid)
        if(!(s > 0.0)) throw std::invalid_argument("phase_diagram: squeezing values must be > 0");
    if(!(omega > 0.0)) throw std::invalid_argument("phase_diagram: omega must be > 0");

    const Graph pair = chain(2);
    const Graph triple = chain(3);
    const Partition pair_cut(2, {{0}, {1}});
    const Partition centre_cut(3, {{1}, {0, 2}});

    std::vector<PhaseDiagramRow> rows(s_grid.size());
    parallel_for(s_grid.size(), threads, [&](std::size_t i) {
        const double s = s_grid[i];
        const double gap = omega / (s * s);
        try {
            PhaseDiagramRow &r = rows[i];
            r.s = s;
            r.inv_s = 1.0 / s;
            r.t2c = critical_temperature(pair, ModelParams::uniform(2, s, omega), pair_cut, tol * gap) / gap;
            r.t3c = critical_temperature(triple, ModelParams::uniform(3, s, omega), centre_cut, tol * gap) / gap;
            r.t2c_closed = closed_form_t2c(s);
            r.t3c_closed = closed_form_t3c(s);
            r.inv_t2c = 1.0 / r.t2c;
            r.inv_t3c = 1.0 / r.t3c;
        } catch(const std::exception &e) {
            std::ostringstream msg;
            msg << "phase_diagram: row s = " << s << ": " << e.what();
            throw NumericalError(msg.str());
        }
    });
    return rows;
}

PhaseDiagramRow in_absolute_units(const PhaseDiagramRow &row, double omega) {
    const double gap = omega / (row.s * row.s);
    PhaseDiagramRow out = row;
    out.t2c *= gap;
    out.t3c *= gap;
    out.t2c_closed *= gap;
    out.t3c_closed *= gap;
    out.inv_t2c = 1.0 / out.t2c;
    out.inv_t3c = 1.0 / out.t3c;
    return out;
}

std::string to_string(Distillability d) {
    switch(d) {
        case Distillability::npt_two_block: return "NPT-two-block";
        case Distillability::bound_band: return "bound-band";
        case Distillability::separable_boundary: return "separable-boundary";
    }
    return "unknown";
}

DistillabilityReport classify_distillability(const Graph &g, const ModelParams &params, double temperature) {
    if(!is_open_chain(g)) throw UnsupportedError("classify_distillability: only open chains are supported");
    if(params.size() != g.n()) throw std::invalid_argument("classify_distillability: parameters sized wrongly");
    if(!params.is_uniform()) throw UnsupportedError("classify_distillability: requires uniform parameters");

    const std::size_t n = g.n();
    const GaussianState state = thermal_state(hamiltonian_matrix(g, params), temperature);

    DistillabilityReport rep{};
    rep.max_two_block = 0.0;
    rep.min_two_block_pt_eig = std::numeric_limits<double>::infinity();
    for(std::size_t k = 0; k + 1 < n; ++k) {
        VertexSet left(k + 1);
        for(std::size_t v = 0; v <= k; ++v) left[v] = v;
        const auto r = log_negativity(state, left);
        rep.two_block.push_back(r);
        rep.max_two_block = std::max(rep.max_two_block, r.value);
        rep.min_two_block_pt_eig = std::min(rep.min_two_block_pt_eig, r.min_pt_eig);
    }

    rep.min_one_vs_rest = std::numeric_limits<double>::infinity();
    for(std::size_t j = 0; j < n; ++j) {
        const std::size_t single[] = {j};
        const auto r = log_negativity(state, single);
        rep.one_vs_rest.push_back(r);
        if(n == 2 || g.degree(j) == 2) rep.min_one_vs_rest = std::min(rep.min_one_vs_rest, r.value);
    }

    if(rep.max_two_block > 0.0)
        rep.verdict = Distillability::npt_two_block;
    else if(rep.min_one_vs_rest > 0.0)
        rep.verdict = Distillability::bound_band;
    else
        rep.verdict = Distillability::separable_boundary;
    return rep;
}

std::vector<AreaLawRow> area_law_scan(const Graph &g, const ModelParams &params, double temperature,
                                      std::span<const Partition> cuts, unsigned threads) {
    std::vector<AreaLawRow> rows(cuts.size());
    parallel_for(cuts.size(), threads, [&](std::size_t i) {
        const auto bn = boundary_negativity(g, params, temperature, cuts[i]);
        rows[i] = {i, bn.boundary_modes, bn.crossing_edges, bn.negativity.value};
    });
    return rows;
}

std::vector<Partition> vertical_cuts(std::size_t nx, std::size_t ny) {
    std::vector<Partition> cuts;
    for(std::size_t c = 0; c + 1 < nx; ++c) {
        VertexSet left;
        for(std::size_t y = 0; y < ny; ++y)
            for(std::size_t x = 0; x <= c; ++x) left.push_back(y * nx + x);
        cuts.push_back(Partition::bipartition(nx * ny, std::move(left)));
    }
    return cuts;
}

std::vector<Partition> horizontal_cuts(std::size_t nx, std::size_t ny) {
    std::vector<Partition> cuts;
    for(std::size_t r = 0; r + 1 < ny; ++r) {
        VertexSet top;
        for(std::size_t v = 0; v < (r + 1) * nx; ++v) top.push_back(v);
        cuts.push_back(Partition::bipartition(nx * ny, std::move(top)));
    }
    return cuts;
}

std::vector<Partition> prefix_cuts(std::size_t n) {
    std::vector<Partition> cuts;
    for(std::size_t k = 0; k + 1 < n; ++k) {
        VertexSet left(k + 1);
        for(std::size_t v = 0; v <= k; ++v) left[v] = v;
        cuts.push_back(Partition::bipartition(n, std::move(left)));
    }
    return cuts;
}

} // namespace cvgraph
