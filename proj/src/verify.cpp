#include "cvgraph/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "cvgraph/entanglement.hpp"
#include "cvgraph/gaussian.hpp"

namespace cvgraph {

namespace {

    Matrix random_symmetric(std::size_t n, Rng &rng, double scale) {
        std::normal_distribution<double> normal(0.0, scale);
        const auto k = static_cast<Eigen::Index>(n);
        Matrix c(k, k);
        for(Eigen::Index i = 0; i < k; ++i)
            for(Eigen::Index j = 0; j <= i; ++j) c(i, j) = c(j, i) = normal(rng);
        return c;
    }

    Graph random_family_graph(std::size_t n, Rng &rng) {
        std::uniform_int_distribution<int> pick(0, 3);
        switch(pick(rng)) {
            case 0: return chain(n);
            case 1: return ring(std::max<std::size_t>(n, 3));
            case 2: return random_graph(n, 0.35, rng());
            default: return lattice2d(4, 4);
        }
    }

    SuiteResult make(std::string name, double residual, double threshold) {
        return {std::move(name), residual, threshold, residual <= threshold};
    }

    double relative(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

    SuiteResult williamson_suite(Rng &rng) {
        double worst = 0.0;
        for(int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 1 + trial % 6;
            const Matrix m = random_positive_definite(2 * n, rng);
            const auto wd = williamson(m);
            const Matrix d = block_diagonal(wd.d.values());
            worst = std::max(worst, wd.S.symplectic_residual());
            worst = std::max(worst, max_abs(wd.S.matrix() * m * wd.S.matrix().transpose() - d) / max_abs(m));
        }
        return make("symplectic/williamson-postconditions", worst, 1e-10);
    }

    SuiteResult congruence_suite(Rng &rng) {
        double worst = 0.0;
        for(int trial = 0; trial < 10; ++trial) {
            const std::size_t n = 1 + trial % 8;
            const Matrix m = random_positive_definite(2 * n, rng);
            const SymplecticMatrix s = random_symplectic(n, rng);
            const Spectrum a = symplectic_eigenvalues(m);
            const Spectrum b = symplectic_eigenvalues(s.matrix().transpose() * m * s.matrix());
            for(std::size_t k = 0; k < n; ++k) worst = std::max(worst, relative(b[k], a[k]));
        }
        return make("symplectic/congruence-invariance", worst, 1e-9);
    }

    SuiteResult boundary_structure_suite(Rng &rng) {
        double violations = 0.0;
        for(int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 2 + static_cast<std::size_t>(trial % 12);
            const Graph g = random_graph(n, 0.4, rng());
            const Partition p = random_bipartition(n, rng, trial % 2 == 0);
            const auto bd = boundary(g, p);
            if(bd.boundary_vertices.size() > 2 * bd.crossing_edges.size()) violations += 1;
            if(bd.boundary_vertices.size() + bd.nonboundary_vertices.size() != n) violations += 1;
            if(!bd.boundary_vertices.empty()) {
                const auto again = boundary(bd.boundary_subgraph, p.restricted_to(bd.boundary_vertices));
                if(!(again.boundary_subgraph == bd.boundary_subgraph)) violations += 1;
            }
        }
        return make("graph/boundary-structure (violations)", violations, 0.0);
    }

    SuiteResult normal_mode_suite(Rng &rng) {
        double worst = 0.0;
        for(int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
            const Graph g = random_graph(n, 0.5, rng());
            const ModelParams params = random_params(n, rng);
            const Matrix su = graph_symplectic(g, params).matrix();
            std::vector<double> freq(n);
            for(std::size_t i = 0; i < n; ++i)
                freq[i] = params.omega()[i] / (params.squeeze()[i] * params.squeeze()[i]);
            const Matrix diff = su.transpose() * hamiltonian_matrix(g, params).matrix() * su - block_diagonal(freq);
            worst = std::max(worst, max_abs(diff));
        }
        return make("hamiltonian/normal-mode-map", worst, 1e-12);
    }

    SuiteResult gap_suite(Rng &rng) {
        double worst = 0.0;
        for(int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 1 + static_cast<std::size_t>(trial % 12);
            const Graph g = random_graph(n, 0.4, rng());
            const ModelParams params = random_params(n, rng);
            const QuadraticForm h = hamiltonian_matrix(g, params);
            worst = std::max(worst, relative(energy_gap(h), params.gap()));
            double e0 = 0.0;
            for(std::size_t i = 0; i < n; ++i) e0 += params.omega()[i] / (2.0 * params.squeeze()[i] * params.squeeze()[i]);
            worst = std::max(worst, relative(ground_energy(h), e0));
        }
        return make("hamiltonian/gap-and-ground-energy (relative)", worst, 1e-9);
    }

    SuiteResult frustration_suite(Rng &rng) {
        double worst = 0.0;
        for(int trial = 0; trial < 10; ++trial) {
            const std::size_t n = 2 + static_cast<std::size_t>(trial % 8);
            worst = std::max(worst, frustration_free_check(random_graph(n, 0.5, rng()), random_params(n, rng)).max_violation);
        }
        return make("hamiltonian/frustration-free", worst, 1e-12);
    }

    SuiteResult graph_state_suite(Rng &rng) {
        double worst = 0.0;
        for(int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 1 + static_cast<std::size_t>(trial % 12);
            const Graph g = random_graph(n, 0.4, rng());
            const ModelParams params = random_params(n, rng);
            const GaussianState state = graph_state(g, params);
            for(double nu : state.symplectic_spectrum()) worst = std::max(worst, std::abs(nu - 0.5));
            for(std::size_t i = 0; i < n; ++i) {
                const double s2 = params.squeeze()[i] * params.squeeze()[i];
                worst = std::max(worst, std::abs(linear_variance(state, nullifier(g, i)) - 0.5 / s2));
                worst = std::max(worst, std::abs(operator_norm_expectation(state, gaussian_nullifier(g, i, params))));
            }
        }
        return make("gaussian/graph-state-purity-and-nullifiers", worst, 1e-9);
    }

    SuiteResult diffusion_suite(Rng &rng) {
        std::uniform_real_distribution<double> temp(0.05, 3.0);
        double worst = 0.0;
        const double svals[] = {0.5, 1.0, 2.0};
        for(int trial = 0; trial < 12; ++trial) {
            const std::size_t n = 3 + static_cast<std::size_t>(trial % 6);
            const Graph g = trial % 2 ? ring(n) : chain(n);
            const auto dd = thermal_diffusion_decomposition(g, ModelParams::uniform(n, svals[trial % 3]), temp(rng));
            worst = std::max(worst, dd.residual);
        }
        return make("gaussian/thermal-diffusion-decomposition", worst, 1e-12);
    }

    SuiteResult boundary_theorem_suite(Rng &rng) {
        std::uniform_real_distribution<double> tau(0.0, 3.0);
        double worst = 0.0;
        for(int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 3 + static_cast<std::size_t>(trial % 10);
            const Graph g = random_family_graph(n, rng);
            const ModelParams params = random_params(g.n(), rng);
            const Partition p = random_bipartition(g.n(), rng, trial % 2 == 0);
            const double t = tau(rng) * params.gap();
            const double full = thermal_negativity(g, params, t, p).value;
            const double reduced = boundary_negativity(g, params, t, p).negativity.value;
            worst = std::max(worst, std::abs(full - reduced));
        }
        return make("entanglement/boundary-reduction", worst, 1e-9);
    }

    SuiteResult monotone_suite(Rng &rng) {
        double worst_increase = 0.0;
        for(int trial = 0; trial < 6; ++trial) {
            const std::size_t n = 4 + static_cast<std::size_t>(trial);
            const Graph g = chain(n);
            const ModelParams params = random_params(n, rng);
            const Partition p = random_bipartition(n, rng, true);
            double previous = thermal_negativity(g, params, 0.0, p).value;
            for(int k = 1; k <= 12; ++k) {
                const double e = thermal_negativity(g, params, 0.25 * k * params.gap(), p).value;
                worst_increase = std::max(worst_increase, e - previous);
                previous = e;
            }
        }
        return make("entanglement/negativity-non-increasing-in-T", worst_increase, 1e-12);
    }

    SuiteResult phase_diagram_suite() {
        const std::vector<double> grid = {0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0};
        double worst = 0.0;
        for(const auto &row : phase_diagram(grid)) {
            worst = std::max(worst, relative(row.t2c, row.t2c_closed));
            worst = std::max(worst, relative(row.t3c, row.t3c_closed));
            if(!(row.t2c < row.t3c)) worst = std::max(worst, 1.0);
        }
        return make("entanglement/critical-temperatures (relative)", worst, 1e-6);
    }

} // namespace

Matrix random_positive_definite(std::size_t n, Rng &rng, double lo, double hi) {
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> eig(lo, hi);
    const auto k = static_cast<Eigen::Index>(n);
    Matrix g(k, k);
    for(Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = normal(rng);
    const Matrix q = Eigen::HouseholderQR<Matrix>(g).householderQ();
    Vector d(k);
    for(Eigen::Index i = 0; i < k; ++i) d(i) = eig(rng);
    Matrix m = q * d.asDiagonal() * q.transpose();
    return 0.5 * (m + m.transpose());
}

SymplecticMatrix random_symplectic(std::size_t n, Rng &rng) {
    std::uniform_real_distribution<double> squeeze(0.5, 2.0);
    const auto k = static_cast<Eigen::Index>(n);
    const Matrix id = Matrix::Identity(k, k);
    Matrix lower = Matrix::Identity(2 * k, 2 * k);
    lower.bottomLeftCorner(k, k) = random_symmetric(n, rng, 0.7);
    Matrix upper = Matrix::Identity(2 * k, 2 * k);
    upper.topRightCorner(k, k) = random_symmetric(n, rng, 0.7);
    Vector sq(2 * k);
    for(Eigen::Index i = 0; i < k; ++i) {
        sq(i) = squeeze(rng);
        sq(k + i) = 1.0 / sq(i);
    }
    Matrix s = lower * sq.asDiagonal() * upper;
    return SymplecticMatrix(std::move(s));
}

ModelParams random_params(std::size_t n, Rng &rng, double s_lo, double s_hi, double w_lo, double w_hi) {
    std::uniform_real_distribution<double> s(s_lo, s_hi), w(w_lo, w_hi);
    std::vector<double> sv(n), wv(n);
    for(std::size_t i = 0; i < n; ++i) {
        sv[i] = s(rng);
        wv[i] = w(rng);
    }
    return ModelParams(std::move(sv), std::move(wv));
}

Partition random_bipartition(std::size_t n, Rng &rng, bool contiguous) {
    if(n < 2) throw std::invalid_argument("random_bipartition: need at least two vertices");
    VertexSet first;
    if(contiguous) {
        std::uniform_int_distribution<std::size_t> cut(0, n - 2);
        const std::size_t k = cut(rng);
        for(std::size_t v = 0; v <= k; ++v) first.push_back(v);
    } else {
        std::bernoulli_distribution coin(0.5);
        while(first.empty() || first.size() == n) {
            first.clear();
            for(std::size_t v = 0; v < n; ++v)
                if(coin(rng)) first.push_back(v);
        }
    }
    return Partition::bipartition(n, std::move(first));
}

std::vector<SuiteResult> run_invariant_suites(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<SuiteResult> out;
    out.push_back(williamson_suite(rng));
    out.push_back(congruence_suite(rng));
    out.push_back(boundary_structure_suite(rng));
    out.push_back(normal_mode_suite(rng));
    out.push_back(gap_suite(rng));
    out.push_back(frustration_suite(rng));
    out.push_back(graph_state_suite(rng));
    out.push_back(diffusion_suite(rng));
    out.push_back(boundary_theorem_suite(rng));
    out.push_back(monotone_suite(rng));
    out.push_back(phase_diagram_suite());
    return out;
}

} // namespace cvgraph
