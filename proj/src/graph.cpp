#include "cvgraph/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cvgraph {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adjacency_(n) {
    for(auto &[i, j] : edges) {
        if(i >= n || j >= n) {
            std::ostringstream msg;
            msg << "graph: edge {" << i << "," << j << "} has an endpoint outside 0.." << (n == 0 ? 0 : n - 1);
            throw std::invalid_argument(msg.str());
        }
        if(i == j) {
            std::ostringstream msg;
            msg << "graph: self-loop at vertex " << i;
            throw std::invalid_argument(msg.str());
        }
        if(i > j) std::swap(i, j);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for(const auto &[i, j] : edges_) {
        adjacency_[i].push_back(j);
        adjacency_[j].push_back(i);
    }
    for(auto &nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(std::size_t i, std::size_t j) const {
    if(i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

Graph make_graph(std::size_t n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }

Graph chain(std::size_t n) {
    if(n == 0) throw std::invalid_argument("chain: need at least one vertex");
    std::vector<Edge> edges;
    for(std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph ring(std::size_t n) {
    if(n < 3) throw std::invalid_argument("ring: need at least 3 vertices");
    std::vector<Edge> edges;
    for(std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph lattice2d(std::size_t nx, std::size_t ny) {
    if(nx == 0 || ny == 0) throw std::invalid_argument("lattice2d: dimensions must be >= 1");
    std::vector<Edge> edges;
    for(std::size_t y = 0; y < ny; ++y) {
        for(std::size_t x = 0; x < nx; ++x) {
            const std::size_t v = y * nx + x;
            if(x + 1 < nx) edges.emplace_back(v, v + 1);
            if(y + 1 < ny) edges.emplace_back(v, v + nx);
        }
    }
    return Graph(nx * ny, std::move(edges));
}

Graph complete(std::size_t n) {
    if(n == 0) throw std::invalid_argument("complete: need at least one vertex");
    std::vector<Edge> edges;
    for(std::size_t i = 0; i < n; ++i)
        for(std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph random_graph(std::size_t n, double edge_probability, std::uint64_t seed) {
    if(n == 0) throw std::invalid_argument("random_graph: need at least one vertex");
    if(!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw std::invalid_argument("random_graph: edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_probability);
    std::vector<Edge> edges;
    for(std::size_t i = 0; i < n; ++i)
        for(std::size_t j = i + 1; j < n; ++j)
            if(coin(rng)) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Matrix adjacency_matrix(const Graph &g) {
    const auto n = static_cast<Eigen::Index>(g.n());
    Matrix a = Matrix::Zero(n, n);
    for(const auto &[i, j] : g.edges()) {
        a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
        a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = 1.0;
    }
    return a;
}

Partition::Partition(std::size_t n, std::vector<VertexSet> blocks) : block_of_(n, n) {
    if(blocks.size() < 2) throw std::invalid_argument("partition: need at least two blocks");
    for(std::size_t b = 0; b < blocks.size(); ++b) {
        auto &block = blocks[b];
        if(block.empty()) throw std::invalid_argument("partition: blocks must be non-empty");
        std::sort(block.begin(), block.end());
        for(std::size_t v : block) {
            if(v >= n) {
                std::ostringstream msg;
                msg << "partition: vertex " << v << " out of range for " << n << " vertices";
                throw std::invalid_argument(msg.str());
            }
            if(block_of_[v] != n) {
                std::ostringstream msg;
                msg << "partition: vertex " << v << " appears more than once";
                throw std::invalid_argument(msg.str());
            }
            block_of_[v] = b;
        }
    }
    for(std::size_t v = 0; v < n; ++v) {
        if(block_of_[v] == n) {
            std::ostringstream msg;
            msg << "partition: vertex " << v << " is not covered by any block";
            throw std::invalid_argument(msg.str());
        }
    }
    blocks_ = std::move(blocks);
}

Partition Partition::bipartition(std::size_t n, VertexSet subset) {
    std::vector<bool> in(n, false);
    for(std::size_t v : subset) {
        if(v >= n) {
            std::ostringstream msg;
            msg << "partition: vertex " << v << " out of range for " << n << " vertices";
            throw std::invalid_argument(msg.str());
        }
        in[v] = true;
    }
    VertexSet first, rest;
    for(std::size_t v = 0; v < n; ++v) (in[v] ? first : rest).push_back(v);
    return Partition(n, {std::move(first), std::move(rest)});
}

Partition Partition::restricted_to(const VertexSet &vertices) const {
    std::vector<VertexSet> blocks(blocks_.size());
    for(std::size_t k = 0; k < vertices.size(); ++k) blocks[block_of(vertices[k])].push_back(k);
    std::erase_if(blocks, [](const VertexSet &b) { return b.empty(); });
    return Partition(vertices.size(), std::move(blocks));
}

BoundaryDecomposition boundary(const Graph &g, const Partition &p) {
    if(p.n() != g.n()) {
        std::ostringstream msg;
        msg << "boundary: partition covers " << p.n() << " vertices, graph has " << g.n();
        throw std::invalid_argument(msg.str());
    }
    BoundaryDecomposition out;
    std::vector<bool> on_boundary(g.n(), false);
    for(const auto &e : g.edges()) {
        if(p.block_of(e.first) != p.block_of(e.second)) {
            out.crossing_edges.push_back(e);
            on_boundary[e.first] = on_boundary[e.second] = true;
        }
    }
    out.relabel_map.assign(g.n(), std::nullopt);
    for(std::size_t v = 0; v < g.n(); ++v) {
        if(on_boundary[v]) {
            out.relabel_map[v] = out.boundary_vertices.size();
            out.boundary_vertices.push_back(v);
        } else {
            out.nonboundary_vertices.push_back(v);
        }
    }
    std::vector<Edge> local;
    local.reserve(out.crossing_edges.size());
    for(const auto &[i, j] : out.crossing_edges) local.emplace_back(*out.relabel_map[i], *out.relabel_map[j]);
    out.boundary_subgraph = Graph(out.boundary_vertices.size(), std::move(local));
    return out;
}

} // namespace cvgraph
