#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cvgraph/symplectic.hpp"

namespace cvgraph {

/// Undirected edge {first, second}, stored with first < second.
using Edge = std::pair<std::size_t, std::size_t>;
using VertexSet = std::vector<std::size_t>;

/// Simple undirected graph on vertices 0..n-1 with unit-weight edges.
/// Edges are kept sorted and deduplicated.
class Graph {
  public:
    Graph() = default;
    /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
    Graph(std::size_t n, std::vector<Edge> edges);

    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] const std::vector<Edge> &edges() const { return edges_; }
    [[nodiscard]] const VertexSet &neighbors(std::size_t v) const { return adjacency_.at(v); }
    [[nodiscard]] std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
    [[nodiscard]] bool has_edge(std::size_t i, std::size_t j) const;

    friend bool operator==(const Graph &a, const Graph &b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

  private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexSet> adjacency_;
};

Graph make_graph(std::size_t n, std::vector<Edge> edges);

Graph chain(std::size_t n);
/// Requires n >= 3.
Graph ring(std::size_t n);
/// nx columns by ny rows, vertex (x, y) -> y * nx + x, nearest-neighbour edges.
Graph lattice2d(std::size_t nx, std::size_t ny);
Graph complete(std::size_t n);
/// Erdos-Renyi G(n, p) from a seeded mt19937_64.
Graph random_graph(std::size_t n, double edge_probability, std::uint64_t seed);

/// A_ij = 1 iff {i, j} is an edge.
Matrix adjacency_matrix(const Graph &g);

/// Disjoint, non-empty blocks covering 0..n-1; at least two blocks.
class Partition {
  public:
    Partition(std::size_t n, std::vector<VertexSet> blocks);

    /// {subset} | {complement}.
    static Partition bipartition(std::size_t n, VertexSet subset);

    [[nodiscard]] std::size_t n() const { return block_of_.size(); }
    [[nodiscard]] const std::vector<VertexSet> &blocks() const { return blocks_; }
    [[nodiscard]] std::size_t block_count() const { return blocks_.size(); }
    [[nodiscard]] std::size_t block_of(std::size_t v) const { return block_of_.at(v); }
    [[nodiscard]] bool is_bipartition() const { return blocks_.size() == 2; }

    /// Partition induced on `vertices` (ascending) with vertices relabelled to
    /// their position in the list. Blocks that miss `vertices` are dropped;
    /// throws if fewer than two blocks remain.
    [[nodiscard]] Partition restricted_to(const VertexSet &vertices) const;

  private:
    std::vector<VertexSet> blocks_;
    std::vector<std::size_t> block_of_;
};

struct BoundaryDecomposition {
    VertexSet boundary_vertices;     ///< Y, ascending
    std::vector<Edge> crossing_edges; ///< X, original labels
    Graph boundary_subgraph;          ///< (Y, X) relabelled by position in Y
    std::vector<std::optional<std::size_t>> relabel_map; ///< original -> boundary index
    VertexSet nonboundary_vertices;  ///< V \ Y, ascending
};

/// Crossing edges of a multipartition and the subgraph they span.
BoundaryDecomposition boundary(const Graph &g, const Partition &p);

} // namespace cvgraph
