#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "srho/graph.hpp"

namespace srho {

/// Vertex i of the result is the i-th edge of g.edges() (lexicographic order).
Graph line_graph(const Graph& g);

struct LevelCounts {
    std::size_t order;  // n_j
    std::size_t size;   // m_j
};

struct IteratedLineGraph {
    Graph graph;                      // L^k(G)
    std::vector<LevelCounts> growth;  // (n_j, m_j) for j = 0..k
};

inline constexpr std::size_t kDefaultLineGraphCap = 5000;

/// L^k(G). Throws GrowthLimitError when some n_j would exceed order_cap.
IteratedLineGraph iterated_line_graph(const Graph& g, std::size_t k,
                                      std::size_t order_cap = kDefaultLineGraphCap);

Graph complement(const Graph& g);

/// Induced subgraph on V \ removed; survivors keep their relative order.
Graph delete_vertices(const Graph& g, std::span<const Vertex> removed);

struct HJoin {
    Graph graph;
    Partition blocks;  // block i holds the copy of parts[i]
};

/// Generalized composition pattern[parts...]. Throws ArityError when
/// parts.size() != pattern.order().
HJoin h_join(const Graph& pattern, std::span<const Graph> parts);

/// X block = ids 0..n-1, Y block = ids n..2n-1; x_i ~ y_j iff i == j or v_i ~ v_j.
Graph extended_bipartite_double(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

/// g plus the given non-edges. Throws ParameterError if an edge is already present.
Graph add_edges(const Graph& g, std::span<const Edge> extra);

}  // namespace srho
