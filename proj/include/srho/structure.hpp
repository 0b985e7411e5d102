#pragma once

#include <cstddef>
#include <optional>

#include "srho/graph.hpp"

namespace srho {

struct StructureInfo {
    std::size_t order = 0;
    std::size_t size = 0;
    bool is_connected = false;
    bool is_bipartite = false;
    std::size_t min_degree = 0;  // delta; 0 for the null graph
    std::size_t max_degree = 0;  // Delta
    std::optional<std::size_t> min_edge_degree_sum;  // min over edges uv of d_u + d_v; absent when m = 0
    std::optional<std::size_t> regular_degree;       // r when every vertex has degree r
};

StructureInfo structure_queries(const Graph& g);

/// The null graph (order 0) counts as connected.
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

struct ComponentCounts {
    std::size_t components = 0;
    std::size_t bipartite_components = 0;
};
ComponentCounts component_counts(const Graph& g);

inline constexpr std::size_t kDefaultIndependenceCap = 40;

/// Exact independence number by branch and bound with greedy clique-cover
/// pruning. Throws SizeError above order_cap; use independence_at_most there.
std::size_t independence_number(const Graph& g, std::size_t order_cap = kDefaultIndependenceCap);

/// True iff alpha(g) <= bound. Same search, stopped at the first independent
/// set of size bound+1; no order cap.
bool independence_at_most(const Graph& g, std::size_t bound);

inline constexpr std::size_t kIsomorphismCap = 10;

/// Exact isomorphism test via canonical forms. Throws SizeError when either
/// order exceeds kIsomorphismCap.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace srho
