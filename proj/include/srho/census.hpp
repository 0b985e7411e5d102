#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "srho/graph.hpp"

namespace srho {

inline constexpr std::size_t kCanonicalFormCap = 16;

/// graph6 string of the relabeling whose upper-triangle bit string (graph6
/// column order) is lexicographically least. The search ranges over
/// permutations that respect the colour-refined ordered partition, so the form
/// is exact: equal forms iff isomorphic graphs.
struct CanonicalForm {
    std::string code;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Throws SizeError above kCanonicalFormCap.
CanonicalForm canonical_form(const Graph& g);

/// labeling[p] is the original vertex placed at position p of the canonical graph.
std::vector<Vertex> canonical_labeling(const Graph& g);

inline constexpr std::size_t kMaxCensusOrder = 7;

/// Worker count for enumeration shards: SRHO_THREADS if set to a positive
/// integer, otherwise the hardware concurrency (at least 1).
std::size_t census_threads();

/// One representative per isomorphism class of connected graphs of order n,
/// each the canonical graph named by its code, sorted by code. The output does
/// not depend on the shard count (0 selects census_threads()).
/// Throws SizeError unless 1 <= n <= kMaxCensusOrder.
std::vector<Graph> enumerate_connected(std::size_t n, std::size_t shards = 0);

/// L(g) has at least one negative eigenvalue and all of them equal -2.
bool has_line_rho(const Graph& g);

/// Connected graphs of exactly order n whose line graph has property rho
/// (vacuous cases excluded).
std::vector<Graph> line_rho_graphs_of_order(std::size_t n);

/// Same, over all orders 1..n_max, in order then code.
std::vector<Graph> find_line_rho_graphs(std::size_t n_max);

/// C4, K4, K_{3,2}, K5, K_{4,2}, K_{3,3}, K6.
std::vector<std::pair<std::string, Graph>> named_line_rho_graphs();

struct NamedMatch {
    std::string name;
    std::string code;
    bool found = false;
};

std::vector<NamedMatch> named_matches(const std::vector<Graph>& graphs);

struct ComplementWitnesses {
    std::size_t order = 0;  // 0 when no order up to the limit qualifies
    std::vector<Graph> witnesses;
};

/// Least order of a connected graph with connected complement whose line graph
/// has property rho, and all witnesses of that order.
ComplementWitnesses min_order_connected_complement(std::size_t n_max = kMaxCensusOrder);

}  // namespace srho
