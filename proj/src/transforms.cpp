#include "srho/transforms.hpp"

#include <algorithm>
#include <string>

#include "srho/errors.hpp"

namespace srho {

Graph line_graph(const Graph& g) {
    const std::vector<Edge> edges = g.edges();
    std::vector<std::vector<std::size_t>> incident(g.order());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        incident[edges[e].u].push_back(e);
        incident[edges[e].v].push_back(e);
    }
    GraphBuilder b(edges.size());
    for (const auto& list : incident)
        for (std::size_t a = 0; a < list.size(); ++a)
            for (std::size_t c = a + 1; c < list.size(); ++c) b.add_edge(list[a], list[c]);
    return std::move(b).build(g.name().empty() ? std::string{} : "line(" + g.name() + ")");
}

IteratedLineGraph iterated_line_graph(const Graph& g, std::size_t k, std::size_t order_cap) {
    IteratedLineGraph out{g, {{g.order(), g.size()}}};
    if (g.order() > order_cap)
        throw GrowthLimitError("order " + std::to_string(g.order()) + " of L^0 exceeds cap " +
                               std::to_string(order_cap));
    for (std::size_t level = 1; level <= k; ++level) {
        // n_level = m_{level-1}
        if (out.graph.size() > order_cap)
            throw GrowthLimitError("L^" + std::to_string(level) + " would have order " +
                                   std::to_string(out.graph.size()) + " > cap " +
                                   std::to_string(order_cap) + "; completed level " +
                                   std::to_string(level - 1));
        out.graph = line_graph(out.graph);
        out.growth.push_back({out.graph.order(), out.graph.size()});
    }
    if (!g.name().empty() && k > 1)
        out.graph = out.graph.renamed("line^" + std::to_string(k) + "(" + g.name() + ")");
    return out;
}

Graph complement(const Graph& g) {
    GraphBuilder b(g.order());
    for (Vertex i = 0; i < g.order(); ++i)
        for (Vertex j = i + 1; j < g.order(); ++j)
            if (!g.adjacent(i, j)) b.add_edge(i, j);
    return std::move(b).build(g.name().empty() ? std::string{} : "complement(" + g.name() + ")");
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
    std::vector<bool> gone(g.order(), false);
    for (Vertex v : removed) {
        if (v >= g.order())
            throw IndexError("vertex " + std::to_string(v) + " out of range for order " +
                             std::to_string(g.order()));
        gone[v] = true;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!gone[v]) keep.push_back(v);
    GraphBuilder b(keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t c = a + 1; c < keep.size(); ++c)
            if (g.adjacent(keep[a], keep[c])) b.add_edge(a, c);
    return std::move(b).build();
}

HJoin h_join(const Graph& pattern, std::span<const Graph> parts) {
    if (parts.size() != pattern.order())
        throw ArityError("h_join: pattern has order " + std::to_string(pattern.order()) +
                         " but " + std::to_string(parts.size()) + " parts were given");
    Partition blocks;
    std::size_t n = 0;
    for (const Graph& h : parts) {
        std::vector<Vertex> block(h.order());
        for (std::size_t i = 0; i < h.order(); ++i) block[i] = n + i;
        blocks.blocks.push_back(std::move(block));
        n += h.order();
    }
    GraphBuilder b(n);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const auto& block = blocks.blocks[p];
        for (const Edge& e : parts[p].edges()) b.add_edge(block[e.u], block[e.v]);
    }
    for (const Edge& e : pattern.edges())
        for (Vertex x : blocks.blocks[e.u])
            for (Vertex y : blocks.blocks[e.v]) b.add_edge(x, y);

    std::string name;
    if (!pattern.name().empty()) {
        name = "hjoin(" + pattern.name();
        for (const Graph& h : parts) name += "," + (h.name().empty() ? "?" : h.name());
        name += ")";
    }
    return {std::move(b).build(name), std::move(blocks)};
}

Graph extended_bipartite_double(const Graph& g) {
    const std::size_t n = g.order();
    GraphBuilder b(2 * n);
    for (Vertex i = 0; i < n; ++i) {
        b.add_edge(i, n + i);
        for (Vertex j = 0; j < n; ++j)
            if (g.adjacent(i, j)) b.add_edge(i, n + j);
    }
    return std::move(b).build(g.name().empty() ? std::string{} : "ebd(" + g.name() + ")");
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    GraphBuilder out(a.order() + b.order());
    for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
    for (const Edge& e : b.edges()) out.add_edge(a.order() + e.u, a.order() + e.v);
    std::string name;
    if (!a.name().empty() && !b.name().empty()) name = "union(" + a.name() + "," + b.name() + ")";
    return std::move(out).build(name);
}

Graph add_edges(const Graph& g, std::span<const Edge> extra) {
    GraphBuilder b(g.order());
    for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
    for (const Edge& e : extra) {
        if (e.u >= g.order() || e.v >= g.order())
            throw IndexError("added edge endpoint out of range");
        if (b.has_edge(e.u, e.v))
            throw ParameterError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                 ") already present");
        b.add_edge(e.u, e.v);
    }
    return std::move(b).build();
}

}  // namespace srho
