#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace srho {

using Vertex = std::size_t;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1, stored as a dense
/// adjacency matrix. Construct through from_edges() or GraphBuilder.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n, std::string name = {});

    /// Throws IndexError on out-of-range endpoints and ParameterError on loops.
    /// Duplicate edges are merged.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::string name = {});

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return m_; }
    const std::string& name() const noexcept { return name_; }

    bool adjacent(Vertex i, Vertex j) const noexcept { return adj_[i * n_ + j] != 0; }
    std::size_t degree(Vertex i) const noexcept { return degrees_[i]; }
    const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }

    std::vector<Vertex> neighbors(Vertex i) const;

    /// Edges (i,j) with i<j in lexicographic order.
    std::vector<Edge> edges() const;

    Graph renamed(std::string name) const;

    /// Equality of labeled graphs; the name is ignored.
    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    friend class GraphBuilder;

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<std::size_t> degrees_;
    std::string name_;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n) : n_(n), adj_(n * n, 0) {}

    std::size_t order() const noexcept { return n_; }
    void add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const noexcept { return adj_[u * n_ + v] != 0; }

    Graph build(std::string name = {}) &&;

private:
    std::size_t n_;
    std::vector<std::uint8_t> adj_;
};

/// Ordered list of disjoint vertex blocks covering V.
struct Partition {
    std::vector<std::vector<Vertex>> blocks;

    std::size_t block_count() const noexcept { return blocks.size(); }
    friend bool operator==(const Partition&, const Partition&) = default;
};

}  // namespace srho
