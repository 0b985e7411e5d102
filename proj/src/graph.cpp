#include "srho/graph.hpp"

#include "srho/errors.hpp"

namespace srho {

Graph::Graph(std::size_t n, std::string name)
    : n_(n), adj_(n * n, 0), degrees_(n, 0), name_(std::move(name)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::string name) {
    GraphBuilder b(n);
    for (const Edge& e : edges) b.add_edge(e.u, e.v);
    return std::move(b).build(std::move(name));
}

std::vector<Vertex> Graph::neighbors(Vertex i) const {
    std::vector<Vertex> out;
    out.reserve(degrees_[i]);
    const std::uint8_t* row = adj_.data() + i * n_;
    for (Vertex j = 0; j < n_; ++j)
        if (row[j]) out.push_back(j);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex i = 0; i < n_; ++i)
        for (Vertex j = i + 1; j < n_; ++j)
            if (adj_[i * n_ + j]) out.push_back({i, j});
    return out;
}

Graph Graph::renamed(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_)
        throw IndexError("edge endpoint out of range: (" + std::to_string(u) + "," +
                         std::to_string(v) + ") for order " + std::to_string(n_));
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
    adj_[u * n_ + v] = 1;
    adj_[v * n_ + u] = 1;
}

Graph GraphBuilder::build(std::string name) && {
    Graph g;
    g.n_ = n_;
    g.adj_ = std::move(adj_);
    g.degrees_.assign(n_, 0);
    std::size_t total = 0;
    for (Vertex i = 0; i < n_; ++i) {
        std::size_t d = 0;
        for (Vertex j = 0; j < n_; ++j) d += g.adj_[i * n_ + j];
        g.degrees_[i] = d;
        total += d;
    }
    g.m_ = total / 2;
    g.name_ = std::move(name);
    return g;
}

}  // namespace srho
