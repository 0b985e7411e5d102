#include "srho/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "srho/census.hpp"
#include "srho/errors.hpp"

namespace srho {

namespace {

struct Traversal {
    std::size_t components = 0;
    std::size_t bipartite_components = 0;
};

Traversal traverse(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> color(n, -1);
    std::vector<Vertex> stack;
    Traversal t;
    for (Vertex s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        ++t.components;
        bool bipartite = true;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex v = 0; v < n; ++v) {
                if (!g.adjacent(u, v)) continue;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    bipartite = false;
                }
            }
        }
        if (bipartite) ++t.bipartite_components;
    }
    return t;
}

// Dense bitset over the candidate vertices of the independent-set search.
class VertexSet {
public:
    explicit VertexSet(std::size_t n) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }
    std::size_t first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return static_cast<std::size_t>(-1);
    }
    VertexSet minus(const VertexSet& other) const {
        VertexSet out = *this;
        for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] &= ~other.words_[k];
        return out;
    }
    VertexSet intersect(const VertexSet& other) const {
        VertexSet out = *this;
        for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] &= other.words_[k];
        return out;
    }

private:
    std::vector<std::uint64_t> words_;
};

class IndependentSetSearch {
public:
    IndependentSetSearch(const Graph& g, std::size_t stop_at)
        : g_(g), stop_at_(stop_at), closed_(g.order(), VertexSet(g.order())),
          open_(g.order(), VertexSet(g.order())) {
        for (Vertex u = 0; u < g.order(); ++u) {
            closed_[u].set(u);
            for (Vertex v = 0; v < g.order(); ++v)
                if (g.adjacent(u, v)) {
                    closed_[u].set(v);
                    open_[u].set(v);
                }
        }
    }

    std::size_t run() {
        VertexSet all(g_.order());
        for (Vertex v = 0; v < g_.order(); ++v) all.set(v);
        expand(all, 0);
        return best_;
    }

private:
    // Greedy clique cover of the candidates: an independent set takes at most
    // one vertex per clique.
    std::size_t clique_cover_bound(VertexSet candidates) const {
        std::size_t cliques = 0;
        while (!candidates.empty()) {
            ++cliques;
            VertexSet pool = candidates;
            while (!pool.empty()) {
                Vertex v = pool.first();
                candidates.reset(v);
                pool = pool.intersect(open_[v]);
            }
        }
        return cliques;
    }

    void expand(const VertexSet& candidates, std::size_t chosen) {
        if (best_ >= stop_at_) return;
        if (candidates.empty()) {
            best_ = std::max(best_, chosen);
            return;
        }
        if (chosen + candidates.count() <= best_) return;
        if (chosen + clique_cover_bound(candidates) <= best_) return;

        // Branch on a minimum-degree candidate: include it, or exclude it.
        Vertex pick = candidates.first();
        std::size_t pick_deg = static_cast<std::size_t>(-1);
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (!candidates.test(v)) continue;
            std::size_t d = candidates.intersect(open_[v]).count();
            if (d < pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        expand(candidates.minus(closed_[pick]), chosen + 1);
        if (pick_deg == 0) return;  // an isolated candidate is always worth taking
        VertexSet without = candidates;
        without.reset(pick);
        expand(without, chosen);
    }

    const Graph& g_;
    std::size_t stop_at_;
    std::vector<VertexSet> closed_;
    std::vector<VertexSet> open_;
    std::size_t best_ = 0;
};

}  // namespace

bool is_connected(const Graph& g) { return traverse(g).components <= 1; }

bool is_bipartite(const Graph& g) {
    Traversal t = traverse(g);
    return t.bipartite_components == t.components;
}

ComponentCounts component_counts(const Graph& g) {
    Traversal t = traverse(g);
    return {t.components, t.bipartite_components};
}

StructureInfo structure_queries(const Graph& g) {
    StructureInfo info;
    info.order = g.order();
    info.size = g.size();
    Traversal t = traverse(g);
    info.is_connected = t.components <= 1;
    info.is_bipartite = t.bipartite_components == t.components;
    if (g.order() > 0) {
        auto [lo, hi] = std::minmax_element(g.degrees().begin(), g.degrees().end());
        info.min_degree = *lo;
        info.max_degree = *hi;
        if (*lo == *hi) info.regular_degree = *lo;
    }
    for (const Edge& e : g.edges()) {
        std::size_t s = g.degree(e.u) + g.degree(e.v);
        if (!info.min_edge_degree_sum || s < *info.min_edge_degree_sum) info.min_edge_degree_sum = s;
    }
    return info;
}

std::size_t independence_number(const Graph& g, std::size_t order_cap) {
    if (g.order() > order_cap)
        throw SizeError("independence_number: order " + std::to_string(g.order()) +
                        " exceeds exact-solver cap " + std::to_string(order_cap) +
                        "; use independence_at_most for a bound check");
    return IndependentSetSearch(g, g.order() + 1).run();
}

bool independence_at_most(const Graph& g, std::size_t bound) {
    return IndependentSetSearch(g, bound + 1).run() <= bound;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() > kIsomorphismCap || b.order() > kIsomorphismCap)
        throw SizeError("is_isomorphic: orders " + std::to_string(a.order()) + " and " +
                        std::to_string(b.order()) + " exceed cap " +
                        std::to_string(kIsomorphismCap));
    if (a.order() != b.order() || a.size() != b.size()) return false;
    auto da = a.degrees();
    auto db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace srho
