#include <doctest.h>

#include <numeric>
#include <random>

#include "oracle.hpp"
#include "srho/census.hpp"
#include "srho/errors.hpp"
#include "srho/families.hpp"
#include "srho/graph6.hpp"
#include "srho/spectral.hpp"
#include "srho/structure.hpp"
#include "srho/transforms.hpp"

using namespace srho;

namespace {

Graph permuted(const Graph& g, const std::vector<Vertex>& p) {
    GraphBuilder b(g.order());
    for (const auto& e : g.edges()) b.add_edge(p[e.u], p[e.v]);
    return std::move(b).build();
}

// Isomorphism classes of connected labeled graphs by brute-force permutation search.
std::size_t brute_class_count(std::size_t n) {
    std::vector<Edge> slots;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) slots.push_back({i, j});
    std::vector<Graph> reps;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<Edge> es;
        for (std::size_t b = 0; b < slots.size(); ++b)
            if (mask >> b & 1) es.push_back(slots[b]);
        const Graph g = Graph::from_edges(n, es);
        if (!is_connected(g)) continue;
        bool seen = false;
        for (const auto& r : reps)
            if (oracle::brute_isomorphic(r, g)) {
                seen = true;
                break;
            }
        if (!seen) reps.push_back(g);
    }
    return reps.size();
}

}  // namespace

TEST_CASE("connected graph counts") {
    const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
    for (std::size_t n = 1; n <= 7; ++n) CHECK(enumerate_connected(n).size() == expected[n - 1]);
    for (std::size_t n = 1; n <= 5; ++n) CHECK(brute_class_count(n) == expected[n - 1]);
    CHECK_THROWS_AS(enumerate_connected(8), SizeError);
    CHECK_THROWS_AS(enumerate_connected(0), SizeError);
}

TEST_CASE("enumeration does not depend on the shard count") {
    const auto one = enumerate_connected(6, 1);
    const auto many = enumerate_connected(6, 7);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i] == many[i]);
        CHECK(one[i].name() == many[i].name());
        CHECK(is_connected(one[i]));
    }
}

TEST_CASE("canonical forms are labeling invariant") {
    std::mt19937_64 rng(42);
    std::vector<Graph> graphs = enumerate_connected(6);
    graphs.push_back(petersen_graph());
    graphs.push_back(line_graph(complete_graph(5)));
    graphs.push_back(hypercube(4));
    graphs.push_back(caterpillar({4, 3, 4}));
    for (std::size_t i = 0; i < graphs.size(); i += (i < 112 ? 5 : 1)) {
        const Graph& g = graphs[i];
        const CanonicalForm c = canonical_form(g);
        std::vector<Vertex> p(g.order());
        std::iota(p.begin(), p.end(), 0);
        for (int t = 0; t < 50; ++t) {
            std::shuffle(p.begin(), p.end(), rng);
            CHECK(canonical_form(permuted(g, p)) == c);
        }
        const auto lab = canonical_labeling(g);
        std::vector<Vertex> inverse(g.order());
        for (std::size_t pos = 0; pos < lab.size(); ++pos) inverse[lab[pos]] = pos;
        CHECK(to_graph6(permuted(g, inverse)) == c.code);
    }
    CHECK_FALSE(canonical_form(complete_bipartite(3, 3)) == canonical_form(circulant(6, {2, 3})));
    CHECK_THROWS_AS(canonical_form(complete_graph(17)), SizeError);
}

TEST_CASE("line-rho graphs") {
    CHECK(find_line_rho_graphs(3).empty());
    CHECK_FALSE(has_line_rho(complete_graph(2)));
    CHECK_FALSE(has_line_rho(path_graph(3)));

    const auto four = find_line_rho_graphs(4);
    REQUIRE(four.size() == 2);
    std::vector<CanonicalForm> got{canonical_form(four[0]), canonical_form(four[1])};
    std::vector<CanonicalForm> want{canonical_form(cycle_graph(4)), canonical_form(complete_graph(4))};
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);

    const auto thirteen = find_line_rho_graphs(6);
    CHECK(thirteen.size() == 13);
    for (const auto& m : named_matches(thirteen)) {
        CAPTURE(m.name);
        CHECK(m.found);
    }
    for (const auto& g : thirteen) {
        CHECK(is_connected(g));
        CHECK_FALSE(is_connected(complement(g)));
        const RhoVerdict v = check_rho(line_graph(g));
        CHECK(v.holds);
        CHECK_FALSE(v.vacuous);
        CHECK(line_spectrum_via_Q(g).max_deviation(spectrum_of(line_graph(g))) <= 1e-8);
    }
    CHECK_THROWS_AS(find_line_rho_graphs(8), SizeError);
}

TEST_CASE("least order with a connected complement") {
    const ComplementWitnesses w = min_order_connected_complement();
    CHECK(w.order == 7);
    REQUIRE(w.witnesses.size() == 1);
    const Graph& g = w.witnesses.front();
    CHECK(g.order() == 7);
    CHECK(is_connected(g));
    CHECK(is_connected(complement(g)));
    CHECK(has_line_rho(g));
    CHECK_FALSE(is_connected(complement(complete_graph(6))));
}
