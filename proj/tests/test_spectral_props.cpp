#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "srho/census.hpp"
#include "srho/errors.hpp"
#include "srho/families.hpp"
#include "srho/spectral.hpp"
#include "srho/structure.hpp"
#include "srho/transforms.hpp"

using namespace srho;

namespace {

std::vector<Graph> corpus() {
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= 6; ++n)
        for (auto& g : enumerate_connected(n)) out.push_back(std::move(g));
    for (const char* s : {"petersen", "cube(3)", "turan(7,3)", "turan(8,3)", "kanp(8,2)", "cat(4,3,4)", "cycle(9)",
                          "path(8)", "kbip(2,7)", "circulant(10,1,5)", "union(cycle(3),cycle(4))", "complete(9)"})
        out.push_back(build(parse_family(s)).renamed(s));
    return out;
}

bool is_spanning_subgraph(const Graph& h, const Graph& g) {
    for (const auto& e : h.edges())
        if (!g.adjacent(e.u, e.v)) return false;
    return h.order() == g.order();
}

}  // namespace

TEST_CASE("matrices") {
    CHECK(matrix_of(complete_graph(2), MatrixKind::signless_laplacian) == DenseMatrix{{1, 1}, {1, 1}});
    const DenseMatrix l = matrix_of(cycle_graph(4), MatrixKind::laplacian);
    for (std::size_t i = 0; i < 4; ++i) {
        double s = 0.0;
        for (double x : l.row(i)) s += x;
        CHECK(s == 0.0);
    }
    CHECK(spectrum_of(turan_graph(6, 3), MatrixKind::signless_laplacian).to_string() == "8 4^3 2^2");
}

TEST_CASE("spectra") {
    CHECK(spectrum_of(complete_graph(5)).to_string() == "4 -1^4");
    const Spectrum t45 = spectrum_of(turan_graph(5, 4), MatrixKind::signless_laplacian);
    CHECK(t45.matches(Spectrum::from_values({7.3723, 3, 3, 3, 1.6277}), 5e-4));
    CHECK(spectrum_of(complement(line_graph(complete_graph(4)))).to_string() == "1^3 -1^3");
    CHECK(spectrum_of(Graph(0)).empty());

    for (const auto& g : corpus())
        CHECK(oracle::max_gap(spectrum_of(g).values(), oracle::adjacency_eigenvalues(g)) <= 1e-9);
}

TEST_CASE("energy") {
    CHECK(energy(complete_graph(6)).energy == doctest::Approx(10.0));
    CHECK(energy(line_graph(complete_graph(4))).energy == doctest::Approx(8.0));
    CHECK(energy(empty_graph(5)).energy == 0.0);
    for (const auto& g : corpus()) {
        const EnergyReport e = energy(g);
        CHECK(std::abs(e.via_positive - e.via_negative) <= 1e-6 * static_cast<double>(g.order()));
        CHECK(std::abs(e.energy - e.via_positive) <= 1e-6 * static_cast<double>(g.order()));
    }
}

TEST_CASE("property rho") {
    const RhoVerdict t = check_rho(line_graph(turan_graph(6, 3)));
    CHECK(t.holds);
    CHECK_FALSE(t.vacuous);
    CHECK(t.multiplicity_of_minus2 == 6);
    CHECK(spectrum_of(line_graph(turan_graph(6, 3))).to_string() == "6 2^3 0^2 -2^6");

    const RhoVerdict p4 = check_rho(path_graph(4));
    CHECK_FALSE(p4.holds);
    CHECK(p4.worst_deviation == doctest::Approx(2.0 - 0.6180339887).epsilon(1e-9));

    const RhoVerdict k1 = check_rho(complete_graph(1));
    CHECK(k1.holds);
    CHECK(k1.vacuous);

    const LineRhoVerdict k32 = check_line_rho(complete_bipartite(3, 2));
    CHECK(k32.root_bipartite);
    CHECK(k32.expected_minus2 == 2);
    CHECK(k32.multiplicity_rule_holds);
    CHECK(k32.verdict.holds);

    CHECK(expected_line_minus2(disjoint_union(cycle_graph(4), cycle_graph(3))) == 1);
}

TEST_CASE("line spectrum through the signless Laplacian") {
    CHECK(line_spectrum_via_Q(cycle_graph(4)).to_string() == "2 0^2 -2");
    CHECK(line_spectrum_via_Q(complete_graph(4)).to_string() == "4 0^3 -2^2");
    const Spectrum k32 = line_spectrum_via_Q(complete_bipartite(3, 2));
    CHECK(k32.multiplicity_near(-2.0, 1e-8) == 2);

    std::vector<Graph> graphs = corpus();
    for (std::size_t n = 2; n <= 7; ++n) graphs.push_back(build(parse_family("kbip(1," + std::to_string(n) + ")")));
    for (const auto& g : graphs) {
        if (g.size() == 0) continue;
        CAPTURE(g.name());
        const Spectrum direct = spectrum_of(line_graph(g));
        const Spectrum via = line_spectrum_via_Q(g);
        CHECK(via.matches(direct, 1e-8));
        CHECK(via.max_deviation(direct) <= 1e-8);
        CHECK(static_cast<long long>(direct.multiplicity_near(-2.0, 1e-6)) == expected_line_minus2(g));
        CHECK(direct.smallest() >= -2.0 - 1e-8);
    }
}

TEST_CASE("hyperenergetic") {
    CHECK_FALSE(is_hyperenergetic(complete_graph(7)));
    CHECK(is_hyperenergetic(iterated_line_graph(complete_graph(4), 2).graph));
    CHECK_FALSE(is_hyperenergetic(cycle_graph(6)));
}

TEST_CASE("least signless eigenvalue") {
    CHECK(q_min(turan_graph(6, 3)) == doctest::Approx(2.0));
    CHECK(std::abs(q_min(turan_graph(5, 4)) - 1.6277) <= 5e-4);
    CHECK(std::abs(q_min(path_graph(6))) < 1e-9);
    CHECK(std::abs(q_min(cycle_graph(8))) < 1e-9);
    CHECK_THROWS_AS(q_min(Graph(0)), DomainError);
}

TEST_CASE("signless sandwich, monotonicity and deletion drop") {
    for (const auto& g : corpus()) {
        if (g.order() < 2) continue;
        const StructureInfo s = structure_queries(g);
        const double q = q_min(g);
        const double lmin = spectrum_of(g).smallest();
        CHECK(q - static_cast<double>(s.max_degree) <= lmin + 1e-8);
        CHECK(lmin <= q - static_cast<double>(s.min_degree) + 1e-8);

        const auto edges = g.edges();
        if (!edges.empty()) {
            const Edge drop[] = {edges.front()};
            GraphBuilder b(g.order());
            for (const auto& e : edges)
                if (!(e == drop[0])) b.add_edge(e.u, e.v);
            const Graph h = std::move(b).build();
            REQUIRE(is_spanning_subgraph(h, g));
            CHECK(q_min(h) <= q + 1e-8);
        }
        const Vertex v[] = {0};
        CHECK(q_min(delete_vertices(g, v)) >= q - 1.0 - 1e-8);
    }
}

TEST_CASE("regular complement and line spectra") {
    for (const auto& g : corpus()) {
        if (!structure_queries(g).regular_degree) continue;
        CAPTURE(g.name());
        CHECK(regular_complement_spectrum(g).max_deviation(spectrum_of(complement(g))) <= 1e-8);
        CHECK(regular_line_spectrum(g).max_deviation(spectrum_of(line_graph(g))) <= 1e-8);
    }
    CHECK_THROWS_AS(regular_complement_spectrum(path_graph(4)), RegularityError);
    CHECK_THROWS_AS(regular_line_spectrum(path_graph(4)), RegularityError);
}

TEST_CASE("eigenvalue pairing with the complement") {
    for (const auto& g : corpus()) {
        const std::size_t n = g.order();
        if (n < 2) continue;
        const auto a = spectrum_of(g).values();
        const auto c = spectrum_of(complement(g)).values();
        for (std::size_t j = 2; j <= n; ++j) CHECK(a[j - 1] + c[n - j + 1] <= -1.0 + 1e-8);
    }
}

TEST_CASE("spectrum assembly") {
    SpectrumAssembly a;
    a.add_all({4, 2, 2}, -1.0);
    a.add(-2.0, 2);
    a.add(1.0, -1);
    CHECK(a.finish().to_string() == "3 1 -2^2");
    SpectrumAssembly b;
    b.add(1.0);
    CHECK_THROWS_AS(b.remove(5.0), NumericFailure);
}
