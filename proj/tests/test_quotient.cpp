#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "srho/eigen.hpp"
#include "srho/errors.hpp"
#include "srho/families.hpp"
#include "srho/polynomial.hpp"
#include "srho/quotient.hpp"
#include "srho/spectral.hpp"
#include "srho/structure.hpp"
#include "srho/transforms.hpp"

using namespace srho;

namespace {

const Graph k2 = complete_graph(2);

Graph c3c3() { return disjoint_union(cycle_graph(3), cycle_graph(3)); }

HJoin join(const Graph& pattern, std::vector<Graph> parts) { return h_join(pattern, parts); }

Partition ka_join_order(std::size_t n) {
    Partition pi{{{0}, {n - 3, n - 2, n - 1}, {}}};
    for (Vertex v = 1; v <= n - 4; ++v) pi.blocks[2].push_back(v);
    return pi;
}

Partition merged(const Partition& pi, std::size_t a, std::size_t b) {
    Partition out;
    for (std::size_t i = 0; i < pi.blocks.size(); ++i) {
        if (i == b) continue;
        auto block = pi.blocks[i];
        if (i == a) block.insert(block.end(), pi.blocks[b].begin(), pi.blocks[b].end());
        std::sort(block.begin(), block.end());
        out.blocks.push_back(block);
    }
    return out;
}

}  // namespace

TEST_CASE("coarsest equitable partition") {
    CHECK(coarsest_equitable_partition(complete_graph(5)).block_count() == 1);
    const Partition ka = coarsest_equitable_partition(ka_graph(6, 2));
    CHECK(ka == Partition{{{0}, {1, 2}, {3, 4, 5}}});
    const HJoin j = join(k2, {cycle_graph(6), complete_graph(4)});
    CHECK(coarsest_equitable_partition(j.graph) == j.blocks);
    CHECK(coarsest_equitable_partition(join(k2, {cycle_graph(6), c3c3()}).graph).block_count() == 1);

    std::vector<Graph> graphs{petersen_graph(), path_graph(7), caterpillar({4, 3, 4}), ka_graph(9, 3),
                              turan_graph(7, 3), complete_bipartite(2, 5)};
    for (const auto& g : graphs) {
        const Partition pi = coarsest_equitable_partition(g);
        CHECK(is_equitable(g, pi).equitable);
        for (std::size_t a = 0; a < pi.block_count(); ++a)
            for (std::size_t b = a + 1; b < pi.block_count(); ++b) CHECK_FALSE(is_equitable(g, merged(pi, a, b)).equitable);
    }
}

TEST_CASE("equitability") {
    const EquitableCheck c6 = is_equitable(cycle_graph(6), Partition{{{0, 2, 4}, {1, 3, 5}}});
    CHECK(c6.equitable);
    CHECK(c6.counts == std::vector<std::vector<std::size_t>>{{0, 2}, {2, 0}});
    const EquitableCheck p3 = is_equitable(path_graph(3), Partition{{{0, 2}, {1}}});
    CHECK(p3.counts == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 0}});
    const EquitableCheck p4 = is_equitable(path_graph(4), Partition{{{0, 3}, {1, 2}}});
    CHECK(p4.counts == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 1}});
    CHECK_FALSE(is_equitable(path_graph(4), Partition{{{0, 1}, {2, 3}}}).equitable);
    CHECK_THROWS_AS(is_equitable(path_graph(4), Partition{{{0, 1}, {2}}}), PartitionError);
    CHECK_THROWS_AS(is_equitable(path_graph(4), Partition{{{0, 1}, {1, 2, 3}}}), PartitionError);
    CHECK_THROWS_AS(is_equitable(path_graph(4), Partition{{{0, 1, 2, 3}, {}}}), PartitionError);
}

TEST_CASE("quotient matrices") {
    const QuotientSet ka = quotient_matrices(ka_graph(6, 2), ka_join_order(6));
    CHECK(ka.signless_laplacian == DenseMatrix{{3, 3, 0}, {1, 7, 2}, {0, 3, 5}});

    const HJoin k4 = join(k2, {k2, k2});
    const QuotientSet q4 = quotient_matrices(k4.graph, k4.blocks);
    CHECK(q4.adjacency == DenseMatrix{{1, 2}, {2, 1}});
    REQUIRE(q4.adjacency_h.has_value());
    CHECK(*q4.adjacency_h == DenseMatrix{{1, 2}, {2, 1}});

    const HJoin kc = join(k2, {k2, cycle_graph(4)});
    const QuotientSet qc = quotient_matrices(kc.graph, kc.blocks);
    CHECK(qc.adjacency == DenseMatrix{{1, 4}, {2, 2}});
    REQUIRE(qc.adjacency_h.has_value());
    CHECK((*qc.adjacency_h)(0, 1) == doctest::Approx(std::sqrt(8.0)));
    CHECK((*qc.adjacency_h)(1, 0) == doctest::Approx(std::sqrt(8.0)));
    const Spectrum exact = exact_spectrum(qc.adjacency).spectrum;
    const Spectrum closed = Spectrum::from_values({(3 + std::sqrt(33.0)) / 2, (3 - std::sqrt(33.0)) / 2});
    CHECK(exact.max_deviation(closed) < 1e-9);
    CHECK(oracle::max_gap(oracle::eigenvalues(*qc.adjacency_h), closed.values()) < 1e-12);

    const HJoin p3 = join(path_graph(3), {k2, cycle_graph(4), complete_graph(3)});
    const QuotientSet qp = quotient_matrices(p3.graph, p3.blocks);
    CHECK((*qp.adjacency_h)(0, 2) == 0.0);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(qp.laplacian(i, i) == qp.degree(i, i) - qp.adjacency(i, i));
        CHECK(qp.signless_laplacian(i, i) == static_cast<double>(2 * qp.internal_degree[i] + qp.external_degree[i]));
        for (std::size_t j = 0; j < 3; ++j) {
            const double jij = static_cast<double>(qp.block_sizes[j]);
            CHECK(qp.complement_adjacency(i, j) == jij - (i == j ? 1.0 : 0.0) - qp.adjacency(i, j));
        }
    }
    CHECK(qp.adjacency_h->is_symmetric());
    CHECK(qp.laplacian_h->is_symmetric());
    CHECK(qp.signless_laplacian_h->is_symmetric());

    CHECK_THROWS_AS(quotient_matrices(path_graph(4), Partition{{{0, 1}, {2, 3}}}), EquitabilityError);
    const Partition c6split{{{0, 2, 4}, {1, 3, 5}}};
    CHECK(quotient_matrices(cycle_graph(6), c6split).adjacency_h.has_value() == false);
    CHECK_THROWS_AS(quotient_matrices(cycle_graph(6), c6split, SymmetricVariants::required), StructureError);
}

TEST_CASE("quotient spectral equality") {
    const TheoremReport k4 = verify_quotient_spectra_equal(join(k2, {k2, k2}));
    CHECK(k4.pass);
    const HJoin kc = join(k2, {k2, cycle_graph(4)});
    CHECK(verify_quotient_spectra_equal(kc).pass);
    const HJoin ka = join(path_graph(3), {complete_graph(1), complete_graph(3), k2});
    const TheoremReport kar = verify_quotient_spectra_equal(ka);
    CHECK(kar.pass);
    const QuotientSet q = quotient_matrices(ka.graph, ka.blocks);
    CHECK(exact_spectrum(q.signless_laplacian).spectrum.to_string() == "9 4 2");
    CHECK(sym_eigen(*q.signless_laplacian_h).spectrum.to_string() == "9 4 2");

    CHECK_THROWS_AS(verify_quotient_spectra_equal(cycle_graph(6), Partition{{{0, 2, 4}, {1, 3, 5}}}), StructureError);

    for (const auto& sample : random_hjoin_corpus(100, 99)) {
        const HJoin j = sample.build();
        CAPTURE(sample.description);
        CHECK(verify_quotient_spectra_equal(j).pass);
        if (sample.pattern.order() >= 2 && is_connected(sample.pattern)) {
            const QuotientSet s = quotient_matrices(j.graph, j.blocks);
            CHECK(exact_spectrum(s.signless_laplacian).spectrum.smallest() >= 2.0 - 1e-8);
        }
    }
}

TEST_CASE("random join corpus is deterministic") {
    const auto a = random_hjoin_corpus(20, 1234);
    const auto b = random_hjoin_corpus(20, 1234);
    REQUIRE(a.size() == 20);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].description == b[i].description);
        CHECK(a[i].pattern.order() <= 5);
        for (const auto& p : a[i].parts) CHECK(p.order() <= 6);
    }
}

TEST_CASE("signless spectrum assembly of joins") {
    CHECK(hjoin_signless_spectrum(k2, {k2, k2}).to_string() == "6 2^3");
    const Spectrum ka = hjoin_signless_spectrum(path_graph(3), {complete_graph(1), complete_graph(3), k2});
    CHECK(ka.to_string() == "9 4^3 3 2");
    CHECK(ka.max_deviation(spectrum_of(ka_graph(6, 2), MatrixKind::signless_laplacian)) < 1e-8);
    const std::vector<Graph> parts{cycle_graph(6), c3c3()};
    CHECK(hjoin_signless_spectrum(k2, parts)
              .max_deviation(spectrum_of(h_join(k2, parts).graph, MatrixKind::signless_laplacian)) < 1e-8);
    CHECK_THROWS_AS(hjoin_signless_spectrum(k2, {k2, path_graph(3)}), RegularityError);

    for (const auto& sample : random_hjoin_corpus(30, 3))
        CHECK(hjoin_signless_spectrum(sample.pattern, sample.parts)
                  .max_deviation(spectrum_of(sample.build().graph, MatrixKind::signless_laplacian)) < 1e-8);
}

TEST_CASE("cospectrality witnesses") {
    const CospectralityWitness w = quotient_cospectrality_witness(join(k2, {k2, cycle_graph(6)}), join(k2, {k2, c3c3()}));
    CHECK(w.same_quotient);
    CHECK_FALSE(w.cospectral);
    CHECK(w.spectral_gap > 1e-3);
    CHECK(w.line_energy_gap <= 1e-6);
    CHECK(w.equienergetic_noncospectral());

    const HJoin same = join(k2, {k2, cycle_graph(6)});
    const CospectralityWitness s = quotient_cospectrality_witness(same, same);
    CHECK(s.same_quotient);
    CHECK(s.cospectral);
    CHECK(s.complements_cospectral);

    const CospectralityWitness cc =
        quotient_cospectrality_witness(join(k2, {cycle_graph(6), cycle_graph(6)}), join(k2, {c3c3(), c3c3()}));
    CHECK(cc.same_quotient);
    CHECK(cc.same_complement_quotient);
    CHECK_FALSE(cc.cospectral);

    CHECK_THROWS_AS(quotient_cospectrality_witness(join(k2, {k2, cycle_graph(6)}), join(k2, {k2, cycle_graph(5)})),
                    StructureError);
}
