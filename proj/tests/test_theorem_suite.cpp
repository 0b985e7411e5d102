#include <doctest.h>

#include <cmath>
#include <set>

#include "oracle.hpp"
#include "srho/errors.hpp"
#include "srho/families.hpp"
#include "srho/spectral.hpp"
#include "srho/structure.hpp"
#include "srho/theorems.hpp"
#include "srho/transforms.hpp"

using namespace srho;

namespace {

const Graph k2 = complete_graph(2);

Graph c3c3() { return disjoint_union(cycle_graph(3), cycle_graph(3)); }

double level_value(const TheoremReport& r, std::size_t index, const char* key) {
    return r.computed.at("levels").at(index).at(key).get<double>();
}

void check_applicable_pass(const TheoremReport& r) {
    CAPTURE(r.to_json().dump());
    CHECK(r.hypothesis_check);
    CHECK(r.pass);
    CHECK_FALSE(r.truncated);
}

void check_inapplicable(const TheoremReport& r) {
    CHECK_FALSE(r.hypothesis_check);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.is_discrepancy());
}

}  // namespace

TEST_CASE("iterated rho under the edge-degree condition") {
    const TheoremReport cat = check_iterated_rho_edge_degree(caterpillar({4, 3, 4}), 2);
    check_applicable_pass(cat);
    const TheoremReport k4 = check_iterated_rho_edge_degree(complete_graph(4), 3);
    check_applicable_pass(k4);
    CHECK(k4.computed["levels"].size() == 2);
    CHECK(level_value(k4, 0, "order") == 12);
    CHECK(level_value(k4, 1, "order") == 36);
    CHECK(level_value(k4, 0, "energy") == doctest::Approx(24.0));
    CHECK(level_value(k4, 1, "energy") == doctest::Approx(96.0));
    check_inapplicable(check_iterated_rho_edge_degree(path_graph(4), 2));
}

TEST_CASE("iterated rho under minimum degree three") {
    const TheoremReport p = check_iterated_rho_min_degree(petersen_graph(), 2);
    check_applicable_pass(p);
    CHECK(level_value(p, 0, "order") == 30);
    CHECK(level_value(p, 0, "energy") == doctest::Approx(60.0));
    check_applicable_pass(check_iterated_rho_min_degree(complete_bipartite(3, 3), 2));
    check_inapplicable(check_iterated_rho_min_degree(cycle_graph(6), 2));
}

TEST_CASE("joins with regular parts") {
    const TheoremReport k4 = check_hjoin_line_rho(k2, {k2, k2}, 1);
    check_applicable_pass(k4);
    CHECK(level_value(k4, 0, "energy") == doctest::Approx(8.0));

    const Edge extra[] = {{2, 4}, {5, 7}};
    const TheoremReport sup = check_hjoin_line_rho(k2, {k2, cycle_graph(6)}, 2, extra);
    check_applicable_pass(sup);
    CHECK(sup.computed["supergraph"]["size"] == 21);
    CHECK(sup.computed["supergraph"]["order"] == 8);
    bool found = false;
    for (const auto& level : sup.computed["levels"])
        if (level["label"] == "supergraph") {
            found = true;
            CHECK(level["energy"].get<double>() == doctest::Approx(52.0));
        }
    CHECK(found);

    check_inapplicable(check_hjoin_line_rho(complete_graph(1), {k2}, 1));
    check_inapplicable(check_hjoin_line_rho(empty_graph(2), {k2, k2}, 1));
    check_inapplicable(check_hjoin_line_rho(k2, {k2, path_graph(3)}, 1));
    CHECK_THROWS_AS(check_hjoin_line_rho(k2, {k2}, 1), ArityError);
}

TEST_CASE("vertex deletion from joins") {
    const TheoremReport one = check_vertex_deletion_rho(k2, {cycle_graph(5), cycle_graph(5)}, 1, 1);
    check_applicable_pass(one);
    CHECK(one.computed["deleted_vertices"] == nlohmann::json::array({0}));
    CHECK(one.computed["single_deletion_failures"].empty());
    const TheoremReport two = check_vertex_deletion_rho(k2, {cycle_graph(6), cycle_graph(6)}, 2, 1);
    check_applicable_pass(two);
    CHECK(two.computed["deleted_vertices"] == nlohmann::json::array({0, 6}));
    check_inapplicable(check_vertex_deletion_rho(k2, {k2, cycle_graph(6)}, 1, 1));
    check_inapplicable(check_vertex_deletion_rho(k2, {cycle_graph(3), cycle_graph(6)}, 2, 1));
    CHECK_THROWS_AS(check_vertex_deletion_rho(k2, {cycle_graph(5), cycle_graph(5)}, 0, 1), ParameterError);
}

TEST_CASE("path joins") {
    check_applicable_pass(check_path_join_rho(3, 3, 1));
    check_applicable_pass(check_path_join_rho(4, 3, 2));
    check_inapplicable(check_path_join_rho(2, 3, 1));
}

TEST_CASE("Ka_n(p)") {
    const TheoremReport six = check_kan_rho(6, 2, 1);
    check_applicable_pass(six);
    CHECK(six.computed["quotient_matrix"] == nlohmann::json::parse("[[3,3,0],[1,7,2],[0,3,5]]"));
    CHECK(six.computed["quotient_polynomial"] == "x^3 - 15x^2 + 62x - 72");
    check_applicable_pass(check_kan_rho(8, 2, 1));
    for (std::size_t n = 6; n <= 12; ++n) check_applicable_pass(check_kan_rho(n, n - 4, 1));
    check_inapplicable(check_kan_rho(6, 3, 1));
    check_inapplicable(check_kan_rho(5, 1, 1));
}

TEST_CASE("least eigenvalue -2 with minimum degree four") {
    check_applicable_pass(check_min_deg4_rho(line_graph(complete_graph(5)), 1));
    check_applicable_pass(check_min_deg4_rho(turan_graph(6, 3), 2));
    check_inapplicable(check_min_deg4_rho(complete_graph(4), 1));
    check_applicable_pass(check_min_deg4_rho(complete_graph(6), 1));
    check_inapplicable(check_min_deg4_rho(complete_bipartite(4, 4), 1));
}

TEST_CASE("dense graphs") {
    const TheoremReport k6 = check_das_iterated(complete_graph(6), 2);
    check_applicable_pass(k6);
    CHECK(level_value(k6, 0, "energy") == doctest::Approx(36.0));
    CHECK(spectrum_of(line_graph(complete_graph(6))).to_string() == "8 2^5 -2^9");
    const TheoremReport t = check_das_iterated(turan_graph(6, 3), 1);
    check_applicable_pass(t);
    CHECK(level_value(t, 0, "energy") == doctest::Approx(24.0));
    check_inapplicable(check_das_iterated(cycle_graph(8), 1));
}

TEST_CASE("Turan graphs") {
    const TheoremReport t36 = check_turan_rho(3, 6, 1);
    check_applicable_pass(t36);
    CHECK(t36.computed["q_min"].get<double>() == doctest::Approx(2.0));
    const TheoremReport t37 = check_turan_rho(3, 7, 1);
    check_applicable_pass(t37);
    CHECK(std::abs(t37.computed["q_min"].get<double>() - 1.7251) <= 5e-4);
    CHECK_FALSE(t37.computed["q_min_bounds"]["lower_holds"].get<bool>());
    CHECK_FALSE(t37.computed["line_rho_not_claimed"]["holds"].get<bool>());
    check_applicable_pass(check_turan_rho(3, 8, 1));
    check_applicable_pass(check_turan_rho(4, 5, 1));
    check_applicable_pass(check_turan_rho(5, 10, 1));
    check_inapplicable(check_turan_rho(2, 6, 1));
    CHECK_THROWS_AS(check_turan_rho(3, 2, 1), ParameterError);
}

TEST_CASE("complements of regular graphs") {
    check_applicable_pass(check_regular_complement_rho(petersen_graph(), 1));
    check_applicable_pass(check_regular_complement_rho(circulant(12, {1, 6}), 1));
    check_inapplicable(check_regular_complement_rho(complete_graph(4), 1));
    check_inapplicable(check_regular_complement_rho(path_graph(5), 1));

    check_applicable_pass(check_complement_line_regular_rho(cycle_graph(8), 1));
    check_applicable_pass(check_complement_line_regular_rho(hypercube(3), 1));
    check_inapplicable(check_complement_line_regular_rho(complete_graph(4), 1));
}

TEST_CASE("hyperenergetic iterated line graphs") {
    check_applicable_pass(check_hyperenergetic_iterated(complete_graph(4), 2));
    check_applicable_pass(check_hyperenergetic_iterated(caterpillar({4, 3, 4}), 2));
    check_inapplicable(check_hyperenergetic_iterated(cycle_graph(6), 2));
}

TEST_CASE("complement structure") {
    const TheoremReport k4 = check_complement_structure(complete_graph(4), 1);
    check_applicable_pass(k4);
    CHECK(level_value(k4, 0, "complement_energy") == doctest::Approx(6.0));
    CHECK(level_value(k4, 0, "spectral_radius") == doctest::Approx(1.0));

    // complement of L(K_6) is the Kneser graph K(6,2): {6, 1^9, -3^5}
    const TheoremReport k6 = check_complement_structure(complete_graph(6), 2);
    check_applicable_pass(k6);
    CHECK(level_value(k6, 0, "spectral_radius") == doctest::Approx(6.0));
    CHECK(level_value(k6, 0, "positive_count") == 10);
    CHECK(level_value(k6, 0, "complement_energy") == doctest::Approx(30.0));
    CHECK(spectrum_of(complement(line_graph(complete_graph(6)))).to_string() == "6 1^9 -3^5");

    check_applicable_pass(check_complement_structure(turan_graph(6, 3), 2));
    check_inapplicable(check_complement_structure(path_graph(4), 1));
}

TEST_CASE("equienergetic complements") {
    const TheoremReport k6 = check_equienergetic_complement_iff(complete_graph(6), 1);
    check_applicable_pass(k6);
    CHECK(k6.computed["negative_count"] == 9);

    const std::vector<Graph> a{k2, cycle_graph(6)}, b{k2, c3c3()};
    const Graph family[] = {h_join(k2, b).graph};
    const TheoremReport pair = check_equienergetic_complement_iff(h_join(k2, a).graph, 1, family);
    check_applicable_pass(pair);
    REQUIRE(pair.computed["family"].size() == 1);
    CHECK(pair.computed["family"][0]["complement_energy"].get<double>() ==
          doctest::Approx(pair.computed["complement_energy"].get<double>()).epsilon(1e-9));
    check_inapplicable(check_equienergetic_complement_iff(path_graph(4), 1));
}

TEST_CASE("complement hyperenergetic") {
    const TheoremReport k4 = check_complement_hyperenergetic(complete_graph(4), 3);
    check_applicable_pass(k4);
    CHECK(k4.computed["levels"][0]["qualifies"] == false);
    CHECK(k4.computed["levels"][1]["qualifies"] == true);
    check_applicable_pass(check_complement_hyperenergetic(caterpillar({4, 3, 4}), 2));
    check_inapplicable(check_complement_hyperenergetic(cycle_graph(6), 2));
    check_inapplicable(check_complement_hyperenergetic(complete_graph(4), 2));
}

TEST_CASE("extended bipartite double energies") {
    const TheoremReport k4 = check_ebd_energies(complete_graph(4), 1);
    check_applicable_pass(k4);
    CHECK(k4.computed["ebd_line_energy"].get<double>() == doctest::Approx(20.0));
    const TheoremReport k6 = check_ebd_energies(complete_graph(6), 1);
    check_applicable_pass(k6);
    CHECK(k6.computed["ebd_line_energy"].get<double>() == doctest::Approx(66.0));
    check_inapplicable(check_ebd_energies(path_graph(4), 1));
}

TEST_CASE("independence bounds") {
    const TheoremReport k4 = check_independence_bounds(complete_graph(4), 1);
    check_applicable_pass(k4);
    CHECK(k4.computed["alpha_line"] == oracle::brute_alpha(line_graph(complete_graph(4))));
    CHECK(k4.computed["alpha_line"] == 2);
    CHECK(k4.computed["alpha_complement"] == 3);
    const TheoremReport k33 = check_independence_bounds(complete_bipartite(3, 3), 1);
    check_applicable_pass(k33);
    CHECK(k33.computed["alpha_line"] == 3);
    check_inapplicable(check_independence_bounds(path_graph(4), 1));
}

TEST_CASE("equienergetic families") {
    const std::vector<Graph> joins{h_join(k2, std::vector<Graph>{k2, cycle_graph(6)}).graph,
                                   h_join(k2, std::vector<Graph>{k2, c3c3()}).graph};
    check_applicable_pass(check_equienergetic_family(joins, 1));
    check_applicable_pass(check_equienergetic_family(joins, 2));
    const std::vector<Graph> lonely{petersen_graph()};
    check_inapplicable(check_equienergetic_family(lonely, 1));
}

TEST_CASE("fixed corpora") {
    check_applicable_pass(check_quotient_spectral_equality(25, 5));
    check_applicable_pass(check_hjoin_signless_assembly(k2, {cycle_graph(6), c3c3()}));
    check_applicable_pass(check_join_equienergetic_pair(cycle_graph(6), c3c3()));
    check_inapplicable(check_join_equienergetic_pair(cycle_graph(6), complete_graph(4)));
    check_applicable_pass(check_line_rho_census());
}

TEST_CASE("growth cap truncates instead of failing") {
    const TheoremReport r = check_iterated_rho_edge_degree(complete_graph(9), 3);
    CHECK(r.truncated);
    CHECK(r.hypothesis_check);
    CHECK(r.pass);
    CHECK(r.computed["levels"].size() == 1);
}

TEST_CASE("suite registry and default corpus") {
    std::set<std::string> ids;
    for (const auto& op : suite_operations()) {
        CHECK(ids.insert(op.id).second);
        CHECK(find_operation(op.id) == &op);
    }
    CHECK(find_operation("nope") == nullptr);
    CHECK_THROWS_AS(run_suite({"nope"}), ParameterError);

    const auto serial = run_suite({});
    SuiteOptions parallel;
    parallel.threads = 4;
    const auto threaded = run_suite({}, parallel);
    REQUIRE(serial.size() == threaded.size());
    std::size_t applicable = 0;
    for (std::size_t i = 0; i < serial.size(); ++i) {
        const TheoremReport& r = serial[i];
        CAPTURE(r.to_json().dump());
        CHECK(r.id == threaded[i].id);
        CHECK(r.pass == threaded[i].pass);
        CHECK_FALSE(r.is_discrepancy());
        if (r.pass) {
            CHECK(r.hypothesis_check);
            for (const auto& res : r.residuals) CHECK(res.ok());
            for (const auto& c : r.checks) CHECK(c.ok);
        }
        if (r.hypothesis_check) ++applicable;
    }
    CHECK(applicable > 50);
    CHECK(default_depth(petersen_graph()) == 2);
    CHECK(default_depth(complete_graph(13)) == 1);
}

TEST_CASE("line graph minimum degree growth") {
    for (const char* s : {"petersen", "cube(3)", "turan(7,3)", "kanp(8,2)", "cat(4,3,4)", "complete(5)", "kbip(2,5)"}) {
        const Graph g = build(parse_family(s));
        const StructureInfo a = structure_queries(g), b = structure_queries(line_graph(g));
        CHECK(b.min_degree + 2 >= 2 * a.min_degree);
    }
}

TEST_CASE("reports serialise") {
    const TheoremReport r = check_turan_rho(4, 5, 1);
    const nlohmann::json j = r.to_json();
    CHECK(j["id"] == "turan-rho");
    CHECK(j["pass"] == true);
    CHECK(j["predicted"]["signless_spectrum"].size() == 3);
    CHECK(nlohmann::json::parse(j.dump()) == j);
}
