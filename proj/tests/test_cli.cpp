#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "srho/cli.hpp"
#include "srho/census.hpp"
#include "srho/errors.hpp"
#include "srho/families.hpp"
#include "srho/graph6.hpp"
#include "srho/spectral.hpp"
#include "srho/theorems.hpp"
#include "srho/transforms.hpp"

using namespace srho;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("spectrum subcommand") {
    const Run q = run({"spectrum", "--graph", "turan(6,3)", "--matrix", "Q"});
    CHECK(q.code == 0);
    CHECK(q.out == "8 4^3 2^2\n");
    const Run exact = run({"spectrum", "--graph", "petersen", "--exact"});
    CHECK(exact.out == "3 1^5 -2^4\n");
    const Run g6 = run({"spectrum", "--graph", "C~", "--format", "json"});
    CHECK(nlohmann::json::parse(g6.out)["spectrum"] == nlohmann::json::parse("[[3,1],[-1,3]]"));
    CHECK(run({"spectrum", "--graph", "turan(6,3)", "--tol", "-1"}).code == 2);
    CHECK(run({"spectrum", "--graph", "turan(6,3)", "--matrix", "X"}).code == 2);
}

TEST_CASE("build, energy and rho subcommands") {
    const Run b = run({"build", "--graph", "complete(4)"});
    CHECK(b.out == "C~\n");
    const Run bj = run({"build", "--graph", "cat(4,3,4)", "--format", "json"});
    const auto j = nlohmann::json::parse(bj.out);
    CHECK(j["order"] == 14);
    CHECK(from_graph6(j["graph6"].get<std::string>()) == caterpillar({4, 3, 4}));

    CHECK(run({"energy", "--graph", "complete(6)"}).out == "10\n");

    const std::string path = "cli_test_graphs.g6";
    {
        std::ofstream f(path);
        f << "# sample\ncomplete(4)\nC]\n\npath(4)\n";
    }
    const Run r = run({"rho", "--graph-file", path, "--k", "2"});
    std::remove(path.c_str());
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    const auto k4 = nlohmann::json::parse(ls[0]);
    CHECK(k4["holds"] == true);
    CHECK(k4["order"] == 12);
    CHECK(k4["k"] == 2);
    CHECK(nlohmann::json::parse(ls[2])["holds"] == false);
}

TEST_CASE("graph sources are validated") {
    const Run bad = run({"rho", "--graph", "bogus(3)"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("bogus(3)") != std::string::npos);
    CHECK(run({"rho", "--graph", "turan(2,3)"}).code == 2);
    CHECK(run({"rho"}).code == 2);
    CHECK(run({"rho", "--graph", "C~", "--graph-file", "x"}).code == 2);
    CHECK(run({"rho", "--graph-file", "/nonexistent/file"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK_THROWS_AS(cli::read_graph("@@@@"), ParseError);
}

TEST_CASE("quotient subcommand") {
    const Run q = run({"quotient", "--graph", "kanp(6,2)", "--partition", "0|3,4,5|1,2"});
    CHECK(q.code == 0);
    const auto j = nlohmann::json::parse(q.out);
    CHECK(j["signless_laplacian"] == nlohmann::json::parse("[[3,3,0],[1,7,2],[0,3,5]]"));
    CHECK(j["spectra"]["signless_laplacian"]["polynomial"] == "x^3 - 15x^2 + 62x - 72");
    CHECK(j["symmetric_variants"] == true);

    const auto coarse = nlohmann::json::parse(run({"quotient", "--graph", "petersen"}).out);
    CHECK(coarse["block_sizes"] == nlohmann::json::array({10}));
    CHECK(run({"quotient", "--graph", "path(4)", "--partition", "0,1|2,3"}).code == 2);
    CHECK(run({"quotient", "--graph", "path(4)", "--partition", "0,x|2,3"}).code == 2);
    CHECK(cli::parse_partition("0,1|2") == Partition{{{0, 1}, {2}}});
}

TEST_CASE("verify subcommand") {
    const Run one = run({"verify", "--check", "turan-rho"});
    CHECK(one.code == 0);
    for (const auto& l : lines(one.out)) CHECK(nlohmann::json::parse(l)["id"] == "turan-rho");

    const Run g = run({"verify", "--check", "complement-structure", "--graph", "complete(6)", "--k", "1"});
    CHECK(g.code == 0);
    CHECK(nlohmann::json::parse(g.out)["pass"] == true);

    CHECK(run({"verify", "--check", "nope"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"verify", "--check", "kan-rho", "--graph", "petersen"}).code == 2);

    const Run seeded = run({"verify", "--check", "quotient-spectral-equality", "--seed", "7"});
    CHECK(seeded.code == 0);
    CHECK(nlohmann::json::parse(seeded.out)["computed"]["seed"] == 7);
}

TEST_CASE("verify --all covers every suite operation") {
    std::set<std::string> bound(cli::verify_bindings().begin(), cli::verify_bindings().end());
    std::set<std::string> registered;
    for (const auto& op : suite_operations()) registered.insert(op.id);
    CHECK(bound == registered);

    const Run all = run({"verify", "--all"});
    CHECK(all.code == 0);
    std::set<std::string> seen;
    for (const auto& l : lines(all.out)) {
        const auto j = nlohmann::json::parse(l);
        seen.insert(j["id"].get<std::string>());
        CHECK_FALSE((j["hypothesis_check"] == true && j["pass"] == false));
    }
    CHECK(seen == registered);
}

TEST_CASE("census subcommand") {
    const Run c = run({"census", "--order", "6"});
    CHECK(c.code == 0);
    const auto ls = lines(c.out);
    REQUIRE(ls.size() == 14);
    const auto summary = nlohmann::json::parse(ls.back());
    CHECK(summary["order"] == 6);
    CHECK(summary["count"] == 13);
    CHECK(summary["named_matches"].size() == 7);
    for (const auto& m : summary["named_matches"]) CHECK(m["found"] == true);
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) CHECK(has_line_rho(from_graph6(ls[i])));

    const Run conn = run({"census", "--order", "5", "--connected"});
    CHECK(nlohmann::json::parse(lines(conn.out).back())["count"] == 21);
    CHECK(run({"census", "--order", "8"}).code == 2);
}

TEST_CASE("equienergetic pairs") {
    const Run p = run({"equi-pair", "--order", "6", "--degree", "2"});
    CHECK(p.code == 0);
    const auto ls = lines(p.out);
    REQUIRE(ls.size() == 3);
    const auto cert = nlohmann::json::parse(ls[2]);
    CHECK(cert["parts"] == nlohmann::json::array({"cycle(6)", "union(cycle(3),cycle(3))"}));
    CHECK(cert["certificate"]["pass"] == true);
    const Graph a = from_graph6(ls[0]), b = from_graph6(ls[1]);
    CHECK(std::abs(energy(line_graph(a)).energy - energy(line_graph(b)).energy) <= 1e-6);
    CHECK(spectrum_of(a).max_deviation(spectrum_of(b)) > 1e-3);

    const Run none = run({"equi-pair", "--order", "3", "--degree", "2"});
    CHECK(none.code == 2);
    CHECK(none.err.find("(6,2)") != std::string::npos);
    CHECK_THROWS_AS(cli::equi_pair(3, 2), AvailabilityError);

    const cli::EquiPair cube = cli::equi_pair(8, 3);
    CHECK(cube.certificate.pass);

    for (const auto& e : cli::regular_graph_table()) {
        CHECK(e.graph.order() <= 10);
        CHECK(e.degree >= 1);
    }
}
