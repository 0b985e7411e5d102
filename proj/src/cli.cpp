#include "srho/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "srho/census.hpp"
#include "srho/errors.hpp"
#include "srho/families.hpp"
#include "srho/graph6.hpp"
#include "srho/polynomial.hpp"
#include "srho/quotient.hpp"
#include "srho/spectral.hpp"
#include "srho/structure.hpp"
#include "srho/theorems.hpp"
#include "srho/transforms.hpp"

namespace srho::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

}  // namespace

Graph read_graph(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) throw ParseError("empty graph source");
    std::string family_error;
    try {
        Graph g = build(parse_family(t));
        return g.name().empty() ? g.renamed(t) : g;
    } catch (const ParseError& e) {
        family_error = e.what();
    }
    try {
        return from_graph6(t).renamed(t);
    } catch (const ParseError&) {
        throw ParseError("cannot read graph '" + t + "': " + family_error);
    }
}

std::vector<Graph> read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        out.push_back(read_graph(line));
    }
    return out;
}

Partition parse_partition(const std::string& text) {
    Partition pi;
    std::stringstream blocks(text);
    std::string block;
    while (std::getline(blocks, block, '|')) {
        std::vector<Vertex> members;
        std::stringstream items(block);
        std::string item;
        while (std::getline(items, item, ',')) {
            item = trim(item);
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("bad vertex '" + item + "' in partition '" + text + "'");
            members.push_back(static_cast<Vertex>(std::stoull(item)));
        }
        pi.blocks.push_back(std::move(members));
    }
    if (pi.blocks.empty()) throw ParseError("empty partition '" + text + "'");
    return pi;
}

const std::vector<std::string>& verify_bindings() {
    static const std::vector<std::string> ids{
        "iterated-rho-edge-degree",   "iterated-rho-min-degree",     "hjoin-line-rho",
        "vertex-deletion-rho",        "path-join-rho",               "kan-rho",
        "min-degree4-rho",            "dense-iterated-rho",          "turan-rho",
        "regular-complement-rho",     "complement-line-regular-rho", "hyperenergetic-iterated",
        "complement-structure",       "equienergetic-complement-iff", "complement-hyperenergetic",
        "ebd-energies",               "independence-bounds",         "equienergetic-family",
        "quotient-spectral-equality", "hjoin-signless-assembly",     "join-equienergetic-pair",
        "line-rho-census"};
    return ids;
}

namespace {

void cycle_partitions(std::size_t remaining, std::size_t largest, std::vector<std::size_t>& current,
                      std::vector<std::vector<std::size_t>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (std::size_t c = std::min(largest, remaining); c >= 3; --c) {
        current.push_back(c);
        cycle_partitions(remaining - c, c, current, out);
        current.pop_back();
    }
}

std::string union_spec(const std::vector<std::string>& parts) {
    if (parts.size() == 1) return parts.front();
    std::string s = "union(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
    return s + ")";
}

std::vector<RegularEntry> make_table() {
    std::vector<std::string> specs;
    for (std::size_t n = 2; n <= 10; n += 2) specs.push_back(union_spec(std::vector<std::string>(n / 2, "complete(2)")));
    for (std::size_t n = 3; n <= 10; ++n) {
        std::vector<std::vector<std::size_t>> parts;
        std::vector<std::size_t> current;
        cycle_partitions(n, n, current, parts);
        for (const auto& p : parts) {
            std::vector<std::string> names;
            for (std::size_t c : p) names.push_back("cycle(" + std::to_string(c) + ")");
            specs.push_back(union_spec(names));
        }
    }
    for (std::size_t n = 1; n <= 10; ++n) specs.push_back("complete(" + std::to_string(n) + ")");
    for (const char* s : {"kbip(3,3)", "circulant(6,2,3)", "cube(3)", "union(complete(4),complete(4))",
                          "circulant(8,1,4)", "petersen", "circulant(10,1,5)", "circulant(10,2,5)", "kbip(4,4)",
                          "kbip(5,5)", "multipartite(2,2,2)", "multipartite(2,2,2,2)", "multipartite(2,2,2,2,2)"})
        specs.push_back(s);

    std::vector<Graph> graphs;
    for (const auto& s : specs) graphs.push_back(build(parse_family(s)).renamed(s));
    const std::size_t base = graphs.size();
    for (std::size_t i = 0; i < base; ++i)
        graphs.push_back(complement(graphs[i]).renamed("complement(" + graphs[i].name() + ")"));

    std::vector<RegularEntry> table;
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, CanonicalForm>> seen;
    for (const auto& g : graphs) {
        const auto deg = structure_queries(g).regular_degree;
        if (!deg || *deg == 0 || g.order() > 10) continue;
        auto key = std::make_pair(std::make_pair(g.order(), *deg), canonical_form(g));
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(std::move(key));
        table.push_back({g, *deg});
    }
    std::stable_sort(table.begin(), table.end(), [](const RegularEntry& a, const RegularEntry& b) {
        return std::make_pair(a.graph.order(), a.degree) < std::make_pair(b.graph.order(), b.degree);
    });
    return table;
}

std::optional<EquiPair> find_pair(std::size_t order, std::size_t degree) {
    std::vector<const RegularEntry*> candidates;
    for (const auto& e : regular_graph_table())
        if (e.graph.order() == order && e.degree == degree) candidates.push_back(&e);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            const Graph& h1 = candidates[i]->graph;
            const Graph& h2 = candidates[j]->graph;
            if (spectrum_of(h1).max_deviation(spectrum_of(h2)) <= 1e-3) continue;
            TheoremReport cert = check_join_equienergetic_pair(h1, h2);
            if (!cert.pass) continue;
            const Graph k2 = complete_graph(2);
            const std::vector<Graph> p1{k2, h1}, p2{k2, h2};
            return EquiPair{h_join(k2, p1).graph.renamed("K2[K2," + h1.name() + "]"),
                            h_join(k2, p2).graph.renamed("K2[K2," + h2.name() + "]"), h1, h2, std::move(cert)};
        }
    }
    return std::nullopt;
}

}  // namespace

const std::vector<RegularEntry>& regular_graph_table() {
    static const std::vector<RegularEntry> table = make_table();
    return table;
}

std::vector<std::pair<std::size_t, std::size_t>> supported_equi_pairs() {
    std::vector<std::pair<std::size_t, std::size_t>> keys;
    for (const auto& e : regular_graph_table()) {
        const auto key = std::make_pair(e.graph.order(), e.degree);
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& [n, r] : keys)
        if (find_pair(n, r)) out.emplace_back(n, r);
    return out;
}

EquiPair equi_pair(std::size_t order, std::size_t degree) {
    if (auto p = find_pair(order, degree)) return std::move(*p);
    std::string list;
    for (const auto& [n, r] : supported_equi_pairs())
        list += (list.empty() ? "" : ", ") + std::string("(") + std::to_string(n) + "," + std::to_string(r) + ")";
    throw AvailabilityError("no certified pair of " + std::to_string(degree) + "-regular graphs of order " +
                            std::to_string(order) + " in the table; supported (order,degree): " + list);
}

namespace {

struct Source {
    std::string graph;
    std::string file;
};

void add_source(CLI::App* sub, Source& s) {
    auto* g = sub->add_option("--graph,-g", s.graph, "family spec such as turan(6,3), or a graph6 string");
    auto* f = sub->add_option("--graph-file", s.file, "file with one graph source per line");
    g->excludes(f);
}

std::vector<Graph> load(const Source& s) {
    if (!s.graph.empty()) return {read_graph(s.graph)};
    if (!s.file.empty()) return read_graph_file(s.file);
    throw UsageError("a graph source is required (--graph or --graph-file)");
}

MatrixKind matrix_kind(const std::string& m) {
    if (m == "A") return MatrixKind::adjacency;
    if (m == "L") return MatrixKind::laplacian;
    return MatrixKind::signless_laplacian;
}

const std::vector<std::string> kFormats{"text", "json"};

json rho_json(const RhoVerdict& v) {
    return {{"holds", v.holds},
            {"vacuous", v.vacuous},
            {"negative_count", v.negative_count},
            {"positive_count", v.positive_count},
            {"minus2_multiplicity", v.multiplicity_of_minus2},
            {"worst_deviation", v.worst_deviation},
            {"tolerance", v.tolerance}};
}

json exact_json(const DenseMatrix& m) {
    const ExactSpectrum s = exact_spectrum(m);
    return {{"polynomial", s.polynomial.to_string()},
            {"nonreal_roots", s.roots.nonreal_count},
            {"spectrum", spectrum_json(s.spectrum)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectra of iterated line graphs and property rho", "spectra-rho"};
    app.require_subcommand(1);

    Source src;
    std::string format;
    std::string matrix = "A";
    bool exact = false;
    double tolerance = -1.0;
    int precision = 4;
    std::size_t k = 0;
    std::string partition;
    bool all = false;
    std::vector<std::string> checks;
    std::optional<std::size_t> level;
    std::uint64_t seed = kDefaultSeed;
    std::size_t census_order = 6;
    bool connected_only = false;
    std::size_t pair_order = 0, pair_degree = 0;

    auto* build_cmd = app.add_subcommand("build", "build a graph and print it as graph6");
    add_source(build_cmd, src);
    build_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember(kFormats));

    auto* spectrum_cmd = app.add_subcommand("spectrum", "print the A, L or Q spectrum");
    add_source(spectrum_cmd, src);
    spectrum_cmd->add_option("--matrix,-m", matrix, "A, L or Q")->check(CLI::IsMember({"A", "L", "Q"}));
    spectrum_cmd->add_flag("--exact", exact, "use the exact characteristic polynomial and Sturm isolation");
    spectrum_cmd->add_option("--tol", tolerance, "grouping tolerance")->check(CLI::PositiveNumber);
    spectrum_cmd->add_option("--precision", precision, "decimals in text output")->check(CLI::Range(0, 15));
    spectrum_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember(kFormats));

    auto* energy_cmd = app.add_subcommand("energy", "print the graph energy");
    add_source(energy_cmd, src);
    energy_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember(kFormats));

    auto* rho_cmd = app.add_subcommand("rho", "property rho of L^k(G), one JSON record per graph");
    add_source(rho_cmd, src);
    rho_cmd->add_option("--k", k, "line-graph iterations (0 checks G itself)");

    auto* quotient_cmd = app.add_subcommand("quotient", "quotient matrices of an equitable partition");
    add_source(quotient_cmd, src);
    quotient_cmd->add_option("--partition,-p", partition, "blocks such as 0,1|2,3; default coarsest equitable");

    auto* verify_cmd = app.add_subcommand("verify", "run suite checks, one JSON report per line");
    auto* all_opt = verify_cmd->add_flag("--all", all, "run every check on its default corpus");
    auto* check_opt = verify_cmd->add_option("--check,-c", checks, "check id (repeatable)");
    all_opt->excludes(check_opt);
    add_source(verify_cmd, src);
    verify_cmd->add_option("--k", level, "level for --graph (default 2 for order <= 12, else 1)");
    verify_cmd->add_option("--seed", seed, "seed for the random join corpus");

    auto* census_cmd = app.add_subcommand("census", "line-rho graphs as graph6 lines plus a JSON summary");
    census_cmd->add_option("--order,-n", census_order, "largest order, 1..7")->check(CLI::Range(1, 7));
    census_cmd->add_flag("--connected", connected_only, "list every connected graph of exactly this order instead");

    auto* pair_cmd = app.add_subcommand("equi-pair", "equienergetic non-cospectral joins K2[K2,H1], K2[K2,H2]");
    pair_cmd->add_option("--order,-n", pair_order, "order of the regular parts")->required();
    pair_cmd->add_option("--degree,-r", pair_degree, "degree of the regular parts")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const auto text_output = [&](const char* fallback) { return (format.empty() ? fallback : format.c_str()) == std::string("text"); };

    try {
        if (build_cmd->parsed()) {
            for (const auto& g : load(src)) {
                if (text_output("text"))
                    out << to_graph6(g) << "\n";
                else
                    out << json{{"graph", g.name()}, {"order", g.order()}, {"size", g.size()}, {"graph6", to_graph6(g)}}.dump()
                        << "\n";
            }
            return kExitOk;
        }
        if (spectrum_cmd->parsed()) {
            for (const auto& g : load(src)) {
                Spectrum s;
                if (exact) {
                    const ExactSpectrum e = exact_spectrum(matrix_of(g, matrix_kind(matrix)));
                    if (e.roots.nonreal_count != 0) throw NumericFailure("characteristic polynomial has non-real roots");
                    s = e.spectrum;
                } else {
                    s = spectrum_of(g, matrix_kind(matrix));
                }
                if (tolerance > 0) s = Spectrum::from_values(s.values(), tolerance);
                if (text_output("text"))
                    out << s.to_string(precision) << "\n";
                else
                    out << json{{"graph", g.name()}, {"matrix", matrix}, {"spectrum", spectrum_json(s)}}.dump() << "\n";
            }
            return kExitOk;
        }
        if (energy_cmd->parsed()) {
            for (const auto& g : load(src)) {
                const EnergyReport e = energy(g);
                if (text_output("text"))
                    out << format_real(e.energy, 8) << "\n";
                else
                    out << json{{"graph", g.name()},
                                {"order", g.order()},
                                {"energy", e.energy},
                                {"hyperenergetic", is_hyperenergetic(g)}}
                               .dump()
                        << "\n";
            }
            return kExitOk;
        }
        if (rho_cmd->parsed()) {
            for (const auto& g : load(src)) {
                const Graph h = iterated_line_graph(g, k).graph;
                json rec = rho_json(check_rho(h));
                rec["graph"] = g.name();
                rec["k"] = k;
                rec["order"] = h.order();
                out << rec.dump() << "\n";
            }
            return kExitOk;
        }
        if (quotient_cmd->parsed()) {
            for (const auto& g : load(src)) {
                const Partition pi = partition.empty() ? coarsest_equitable_partition(g) : parse_partition(partition);
                const QuotientSet q = quotient_matrices(g, pi);
                json rec{{"graph", g.name()},
                         {"partition", q.partition.blocks},
                         {"block_sizes", q.block_sizes},
                         {"adjacency", matrix_json(q.adjacency)},
                         {"laplacian", matrix_json(q.laplacian)},
                         {"signless_laplacian", matrix_json(q.signless_laplacian)},
                         {"complement_adjacency", matrix_json(q.complement_adjacency)},
                         {"symmetric_variants", q.adjacency_h.has_value()},
                         {"spectra",
                          {{"adjacency", exact_json(q.adjacency)},
                           {"laplacian", exact_json(q.laplacian)},
                           {"signless_laplacian", exact_json(q.signless_laplacian)}}}};
                out << rec.dump() << "\n";
            }
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            SuiteOptions options;
            options.seed = seed;
            options.threads = census_threads();
            std::vector<TheoremReport> reports;
            if (!src.graph.empty() || !src.file.empty()) {
                if (checks.empty()) throw UsageError("--graph needs at least one --check");
                for (const auto& id : checks) {
                    const SuiteOperation* op = find_operation(id);
                    if (!op) throw UsageError("unknown check '" + id + "'");
                    if (!op->run_on) throw UsageError("check '" + id + "' does not take a graph");
                    for (const auto& g : load(src)) reports.push_back(op->run_on(g, level.value_or(default_depth(g))));
                }
            } else if (all || !checks.empty()) {
                for (const auto& id : checks)
                    if (!find_operation(id)) throw UsageError("unknown check '" + id + "'");
                reports = run_suite(all ? std::vector<std::string>{} : checks, options);
            } else {
                throw UsageError("verify needs --all or --check");
            }
            bool failed = false;
            for (const auto& r : reports) {
                out << r.to_json().dump() << "\n";
                failed = failed || r.is_discrepancy();
            }
            return failed ? kExitFailure : kExitOk;
        }
        if (census_cmd->parsed()) {
            if (connected_only) {
                const auto graphs = enumerate_connected(census_order);
                for (const auto& g : graphs) out << g.name() << "\n";
                out << json{{"order", census_order}, {"count", graphs.size()}}.dump() << "\n";
                return kExitOk;
            }
            const auto graphs = find_line_rho_graphs(census_order);
            for (const auto& g : graphs) out << g.name() << "\n";
            json named = json::array();
            for (const auto& m : named_matches(graphs))
                named.push_back({{"name", m.name}, {"graph6", m.code}, {"found", m.found}});
            json summary{{"order", census_order}, {"count", graphs.size()}, {"named_matches", named}};
            if (census_order == 7) {
                const ComplementWitnesses w = min_order_connected_complement();
                json witnesses = json::array();
                for (const auto& g : w.witnesses) witnesses.push_back(g.name());
                summary["least_connected_complement_order"] = w.order;
                summary["connected_complement_witnesses"] = witnesses;
            }
            out << summary.dump() << "\n";
            return kExitOk;
        }
        if (pair_cmd->parsed()) {
            const EquiPair p = equi_pair(pair_order, pair_degree);
            out << to_graph6(p.first) << "\n" << to_graph6(p.second) << "\n";
            out << json{{"order", pair_order},
                        {"degree", pair_degree},
                        {"parts", {p.part_first.name(), p.part_second.name()}},
                        {"graphs", {p.first.name(), p.second.name()}},
                        {"certificate", p.certificate.to_json()}}
                       .dump()
                << "\n";
            return p.certificate.pass ? kExitOk : kExitFailure;
        }
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NumericFailure& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const ExactnessError& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace srho::cli
