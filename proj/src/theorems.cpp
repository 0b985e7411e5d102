#include "srho/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <string>

#include "srho/census.hpp"
#include "srho/errors.hpp"
#include "srho/families.hpp"
#include "srho/graph6.hpp"
#include "srho/polynomial.hpp"
#include "srho/quotient.hpp"
#include "srho/spectral.hpp"
#include "srho/structure.hpp"
#include "srho/transforms.hpp"

namespace srho {

namespace {

using nlohmann::json;

std::string describe(const Graph& g) { return g.name().empty() ? to_graph6(g) : g.name(); }

double energy_tol(std::size_t n) { return kEnergyTolerancePerVertex * static_cast<double>(std::max<std::size_t>(1, n)); }

std::string at(const std::string& what, std::size_t k) { return what + "@k=" + std::to_string(k); }

TheoremReport start(std::string id, std::vector<std::string> inputs) {
    TheoremReport r;
    r.id = std::move(id);
    r.inputs = std::move(inputs);
    return r;
}

TheoremReport finish(TheoremReport r) {
    r.finalize();
    return r;
}

TheoremReport inapplicable(TheoremReport r, const std::string& why) {
    r.hypothesis_check = false;
    r.note("hypothesis fails: " + why);
    return finish(std::move(r));
}

// graphs[0] = g, graphs[k] = L^k(g); stops before a level above the order cap.
std::vector<Graph> line_chain(const Graph& g, std::size_t k_max, TheoremReport& r) {
    std::vector<Graph> chain{g};
    for (std::size_t k = 1; k <= k_max; ++k) {
        const Graph& prev = chain.back();
        if (prev.size() > kSuiteOrderCap) {
            r.truncated = true;
            r.note("level " + std::to_string(k) + " not built: order " + std::to_string(prev.size()) +
                   " exceeds " + std::to_string(kSuiteOrderCap));
            break;
        }
        chain.push_back(line_graph(prev));
    }
    return chain;
}

struct LevelFacts {
    std::size_t k = 0;
    std::size_t order = 0;
    std::size_t size = 0;
    std::size_t prev_order = 0;
    std::size_t prev_size = 0;
    Spectrum spectrum;
    RhoVerdict rho;
    double energy = 0.0;
    long long expected_minus2 = 0;

    long long excess() const { return static_cast<long long>(prev_size) - static_cast<long long>(prev_order); }
    bool multiplicity_matches() const {
        return static_cast<long long>(rho.multiplicity_of_minus2) == expected_minus2;
    }
    // Property rho with -2 multiplicity m_{k-1} - n_{k-1}.
    bool qualifies() const {
        return rho.holds && !rho.vacuous && static_cast<long long>(rho.multiplicity_of_minus2) == excess();
    }
};

LevelFacts analyze(const Graph& prev, const Graph& cur, std::size_t k) {
    LevelFacts f;
    f.k = k;
    f.order = cur.order();
    f.size = cur.size();
    f.prev_order = prev.order();
    f.prev_size = prev.size();
    f.spectrum = spectrum_of(cur);
    f.rho = rho_of(f.spectrum);
    f.energy = energy_of(f.spectrum).energy;
    f.expected_minus2 = expected_line_minus2(prev);
    return f;
}

json level_json(const LevelFacts& f) {
    return {{"k", f.k},
            {"order", f.order},
            {"size", f.size},
            {"rho", f.rho.holds},
            {"vacuous", f.rho.vacuous},
            {"negative_count", f.rho.negative_count},
            {"minus2_multiplicity", f.rho.multiplicity_of_minus2},
            {"worst_deviation", f.rho.worst_deviation},
            {"energy", f.energy}};
}

void assert_rho(TheoremReport& r, const LevelFacts& f, const std::string& label, double predicted_energy) {
    r.add_check("rho@" + label, f.rho.holds && !f.rho.vacuous);
    r.add_check("minus2-multiplicity@" + label, f.multiplicity_matches());
    r.add_residual("energy@" + label, std::abs(f.energy - predicted_energy), energy_tol(f.order));
    json level = level_json(f);
    level["label"] = label;
    r.computed["levels"].push_back(std::move(level));
    r.predicted["levels"].push_back(
        {{"label", label}, {"minus2_multiplicity", f.expected_minus2}, {"energy", predicted_energy}});
}

double order_gap(const LevelFacts& f) {
    return static_cast<double>(f.order) - static_cast<double>(f.prev_order);
}

// Property rho on L^k(g) for k in [k_from, k_max], energy 4 * (-2 multiplicity rule).
void rho_levels(TheoremReport& r, const Graph& g, std::size_t k_from, std::size_t k_max) {
    const std::vector<Graph> chain = line_chain(g, k_max, r);
    for (std::size_t k = std::max<std::size_t>(k_from, 1); k < chain.size(); ++k) {
        const LevelFacts f = analyze(chain[k - 1], chain[k], k);
        assert_rho(r, f, "k=" + std::to_string(k), 4.0 * static_cast<double>(f.expected_minus2));
    }
}

// Energy claimed in the form 4(n_k - n_{k-1}).
void rho_levels_order_gap(TheoremReport& r, const Graph& g, std::size_t k_from, std::size_t k_max) {
    const std::vector<Graph> chain = line_chain(g, k_max, r);
    for (std::size_t k = std::max<std::size_t>(k_from, 1); k < chain.size(); ++k) {
        const LevelFacts f = analyze(chain[k - 1], chain[k], k);
        assert_rho(r, f, "k=" + std::to_string(k), 4.0 * order_gap(f));
    }
}

std::optional<std::size_t> regular_degree(const Graph& g) { return structure_queries(g).regular_degree; }

std::string join_name(const Graph& pattern, const std::vector<Graph>& parts) {
    std::string out = describe(pattern) + "[";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + describe(parts[i]);
    return out + "]";
}

// Connected pattern of order >= 2 with parts r_i-regular, r_i >= min_degree.
std::optional<std::string> join_hypothesis(const Graph& pattern, const std::vector<Graph>& parts,
                                           std::size_t min_degree) {
    if (parts.size() != pattern.order())
        throw ArityError("join needs " + std::to_string(pattern.order()) + " parts, got " +
                         std::to_string(parts.size()));
    if (pattern.order() < 2) return "pattern has fewer than 2 vertices";
    if (!is_connected(pattern)) return "pattern is disconnected";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto r = regular_degree(parts[i]);
        if (!r) return "part " + std::to_string(i) + " is not regular";
        if (*r < min_degree)
            return "part " + std::to_string(i) + " has degree " + std::to_string(*r) + " < " +
                   std::to_string(min_degree);
    }
    return std::nullopt;
}

double least_exact_root(const DenseMatrix& m) {
    const ExactSpectrum s = exact_spectrum(m);
    if (s.roots.nonreal_count != 0 || s.spectrum.empty()) return std::nan("");
    return s.spectrum.smallest();
}

std::vector<double> sorted_desc(std::vector<double> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

}  // namespace

TheoremReport check_iterated_rho_edge_degree(const Graph& g, std::size_t k_max) {
    TheoremReport r = start("iterated-rho-edge-degree", {describe(g)});
    const StructureInfo s = structure_queries(g);
    r.computed["min_edge_degree_sum"] = s.min_edge_degree_sum ? json(*s.min_edge_degree_sum) : json(nullptr);
    if (!s.min_edge_degree_sum || *s.min_edge_degree_sum < 6)
        return inapplicable(std::move(r), "some edge uv has d_u + d_v < 6 or there are no edges");
    r.hypothesis_check = true;
    rho_levels_order_gap(r, g, 2, k_max);
    return finish(std::move(r));
}

TheoremReport check_iterated_rho_min_degree(const Graph& g, std::size_t k_max) {
    TheoremReport r = start("iterated-rho-min-degree", {describe(g)});
    const StructureInfo s = structure_queries(g);
    r.computed["min_degree"] = s.min_degree;
    if (g.order() == 0 || s.min_degree < 3) return inapplicable(std::move(r), "minimum degree below 3");
    r.hypothesis_check = true;
    rho_levels_order_gap(r, g, 2, k_max);
    return finish(std::move(r));
}

TheoremReport check_hjoin_line_rho(const Graph& pattern, const std::vector<Graph>& parts, std::size_t k_max,
                                   std::span<const Edge> extra_edges) {
    TheoremReport r = start("hjoin-line-rho", {join_name(pattern, parts)});
    if (auto why = join_hypothesis(pattern, parts, 1)) return inapplicable(std::move(r), *why);
    r.hypothesis_check = true;
    const HJoin join = h_join(pattern, parts);
    const QuotientSet q = quotient_matrices(join.graph, join.blocks, SymmetricVariants::required);
    const double qmin = least_exact_root(q.signless_laplacian);
    r.computed["quotient_q_min"] = qmin;
    r.predicted["quotient_q_min_at_least"] = 2.0;
    r.add_residual("quotient-q-min-shortfall", std::max(0.0, 2.0 - qmin), 1e-8);
    rho_levels(r, join.graph, 1, k_max);

    if (!extra_edges.empty()) {
        const Graph bigger = add_edges(join.graph, extra_edges);
        const LevelFacts f = analyze(bigger, line_graph(bigger), 1);
        r.computed["supergraph"] = {{"order", bigger.order()}, {"size", bigger.size()}};
        assert_rho(r, f, "supergraph",
                   4.0 * (static_cast<double>(bigger.size()) - static_cast<double>(bigger.order())));
    }
    return finish(std::move(r));
}

TheoremReport check_vertex_deletion_rho(const Graph& pattern, const std::vector<Graph>& parts,
                                        std::size_t delete_count, std::size_t k_max) {
    TheoremReport r = start("vertex-deletion-rho", {join_name(pattern, parts), "s=" + std::to_string(delete_count)});
    if (delete_count < 1) throw ParameterError("delete count s must be at least 1");
    if (auto why = join_hypothesis(pattern, parts, 2)) return inapplicable(std::move(r), *why);
    if (delete_count >= 2) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const std::size_t deg = *regular_degree(parts[i]);
            if (deg < delete_count || parts[i].order() < 2 * delete_count)
                return inapplicable(std::move(r), "part " + std::to_string(i) + " needs r_i >= s and n_i >= 2s");
        }
    }
    r.hypothesis_check = true;
    const HJoin join = h_join(pattern, parts);

    const std::size_t removals = delete_count == 1 ? 1 : 2 * (delete_count - 1);
    std::vector<Vertex> removed;
    const std::size_t blocks = join.blocks.blocks.size();
    for (std::size_t t = 0; removed.size() < removals; ++t) {
        const auto& block = join.blocks.blocks[t % blocks];
        if (t / blocks < block.size()) removed.push_back(block[t / blocks]);
    }
    r.computed["deleted_vertices"] = removed;
    const Graph reduced = delete_vertices(join.graph, removed);
    rho_levels(r, reduced, 1, k_max);

    if (delete_count == 1 && join.graph.order() <= 12) {
        std::vector<std::size_t> failures;
        for (Vertex v = 0; v < join.graph.order(); ++v) {
            const Vertex single[] = {v};
            const RhoVerdict verdict = check_rho(line_graph(delete_vertices(join.graph, single)));
            if (!verdict.holds || verdict.vacuous) failures.push_back(v);
        }
        r.computed["single_deletion_failures"] = failures;
        r.add_check("rho@every-single-deletion", failures.empty());
    }
    return finish(std::move(r));
}

TheoremReport check_path_join_rho(std::size_t n, std::size_t m, std::size_t k_max) {
    TheoremReport r = start("path-join-rho", {"K2[P" + std::to_string(n) + ",P" + std::to_string(m) + "]"});
    if (n < 3 || m < 3) return inapplicable(std::move(r), "both paths need at least 3 vertices");
    r.hypothesis_check = true;
    const std::vector<Graph> paths{path_graph(n), path_graph(m)};
    const Graph joined = h_join(complete_graph(2), paths).graph;
    const std::vector<Graph> cycles{cycle_graph(n + 1), cycle_graph(m + 1)};
    const Vertex cut[] = {0, n + 1};
    r.add_check("equals-cycle-join-minus-two", delete_vertices(h_join(complete_graph(2), cycles).graph, cut) == joined);
    rho_levels(r, joined, 1, k_max);
    return finish(std::move(r));
}

TheoremReport check_kan_rho(std::size_t n, std::size_t p, std::size_t k_max) {
    TheoremReport r = start("kan-rho", {"kanp(" + std::to_string(n) + "," + std::to_string(p) + ")"});
    if (n < 6 || p < 1 || p > n - 4) return inapplicable(std::move(r), "needs n >= 6 and 1 <= p <= n-4");
    r.hypothesis_check = true;

    const Graph base = ka_graph(n, n - 4);
    Partition pi;
    pi.blocks = {{0}, {n - 3, n - 2, n - 1}, {}};
    for (Vertex v = 1; v <= n - 4; ++v) pi.blocks[2].push_back(v);
    const QuotientSet q = quotient_matrices(base, pi);
    const double nd = static_cast<double>(n);
    const DenseMatrix expected{{3, 3, 0}, {1, nd + 1, nd - 4}, {0, 3, 2 * nd - 7}};
    r.predicted["quotient_matrix"] = matrix_json(expected);
    r.computed["quotient_matrix"] = matrix_json(q.signless_laplacian);
    r.add_check("quotient-matrix", q.signless_laplacian == expected);

    if (n <= kCanonicalFormCap) {
        const std::vector<Graph> parts{complete_graph(1), complete_graph(3), complete_graph(n - 4)};
        r.add_check("path-join-isomorphic",
                    canonical_form(h_join(path_graph(3), parts).graph) == canonical_form(base));
    }

    const ExactSpectrum exact = exact_spectrum(q.signless_laplacian);
    const double root = std::sqrt(4.0 * nd * (nd - 7.0) + 73.0);
    const Spectrum closed = Spectrum::from_values({nd - 0.5 + 0.5 * root, nd - 2.0, nd - 0.5 - 0.5 * root});
    r.predicted["quotient_spectrum"] = spectrum_json(closed);
    r.computed["quotient_spectrum"] = spectrum_json(exact.spectrum);
    r.computed["quotient_polynomial"] = exact.polynomial.to_string();
    r.add_check("quotient-roots-real", exact.roots.nonreal_count == 0);
    r.add_residual("quotient-spectrum", closed.max_deviation(exact.spectrum), 1e-8);

    SpectrumAssembly full;
    full.add(nd - 2.0, 2);
    full.add(nd - 3.0, static_cast<long long>(n) - 5);
    full.add_all(exact.spectrum.values());
    const Spectrum predicted_q = full.finish();
    const Spectrum computed_q = spectrum_of(base, MatrixKind::signless_laplacian);
    r.predicted["signless_spectrum"] = spectrum_json(predicted_q);
    r.computed["signless_spectrum"] = spectrum_json(computed_q);
    r.add_check("signless-multiplicities", predicted_q.matches(computed_q, 1e-8));
    r.add_residual("signless-spectrum", predicted_q.max_deviation(computed_q), 1e-8);

    rho_levels(r, ka_graph(n, p), 1, k_max);
    return finish(std::move(r));
}

TheoremReport check_min_deg4_rho(const Graph& g, std::size_t k_max) {
    TheoremReport r = start("min-degree4-rho", {describe(g)});
    if (g.order() == 0) return inapplicable(std::move(r), "null graph");
    const double lmin = spectrum_of(g).smallest();
    const StructureInfo s = structure_queries(g);
    r.computed["least_eigenvalue"] = lmin;
    r.computed["min_degree"] = s.min_degree;
    if (lmin < -2.0 - 1e-8) return inapplicable(std::move(r), "least eigenvalue below -2");
    if (s.min_degree < 4) return inapplicable(std::move(r), "minimum degree below 4");
    r.hypothesis_check = true;
    rho_levels(r, g, 1, k_max);
    return finish(std::move(r));
}

TheoremReport check_das_iterated(const Graph& g, std::size_t k_max) {
    TheoremReport r = start("dense-iterated-rho", {describe(g)});
    const StructureInfo s = structure_queries(g);
    r.computed["min_degree"] = s.min_degree;
    if (g.order() <= 2 || 2 * s.min_degree < g.order() + 2)
        return inapplicable(std::move(r), "needs n_0 > 2 and minimum degree >= n_0/2 + 1");
    r.hypothesis_check = true;
    rho_levels_order_gap(r, g, 1, k_max);
    return finish(std::move(r));
}

namespace {

struct PrintedTuran {
    std::vector<double> spectrum;
    double q_min;
};

std::optional<PrintedTuran> printed_turan(std::size_t r, std::size_t n) {
    if (r == 3 && n == 6) return PrintedTuran{{8, 4, 4, 4, 2, 2}, 2};
    if (r == 3 && n == 7) return PrintedTuran{{9.2745, 5, 5, 4, 4, 3, 1.7251}, 1.7251};
    if (r == 3 && n == 8) return PrintedTuran{{10.6056, 6, 5, 5, 5, 5, 3.3944, 2}, 2};
    if (r == 4 && n == 5) return PrintedTuran{{7.3723, 3, 3, 3, 1.6277}, 1.6277};
    return std::nullopt;
}

}  // namespace

TheoremReport check_turan_rho(std::size_t r_parts, std::size_t n, std::size_t k_max) {
    TheoremReport r = start("turan-rho", {"turan(" + std::to_string(n) + "," + std::to_string(r_parts) + ")"});
    if (r_parts < 1 || n < r_parts) throw ParameterError("turan(n,r) requires n >= r >= 1");
    const bool general = (r_parts == 3 && n >= 6 && n != 7) || (r_parts == 4 && n != 5) || r_parts >= 5;
    const auto printed = printed_turan(r_parts, n);
    if (!general && !printed) return inapplicable(std::move(r), "(r, n) outside the admissible range");
    r.hypothesis_check = true;

    const Graph t = turan_graph(n, r_parts);
    const Spectrum sq = spectrum_of(t, MatrixKind::signless_laplacian);
    const double qmin = sq.smallest();
    const double lower = static_cast<double>((r_parts - 2) * (n / r_parts));
    const double upper = (1.0 - 1.0 / static_cast<double>(r_parts)) * static_cast<double>(n);
    r.computed["signless_spectrum"] = spectrum_json(sq);
    r.computed["q_min"] = qmin;
    r.computed["q_min_bounds"] = {{"strict_lower", lower}, {"upper", upper}, {"lower_holds", lower < qmin}};

    if (printed) {
        const Spectrum ps = Spectrum::from_values(printed->spectrum);
        r.predicted["signless_spectrum"] = spectrum_json(ps);
        r.predicted["q_min"] = printed->q_min;
        r.add_check("printed-multiplicities", ps.matches(sq, kPrintedTolerance));
        r.add_residual("printed-spectrum", ps.max_deviation(sq), kPrintedTolerance);
        r.add_residual("printed-q-min", std::abs(qmin - printed->q_min), kPrintedTolerance);
        r.add_check("strict-lower-bound-fails", !(lower < qmin - 1e-9));
        r.note("strict lower bound (r-2)floor(n/r) < q_min fails here, as printed");
    }
    if (general) {
        rho_levels(r, t, 1, k_max);
    } else {
        const RhoVerdict v = check_rho(line_graph(t));
        r.computed["line_rho_not_claimed"] = {{"holds", v.holds}, {"worst_deviation", v.worst_deviation}};
        r.note("outside the admissible range: line-graph rho recorded, not asserted");
    }
    return finish(std::move(r));
}

TheoremReport check_regular_complement_rho(const Graph& g, std::size_t k_max) {
    TheoremReport r = start("regular-complement-rho", {describe(g)});
    const auto deg = regular_degree(g);
    const std::size_t n = g.order();
    if (!deg) return inapplicable(std::move(r), "graph is not regular");
    if (*deg < 3 || 3 * *deg > n - 1) return inapplicable(std::move(r), "needs 3 <= r <= (n-1)/3");
    r.hypothesis_check = true;
    const double nd = static_cast<double>(n), rd = static_cast<double>(*deg);

    const Graph gc = complement(g);
    SpectrumAssembly rest;
    rest.add_all(spectrum_of(g).values());
    rest.remove(rd);
    SpectrumAssembly closed;
    closed.add(2.0 * (nd - 1.0) - 2.0 * rd - 2.0);
    closed.add_all(rest.finish().values(), nd - rd - 4.0, -1.0);
    closed.add(-2.0, static_cast<long long>(n * (n - *deg - 3) / 2));
    const Spectrum predicted = closed.finish();
    const Spectrum computed = spectrum_of(line_graph(gc));
    r.predicted["line_of_complement_spectrum"] = spectrum_json(predicted);
    r.computed["line_of_complement_spectrum"] = spectrum_json(computed);
    r.add_residual("closed-form-spectrum", predicted.max_deviation(computed), 1e-8);

    rho_levels(r, gc, 1, k_max);
    return finish(std::move(r));
}

TheoremReport check_complement_line_regular_rho(const Graph& g, std::size_t k_max) {
    TheoremReport r = start("complement-line-regular-rho", {describe(g)});
    const auto deg = regular_degree(g);
    const std::size_t n = g.order();
    if (!deg) return inapplicable(std::move(r), "graph is not regular");
    if (*deg < 1 || n < 8) return inapplicable(std::move(r), "needs r >= 1 and n >= 8");
    r.hypothesis_check = true;
    const long long nl = static_cast<long long>(n), rl = static_cast<long long>(*deg);
    const double nd = static_cast<double>(n), rd = static_cast<double>(*deg);

    const Graph h = complement(line_graph(g));
    const Spectrum computed = spectrum_of(line_graph(h));
    r.computed["line_spectrum"] = spectrum_json(computed);
    try {
        SpectrumAssembly rest;
        rest.add_all(spectrum_of(g).values());
        rest.remove(rd);
        SpectrumAssembly closed;
        closed.add(rd * (nd - 4.0));
        closed.add((nd - 4.0) * rd / 2.0, nl * (rl - 2) / 2);
        closed.add_all(rest.finish().values(), (nd - 6.0) * rd / 2.0, -1.0);
        closed.add(-2.0, nl * rl * (nl * rl - 4 * rl - 2) / 8);
        const Spectrum predicted = closed.finish();
        r.predicted["line_spectrum"] = spectrum_json(predicted);
        r.add_residual("closed-form-spectrum", predicted.max_deviation(computed), 1e-8);
    } catch (const NumericFailure& e) {
        r.add_check("closed-form-assembles", false);
        r.note(e.what());
    }
    rho_levels(r, h, 1, k_max);
    return finish(std::move(r));
}

TheoremReport check_hyperenergetic_iterated(const Graph& g, std::size_t k_max) {
    TheoremReport r = start("hyperenergetic-iterated", {describe(g)});
    const StructureInfo s = structure_queries(g);
    if (!s.min_edge_degree_sum || *s.min_edge_degree_sum < 6)
        return inapplicable(std::move(r), "some edge uv has d_u + d_v < 6 or there are no edges");
    r.hypothesis_check = true;
    const std::vector<Graph> chain = line_chain(g, k_max, r);
    for (std::size_t k = 2; k < chain.size(); ++k) {
        const double e = energy(chain[k]).energy;
        const double threshold = 2.0 * (static_cast<double>(chain[k].order()) - 1.0);
        r.computed["levels"].push_back({{"k", k}, {"order", chain[k].order()}, {"energy", e}, {"threshold", threshold}});
        r.add_check(at("hyperenergetic", k), e > threshold + 1e-9);
    }
    return finish(std::move(r));
}

TheoremReport check_complement_structure(const Graph& g, std::size_t k_max) {
    TheoremReport r = start("complement-structure", {describe(g)});
    const std::vector<Graph> chain = line_chain(g, k_max, r);
    bool any = false;
    for (std::size_t k = 1; k < chain.size(); ++k) {
        const LevelFacts f = analyze(chain[k - 1], chain[k], k);
        if (!f.qualifies()) {
            r.note("level " + std::to_string(k) + " skipped: line graph lacks rho with multiplicity m-n");
            continue;
        }
        any = true;
        const Spectrum sc = spectrum_of(complement(chain[k]));
        const double lam1 = sc.largest();
        const double ec = energy_of(sc).energy;
        std::vector<double> positives;
        for (double x : sc.values())
            if (x > sc.tolerance()) positives.push_back(x);
        double unit_gap = 0.0;
        for (std::size_t i = 1; i < positives.size(); ++i) unit_gap = std::max(unit_gap, std::abs(positives[i] - 1.0));

        const long long excess = f.excess();
        r.predicted["levels"].push_back({{"k", k},
                                         {"positive_count", excess + 1},
                                         {"unit_multiplicity", excess},
                                         {"complement_energy", 2.0 * lam1 + f.energy / 2.0}});
        r.computed["levels"].push_back({{"k", k},
                                        {"order", f.order},
                                        {"spectral_radius", lam1},
                                        {"positive_count", positives.size()},
                                        {"complement_energy", ec},
                                        {"line_energy", f.energy}});
        r.add_check(at("positive-count", k), static_cast<long long>(positives.size()) == excess + 1);
        r.add_residual(at("unit-positive-values", k), unit_gap, 1e-6);
        r.add_check(at("minus2-to-one-pairing", k),
                    sc.multiplicity_near(1.0, 1e-6) >= f.rho.multiplicity_of_minus2);
        r.add_residual(at("energy-relation", k), std::abs(ec - (2.0 * lam1 + f.energy / 2.0)), energy_tol(f.order));
        if (std::abs(lam1 - 1.0) <= 1e-6) r.note("level " + std::to_string(k) + ": spectral radius coincides with 1");
    }
    if (!any) return inapplicable(std::move(r), "no level has rho with -2 multiplicity m-n");
    r.hypothesis_check = true;
    return finish(std::move(r));
}

TheoremReport check_equienergetic_complement_iff(const Graph& g, std::size_t k, std::span<const Graph> family) {
    std::vector<std::string> inputs{describe(g), "k=" + std::to_string(k)};
    for (const auto& h : family) inputs.push_back(describe(h));
    TheoremReport r = start("equienergetic-complement-iff", std::move(inputs));
    if (k < 1) throw ParameterError("level k must be at least 1");

    struct Side {
        LevelFacts facts;
        double radius = 0.0;
        double complement_energy = 0.0;
    };
    auto side_of = [&r, k](const Graph& x) -> std::optional<Side> {
        const std::vector<Graph> chain = line_chain(x, k, r);
        if (chain.size() <= k) return std::nullopt;
        Side s;
        s.facts = analyze(chain[k - 1], chain[k], k);
        if (!s.facts.qualifies()) return std::nullopt;
        const Spectrum sc = spectrum_of(complement(chain[k]));
        s.radius = sc.largest();
        s.complement_energy = energy_of(sc).energy;
        return s;
    };

    const auto main = side_of(g);
    if (!main) return inapplicable(std::move(r), "level k line graph lacks rho with -2 multiplicity m-n");
    r.hypothesis_check = true;
    const double tol = energy_tol(main->facts.order);
    const double energy_gap = std::abs(main->facts.energy - main->complement_energy);
    const double radius_gap = std::abs(static_cast<double>(main->facts.rho.negative_count) - main->radius);
    r.computed["line_energy"] = main->facts.energy;
    r.computed["complement_energy"] = main->complement_energy;
    r.computed["negative_count"] = main->facts.rho.negative_count;
    r.computed["complement_spectral_radius"] = main->radius;
    r.computed["equienergetic"] = energy_gap <= tol;
    r.computed["radius_equals_negative_count"] = radius_gap <= tol;
    r.add_check("iff-sides-agree", (energy_gap <= tol) == (radius_gap <= tol));

    for (const auto& h : family) {
        const auto other = side_of(h);
        if (!other) {
            r.note(describe(h) + " skipped: level k lacks rho with multiplicity m-n");
            continue;
        }
        if (other->facts.prev_order != main->facts.prev_order || other->facts.prev_size != main->facts.prev_size) {
            r.note(describe(h) + " skipped: different (n_{k-1}, m_{k-1})");
            continue;
        }
        const bool same_energy = std::abs(other->complement_energy - main->complement_energy) <= tol;
        const bool same_radius = std::abs(other->radius - main->radius) <= tol;
        r.computed["family"].push_back({{"graph", describe(h)},
                                        {"complement_energy", other->complement_energy},
                                        {"complement_spectral_radius", other->radius}});
        r.add_check("radius-iff-energy:" + describe(h), same_energy == same_radius);
    }
    return finish(std::move(r));
}

TheoremReport check_complement_hyperenergetic(const Graph& g, std::size_t k_max) {
    TheoremReport r = start("complement-hyperenergetic", {describe(g)});
    const StructureInfo s = structure_queries(g);
    if (!s.min_edge_degree_sum || *s.min_edge_degree_sum < 6)
        return inapplicable(std::move(r), "some edge uv has d_u + d_v < 6 or there are no edges");
    const std::vector<Graph> chain = line_chain(g, k_max, r);
    bool any = false;
    for (std::size_t k = 2; k < chain.size(); ++k) {
        const double lam1 = spectrum_of(chain[k]).largest();
        const double limit = (static_cast<double>(chain[k].order()) - 1.0) / 2.0;
        json level{{"k", k}, {"order", chain[k].order()}, {"spectral_radius", lam1}, {"limit", limit}};
        if (lam1 > limit + 1e-9) {
            level["qualifies"] = false;
            r.computed["levels"].push_back(std::move(level));
            r.note("level " + std::to_string(k) + " skipped: spectral radius exceeds (n_k - 1)/2");
            continue;
        }
        any = true;
        const Graph c = complement(chain[k]);
        const double e = energy(c).energy;
        level["qualifies"] = true;
        level["complement_energy"] = e;
        level["threshold"] = 2.0 * (static_cast<double>(c.order()) - 1.0);
        r.computed["levels"].push_back(std::move(level));
        r.add_check(at("complement-hyperenergetic", k), e > 2.0 * (static_cast<double>(c.order()) - 1.0) + 1e-9);
    }
    if (!any) return inapplicable(std::move(r), "no level k >= 2 has spectral radius <= (n_k - 1)/2");
    r.hypothesis_check = true;
    return finish(std::move(r));
}

TheoremReport check_ebd_energies(const Graph& g, std::size_t k) {
    TheoremReport r = start("ebd-energies", {describe(g), "k=" + std::to_string(k)});
    if (k < 1) throw ParameterError("level k must be at least 1");
    const std::vector<Graph> chain = line_chain(g, k, r);
    if (chain.size() <= k) return inapplicable(std::move(r), "level k not built");
    const LevelFacts f = analyze(chain[k - 1], chain[k], k);
    if (!f.qualifies()) return inapplicable(std::move(r), "level k line graph lacks rho with -2 multiplicity m-n");
    r.hypothesis_check = true;

    const Graph& h = chain[k];
    const Graph c = complement(h);
    const Spectrum sh = f.spectrum;
    const Spectrum sc = spectrum_of(c);
    const double lam1 = sc.largest();
    const double m = static_cast<double>(f.prev_size), n = static_cast<double>(f.prev_order);
    const double tol = energy_tol(2 * h.order());

    const Spectrum ebd_h = spectrum_of(extended_bipartite_double(h));
    const Spectrum ebd_c = spectrum_of(extended_bipartite_double(c));
    const double e1 = energy_of(ebd_h).energy, e2 = energy_of(ebd_c).energy;
    const double p1 = 2.0 * (3.0 * m - 2.0 * n);
    const double p2 = 2.0 * (2.0 * (lam1 + 1.0) + 3.0 * m - 4.0 * n);
    r.predicted["ebd_line_energy"] = p1;
    r.predicted["ebd_complement_energy"] = p2;
    r.computed["ebd_line_energy"] = e1;
    r.computed["ebd_complement_energy"] = e2;
    r.add_residual("ebd-line-energy", std::abs(e1 - p1), tol);
    r.add_residual("ebd-complement-energy", std::abs(e2 - p2), tol);

    const std::size_t complement_negatives = rho_of(sc).negative_count;
    r.computed["complement_negative_count"] = complement_negatives;
    r.computed["complement_spectral_radius"] = lam1;
    const bool equi = std::abs(e1 - e2) <= tol;
    const bool radius_match = std::abs(lam1 - static_cast<double>(complement_negatives)) <= tol;
    r.add_check("ebd-iff-sides-agree", equi == radius_match);

    auto law = [](const Spectrum& s) {
        std::vector<double> v;
        for (double x : s.values()) {
            v.push_back(-x - 1.0);
            v.push_back(x + 1.0);
        }
        return Spectrum::from_values(sorted_desc(std::move(v)));
    };
    r.add_residual("ebd-spectrum-law-line", law(sh).max_deviation(ebd_h), 1e-8);
    r.add_residual("ebd-spectrum-law-complement", law(sc).max_deviation(ebd_c), 1e-8);
    return finish(std::move(r));
}

TheoremReport check_independence_bounds(const Graph& g, std::size_t k) {
    TheoremReport r = start("independence-bounds", {describe(g), "k=" + std::to_string(k)});
    if (k < 1) throw ParameterError("level k must be at least 1");
    const std::vector<Graph> chain = line_chain(g, k, r);
    if (chain.size() <= k) return inapplicable(std::move(r), "level k not built");
    const LevelFacts f = analyze(chain[k - 1], chain[k], k);
    if (!f.rho.holds || f.rho.vacuous) return inapplicable(std::move(r), "level k line graph lacks rho");
    r.hypothesis_check = true;
    if (!f.qualifies()) r.note("-2 multiplicity is m-n+1 (bipartite level); bounds checked anyway");

    const Graph& h = chain[k];
    const Graph c = complement(h);
    const std::size_t bound_line = f.prev_order;
    const std::size_t bound_complement = f.rho.negative_count + 1;
    r.predicted["alpha_line_at_most"] = bound_line;
    r.predicted["alpha_complement_at_most"] = bound_complement;
    if (h.order() <= kDefaultIndependenceCap) {
        const std::size_t a1 = independence_number(h), a2 = independence_number(c);
        r.computed["alpha_line"] = a1;
        r.computed["alpha_complement"] = a2;
        r.add_check("alpha-line-bound", a1 <= bound_line);
        r.add_check("alpha-complement-bound", a2 <= bound_complement);
    } else {
        r.note("order above the exact independence cap: bound-check search used");
        r.add_check("alpha-line-bound", independence_at_most(h, bound_line));
        r.add_check("alpha-complement-bound", independence_at_most(c, bound_complement));
    }
    return finish(std::move(r));
}

TheoremReport check_equienergetic_family(std::span<const Graph> graphs, std::size_t k) {
    std::vector<std::string> inputs;
    for (const auto& g : graphs) inputs.push_back(describe(g));
    inputs.push_back("k=" + std::to_string(k));
    TheoremReport r = start("equienergetic-family", std::move(inputs));
    if (k < 1) throw ParameterError("level k must be at least 1");

    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::string, double>>> groups;
    for (const auto& g : graphs) {
        const std::vector<Graph> chain = line_chain(g, k, r);
        if (chain.size() <= k) continue;
        const LevelFacts f = analyze(chain[k - 1], chain[k], k);
        if (!f.qualifies()) {
            r.note(describe(g) + " skipped: level k lacks rho with multiplicity m-n");
            continue;
        }
        groups[{f.prev_order, f.prev_size}].emplace_back(describe(g), f.energy);
    }
    for (const auto& [key, members] : groups) {
        if (members.size() < 2) continue;
        r.hypothesis_check = true;
        double lo = members.front().second, hi = lo;
        json names = json::array();
        for (const auto& [name, e] : members) {
            lo = std::min(lo, e);
            hi = std::max(hi, e);
            names.push_back(name);
        }
        const std::string label = "n=" + std::to_string(key.first) + ",m=" + std::to_string(key.second);
        r.computed["groups"].push_back({{"previous_level", label}, {"graphs", names}, {"energy", hi}});
        r.predicted["groups"].push_back(
            {{"previous_level", label},
             {"energy", 4.0 * (static_cast<double>(key.second) - static_cast<double>(key.first))}});
        r.add_residual("energy-spread:" + label, hi - lo, energy_tol(key.second));
    }
    if (!r.hypothesis_check) r.note("hypothesis fails: no two qualifying graphs share (n_{k-1}, m_{k-1})");
    return finish(std::move(r));
}

TheoremReport check_quotient_spectral_equality(std::size_t count, std::uint64_t seed) {
    TheoremReport r = start("quotient-spectral-equality",
                            {"random joins: " + std::to_string(count), "seed=" + std::to_string(seed)});
    r.hypothesis_check = true;
    r.computed["seed"] = seed;
    std::map<std::string, Residual> worst;
    std::size_t failures = 0, lower_bound_failures = 0, diagonal_failures = 0;
    for (const HJoinSample& sample : random_hjoin_corpus(count, seed)) {
        const HJoin join = sample.build();
        const TheoremReport single = verify_quotient_spectra_equal(join);
        for (const auto& res : single.residuals) {
            auto [it, fresh] = worst.emplace(res.name, res);
            if (!fresh && !(it->second.value >= res.value)) it->second = res;
        }
        if (!single.pass) {
            ++failures;
            r.note("mismatch on " + sample.description);
        }
        const QuotientSet q = quotient_matrices(join.graph, join.blocks, SymmetricVariants::required);
        for (std::size_t i = 0; i < q.block_sizes.size(); ++i)
            if (q.signless_laplacian(i, i) !=
                static_cast<double>(2 * q.internal_degree[i] + q.external_degree[i]))
                ++diagonal_failures;
        if (sample.pattern.order() >= 2 && is_connected(sample.pattern) &&
            least_exact_root(q.signless_laplacian) < 2.0 - 1e-8) {
            ++lower_bound_failures;
            r.note("signless quotient root below 2 on " + sample.description);
        }
    }
    for (const auto& [name, res] : worst) r.residuals.push_back(res);
    r.computed["failures"] = failures;
    r.add_check("every-sample-matches", failures == 0);
    r.add_check("signless-diagonal-identity", diagonal_failures == 0);
    r.add_check("signless-quotient-least-root-at-least-2", lower_bound_failures == 0);
    return finish(std::move(r));
}

TheoremReport check_hjoin_signless_assembly(const Graph& pattern, const std::vector<Graph>& parts) {
    TheoremReport r = start("hjoin-signless-assembly", {join_name(pattern, parts)});
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (!regular_degree(parts[i])) return inapplicable(std::move(r), "part " + std::to_string(i) + " is not regular");
    r.hypothesis_check = true;
    const Spectrum assembled = hjoin_signless_spectrum(pattern, parts);
    const Spectrum direct = spectrum_of(h_join(pattern, parts).graph, MatrixKind::signless_laplacian);
    r.predicted["signless_spectrum"] = spectrum_json(assembled);
    r.computed["signless_spectrum"] = spectrum_json(direct);
    r.add_check("multiplicities", assembled.matches(direct, 1e-8));
    r.add_residual("spectrum", assembled.max_deviation(direct), 1e-8);
    return finish(std::move(r));
}

TheoremReport check_join_equienergetic_pair(const Graph& h1, const Graph& h2) {
    TheoremReport r = start("join-equienergetic-pair", {"K2[K2," + describe(h1) + "]", "K2[K2," + describe(h2) + "]"});
    const auto d1 = regular_degree(h1), d2 = regular_degree(h2);
    if (!d1 || !d2 || *d1 != *d2 || *d1 < 1 || h1.order() != h2.order())
        return inapplicable(std::move(r), "parts must be regular of equal order and equal degree >= 1");
    r.hypothesis_check = true;
    const Graph k2 = complete_graph(2);
    const std::vector<Graph> p1{k2, h1}, p2{k2, h2};
    const CospectralityWitness w = quotient_cospectrality_witness(h_join(k2, p1), h_join(k2, p2));
    r.computed["spectral_gap"] = w.spectral_gap;
    r.computed["line_energy_gap"] = w.line_energy_gap;
    r.computed["complement_line_energy_gap"] = w.complement_line_energy_gap;
    r.add_check("same-quotient", w.same_quotient);
    r.add_check("adjacency-spectra-differ", w.spectral_gap > 1e-3);
    r.add_residual("line-energy-gap", w.line_energy_gap, 1e-6);
    r.add_residual("complement-line-energy-gap", w.complement_line_energy_gap, 1e-6);
    return finish(std::move(r));
}

TheoremReport check_line_rho_census() {
    TheoremReport r = start("line-rho-census", {"connected graphs of order <= 7"});
    r.hypothesis_check = true;
    const std::vector<Graph> found = find_line_rho_graphs(6);
    json codes = json::array();
    std::size_t connected_complements = 0;
    for (const auto& g : found) {
        codes.push_back(g.name());
        if (is_connected(complement(g))) ++connected_complements;
    }
    r.computed["graphs"] = codes;
    r.predicted["count"] = 13;
    r.computed["count"] = found.size();
    r.add_check("thirteen-graphs", found.size() == 13);
    for (const auto& m : named_matches(found)) r.add_check("contains:" + m.name, m.found);
    r.add_check("no-connected-complement-up-to-6", connected_complements == 0);

    const ComplementWitnesses w = min_order_connected_complement();
    json witnesses = json::array();
    for (const auto& g : w.witnesses) witnesses.push_back(g.name());
    r.predicted["least_order"] = 7;
    r.computed["least_order"] = w.order;
    r.computed["witnesses"] = witnesses;
    r.add_check("least-order-7", w.order == 7);
    r.add_check("single-witness", w.witnesses.size() == 1);
    r.note("graphs whose line graph has no negative eigenvalue are excluded");
    return finish(std::move(r));
}

std::size_t default_depth(const Graph& g) { return g.order() <= 12 ? 2 : 1; }

namespace {

Graph named(Graph g, std::string name) { return g.renamed(std::move(name)); }

Graph cycle_pair() { return named(disjoint_union(cycle_graph(3), cycle_graph(3)), "union(cycle(3),cycle(3))"); }

using Reports = std::vector<TheoremReport>;

std::vector<SuiteOperation> make_registry() {
    std::vector<SuiteOperation> ops;
    const Graph k2 = complete_graph(2);

    ops.push_back({"iterated-rho-edge-degree", "rho and energy 4(n_k - n_{k-1}) for L^k, k >= 2, when d_u + d_v >= 6",
                   [](const SuiteOptions&) {
                       return Reports{check_iterated_rho_edge_degree(caterpillar({4, 3, 4}), 2),
                                      check_iterated_rho_edge_degree(complete_graph(4), 3),
                                      check_iterated_rho_edge_degree(petersen_graph(), 2),
                                      check_iterated_rho_edge_degree(path_graph(4), 2)};
                   },
                   check_iterated_rho_edge_degree});
    ops.push_back({"iterated-rho-min-degree", "rho and energy for L^k, k >= 2, when the minimum degree is >= 3",
                   [](const SuiteOptions&) {
                       return Reports{check_iterated_rho_min_degree(petersen_graph(), 2),
                                      check_iterated_rho_min_degree(complete_bipartite(3, 3), 2),
                                      check_iterated_rho_min_degree(hypercube(3), 2),
                                      check_iterated_rho_min_degree(cycle_graph(6), 2)};
                   },
                   check_iterated_rho_min_degree});
    ops.push_back({"hjoin-line-rho", "rho for line graphs of joins with regular parts and of their supergraphs",
                   [k2](const SuiteOptions&) {
                       const Edge extra[] = {{2, 4}, {5, 7}};
                       return Reports{check_hjoin_line_rho(k2, {k2, k2}, 2),
                                      check_hjoin_line_rho(k2, {k2, cycle_graph(6)}, 2, extra),
                                      check_hjoin_line_rho(k2, {cycle_graph(6), cycle_pair()}, 1),
                                      check_hjoin_line_rho(path_graph(3), {k2, cycle_graph(4), complete_graph(3)}, 1),
                                      check_hjoin_line_rho(complete_graph(1), {k2}, 1)};
                   },
                   nullptr});
    ops.push_back({"vertex-deletion-rho", "rho for line graphs of joins with vertices deleted",
                   [k2](const SuiteOptions&) {
                       return Reports{check_vertex_deletion_rho(k2, {cycle_graph(5), cycle_graph(5)}, 1, 1),
                                      check_vertex_deletion_rho(k2, {cycle_graph(6), cycle_graph(6)}, 2, 1),
                                      check_vertex_deletion_rho(k2, {cycle_graph(6), complete_graph(4)}, 1, 2),
                                      check_vertex_deletion_rho(k2, {k2, cycle_graph(6)}, 1, 1)};
                   },
                   nullptr});
    ops.push_back({"path-join-rho", "rho for L^k(K2[P_n, P_m]) with n, m >= 3",
                   [](const SuiteOptions&) {
                       return Reports{check_path_join_rho(3, 3, 2), check_path_join_rho(4, 3, 2),
                                      check_path_join_rho(5, 4, 1), check_path_join_rho(2, 3, 1)};
                   },
                   nullptr});
    ops.push_back({"kan-rho", "quotient of Ka_n(n-4), its spectrum, and rho for L^k(Ka_n(p))",
                   [](const SuiteOptions&) {
                       Reports out;
                       for (std::size_t n = 6; n <= 12; ++n) out.push_back(check_kan_rho(n, n - 4, 1));
                       out.push_back(check_kan_rho(8, 2, 1));
                       out.push_back(check_kan_rho(6, 3, 1));
                       return out;
                   },
                   nullptr});
    ops.push_back({"min-degree4-rho", "rho for L^k when the least eigenvalue is >= -2 and the minimum degree >= 4",
                   [](const SuiteOptions&) {
                       return Reports{check_min_deg4_rho(named(line_graph(complete_graph(5)), "line(complete(5))"), 2),
                                      check_min_deg4_rho(turan_graph(6, 3), 2),
                                      check_min_deg4_rho(complete_graph(4), 2)};
                   },
                   check_min_deg4_rho});
    ops.push_back({"dense-iterated-rho", "rho for L^k when the minimum degree is >= n/2 + 1",
                   [](const SuiteOptions&) {
                       return Reports{check_das_iterated(complete_graph(6), 2), check_das_iterated(turan_graph(6, 3), 2),
                                      check_das_iterated(cycle_graph(8), 1)};
                   },
                   check_das_iterated});
    ops.push_back({"turan-rho", "rho for L^k(T_r(n)) and the exceptional signless spectra",
                   [](const SuiteOptions&) {
                       return Reports{check_turan_rho(3, 6, 1), check_turan_rho(3, 7, 1), check_turan_rho(3, 8, 1),
                                      check_turan_rho(4, 5, 1), check_turan_rho(5, 10, 1), check_turan_rho(4, 8, 1),
                                      check_turan_rho(3, 9, 1), check_turan_rho(2, 6, 1)};
                   },
                   nullptr});
    ops.push_back({"regular-complement-rho", "rho for L^k of the complement of an r-regular graph, 3 <= r <= (n-1)/3",
                   [](const SuiteOptions&) {
                       return Reports{check_regular_complement_rho(petersen_graph(), 1),
                                      check_regular_complement_rho(circulant(12, {1, 6}), 1),
                                      check_regular_complement_rho(complete_graph(4), 1)};
                   },
                   check_regular_complement_rho});
    ops.push_back({"complement-line-regular-rho", "rho for L^k of the complement of L(G), G regular of order >= 8",
                   [](const SuiteOptions&) {
                       return Reports{check_complement_line_regular_rho(cycle_graph(8), 1),
                                      check_complement_line_regular_rho(hypercube(3), 1),
                                      check_complement_line_regular_rho(petersen_graph(), 1),
                                      check_complement_line_regular_rho(complete_graph(4), 1)};
                   },
                   check_complement_line_regular_rho});
    ops.push_back({"hyperenergetic-iterated", "L^k is hyperenergetic for k >= 2 when d_u + d_v >= 6",
                   [](const SuiteOptions&) {
                       return Reports{check_hyperenergetic_iterated(complete_graph(4), 3),
                                      check_hyperenergetic_iterated(caterpillar({4, 3, 4}), 2),
                                      check_hyperenergetic_iterated(cycle_graph(6), 2)};
                   },
                   check_hyperenergetic_iterated});
    ops.push_back({"complement-structure", "positive eigenvalues and energy of the complement of L^k",
                   [](const SuiteOptions&) {
                       return Reports{check_complement_structure(complete_graph(6), 2),
                                      check_complement_structure(turan_graph(6, 3), 2),
                                      check_complement_structure(complete_graph(4), 2),
                                      check_complement_structure(path_graph(4), 1)};
                   },
                   check_complement_structure});
    ops.push_back({"equienergetic-complement-iff", "L^k and its complement are equienergetic iff n^- equals the radius",
                   [k2](const SuiteOptions&) {
                       const std::vector<Graph> a{k2, cycle_graph(6)}, b{k2, cycle_pair()};
                       const Graph g1 = named(h_join(k2, a).graph, "K2[K2,cycle(6)]");
                       const Graph g2 = named(h_join(k2, b).graph, "K2[K2,union(cycle(3),cycle(3))]");
                       const Graph family[] = {g2};
                       return Reports{check_equienergetic_complement_iff(complete_graph(6), 1),
                                      check_equienergetic_complement_iff(g1, 1, family),
                                      check_equienergetic_complement_iff(complete_graph(4), 1),
                                      check_equienergetic_complement_iff(path_graph(4), 1)};
                   },
                   [](const Graph& g, std::size_t k) { return check_equienergetic_complement_iff(g, k); }});
    ops.push_back({"complement-hyperenergetic", "complement of L^k is hyperenergetic when the radius is small",
                   [](const SuiteOptions&) {
                       return Reports{check_complement_hyperenergetic(complete_graph(4), 3),
                                      check_complement_hyperenergetic(caterpillar({4, 3, 4}), 2),
                                      check_complement_hyperenergetic(cycle_graph(6), 2)};
                   },
                   check_complement_hyperenergetic});
    ops.push_back({"ebd-energies", "energies of extended bipartite doubles of L^k and its complement",
                   [](const SuiteOptions&) {
                       return Reports{check_ebd_energies(complete_graph(4), 1), check_ebd_energies(complete_graph(6), 1),
                                      check_ebd_energies(turan_graph(6, 3), 2), check_ebd_energies(path_graph(4), 1)};
                   },
                   check_ebd_energies});
    ops.push_back({"independence-bounds", "independence numbers of L^k and its complement",
                   [](const SuiteOptions&) {
                       return Reports{check_independence_bounds(complete_graph(4), 1),
                                      check_independence_bounds(complete_bipartite(3, 3), 1),
                                      check_independence_bounds(complete_graph(6), 1),
                                      check_independence_bounds(path_graph(4), 1)};
                   },
                   check_independence_bounds});
    ops.push_back({"equienergetic-family", "graphs with equal previous-level counts have equienergetic L^k",
                   [k2](const SuiteOptions&) {
                       const std::vector<Graph> a{k2, cycle_graph(6)}, b{k2, cycle_pair()};
                       const std::vector<Graph> joins{named(h_join(k2, a).graph, "K2[K2,cycle(6)]"),
                                                      named(h_join(k2, b).graph, "K2[K2,union(cycle(3),cycle(3))]")};
                       const std::vector<Graph> cubic{petersen_graph(), circulant(10, {1, 5}),
                                                      circulant(10, {2, 5})};
                       return Reports{check_equienergetic_family(joins, 1), check_equienergetic_family(joins, 2),
                                      check_equienergetic_family(cubic, 2)};
                   },
                   nullptr});
    ops.push_back({"quotient-spectral-equality", "quotient spectra agree with their symmetric counterparts",
                   [](const SuiteOptions& o) { return Reports{check_quotient_spectral_equality(100, o.seed)}; },
                   nullptr});
    ops.push_back({"hjoin-signless-assembly", "signless spectrum of a join assembled from parts and quotient",
                   [k2](const SuiteOptions&) {
                       return Reports{
                           check_hjoin_signless_assembly(k2, {k2, k2}),
                           check_hjoin_signless_assembly(path_graph(3), {complete_graph(1), complete_graph(3), k2}),
                           check_hjoin_signless_assembly(k2, {cycle_graph(6), cycle_pair()})};
                   },
                   nullptr});
    ops.push_back({"join-equienergetic-pair", "joins with equal quotients are equienergetic but not cospectral",
                   [](const SuiteOptions&) {
                       return Reports{check_join_equienergetic_pair(cycle_graph(6), cycle_pair()),
                                      check_join_equienergetic_pair(cycle_graph(8),
                                                                    named(disjoint_union(cycle_graph(4), cycle_graph(4)),
                                                                          "union(cycle(4),cycle(4))"))};
                   },
                   nullptr});
    ops.push_back({"line-rho-census", "exhaustive census of line-rho graphs up to order 7",
                   [](const SuiteOptions&) { return Reports{check_line_rho_census()}; }, nullptr});
    return ops;
}

}  // namespace

const std::vector<SuiteOperation>& suite_operations() {
    static const std::vector<SuiteOperation> registry = make_registry();
    return registry;
}

const SuiteOperation* find_operation(const std::string& id) {
    for (const auto& op : suite_operations())
        if (op.id == id) return &op;
    return nullptr;
}

std::vector<TheoremReport> run_suite(const std::vector<std::string>& ids, const SuiteOptions& options) {
    std::vector<const SuiteOperation*> selected;
    if (ids.empty()) {
        for (const auto& op : suite_operations()) selected.push_back(&op);
    } else {
        for (const auto& id : ids) {
            const SuiteOperation* op = find_operation(id);
            if (!op) throw ParameterError("unknown check '" + id + "'");
            selected.push_back(op);
        }
    }

    std::vector<std::vector<TheoremReport>> batches(selected.size());
    if (options.threads <= 1) {
        for (std::size_t i = 0; i < selected.size(); ++i) batches[i] = selected[i]->run_default(options);
    } else {
        for (std::size_t begin = 0; begin < selected.size(); begin += options.threads) {
            const std::size_t end = std::min(selected.size(), begin + options.threads);
            std::vector<std::future<std::vector<TheoremReport>>> running;
            for (std::size_t i = begin; i < end; ++i)
                running.push_back(std::async(std::launch::async, selected[i]->run_default, std::cref(options)));
            for (std::size_t i = begin; i < end; ++i) batches[i] = running[i - begin].get();
        }
    }
    std::vector<TheoremReport> out;
    for (auto& b : batches)
        for (auto& r : b) out.push_back(std::move(r));
    return out;
}

}  // namespace srho
