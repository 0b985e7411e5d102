#include "srho/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "srho/eigen.hpp"
#include "srho/errors.hpp"
#include "srho/families.hpp"
#include "srho/graph6.hpp"
#include "srho/polynomial.hpp"
#include "srho/spectral.hpp"
#include "srho/structure.hpp"

namespace srho {

namespace {

std::vector<std::size_t> block_of(const Graph& g, const Partition& pi) {
    std::vector<std::size_t> owner(g.order(), pi.blocks.size());
    for (std::size_t b = 0; b < pi.blocks.size(); ++b)
        for (Vertex v : pi.blocks[b]) owner[v] = b;
    return owner;
}

}  // namespace

void validate_partition(const Graph& g, const Partition& pi) {
    std::vector<bool> seen(g.order(), false);
    std::size_t covered = 0;
    for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
        if (pi.blocks[b].empty()) throw PartitionError("block " + std::to_string(b) + " is empty");
        for (Vertex v : pi.blocks[b]) {
            if (v >= g.order())
                throw PartitionError("vertex " + std::to_string(v) + " out of range in block " +
                                     std::to_string(b));
            if (seen[v]) throw PartitionError("vertex " + std::to_string(v) + " appears twice");
            seen[v] = true;
            ++covered;
        }
    }
    if (covered != g.order())
        throw PartitionError("blocks cover " + std::to_string(covered) + " of " +
                             std::to_string(g.order()) + " vertices");
}

EquitableCheck is_equitable(const Graph& g, const Partition& pi) {
    validate_partition(g, pi);
    const std::size_t p = pi.blocks.size();
    const std::vector<std::size_t> owner = block_of(g, pi);
    std::vector<std::vector<std::size_t>> counts(p, std::vector<std::size_t>(p, 0));
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t k = 0; k < pi.blocks[i].size(); ++k) {
            std::vector<std::size_t> row(p, 0);
            for (Vertex u : g.neighbors(pi.blocks[i][k])) ++row[owner[u]];
            if (k == 0)
                counts[i] = row;
            else if (row != counts[i])
                return {};
        }
    }
    return {true, std::move(counts)};
}

Partition coarsest_equitable_partition(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> owner(n, 0);
    std::size_t blocks = n == 0 ? 0 : 1;
    while (true) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        std::vector<std::size_t> next(n);
        for (Vertex v = 0; v < n; ++v) {
            std::vector<std::size_t> key(blocks + 1, 0);
            key[0] = owner[v];
            for (Vertex u : g.neighbors(v)) ++key[1 + owner[u]];
            auto [it, fresh] = ids.emplace(std::move(key), ids.size());
            next[v] = it->second;
        }
        owner = std::move(next);
        if (ids.size() == blocks) break;
        blocks = ids.size();
    }
    Partition pi;
    pi.blocks.assign(blocks, {});
    for (Vertex v = 0; v < n; ++v) pi.blocks[owner[v]].push_back(v);
    return pi;
}

bool has_hjoin_structure(const Graph& g, const Partition& pi) {
    const EquitableCheck eq = is_equitable(g, pi);
    if (!eq.equitable) return false;
    for (std::size_t i = 0; i < eq.counts.size(); ++i)
        for (std::size_t j = 0; j < eq.counts.size(); ++j)
            if (i != j && eq.counts[i][j] != 0 && eq.counts[i][j] != pi.blocks[j].size()) return false;
    return true;
}

QuotientSet quotient_matrices(const Graph& g, const Partition& pi, SymmetricVariants variants) {
    const EquitableCheck eq = is_equitable(g, pi);
    if (!eq.equitable) throw EquitabilityError("partition is not equitable");
    const std::size_t p = pi.blocks.size();

    QuotientSet q;
    q.partition = pi;
    q.adjacency = DenseMatrix(p);
    q.degree = DenseMatrix(p);
    q.complement_adjacency = DenseMatrix(p);
    bool join = true;
    for (std::size_t i = 0; i < p; ++i) {
        q.block_sizes.push_back(pi.blocks[i].size());
        q.internal_degree.push_back(eq.counts[i][i]);
        std::size_t external = 0, total = 0;
        for (std::size_t j = 0; j < p; ++j) {
            const std::size_t c = eq.counts[i][j];
            q.adjacency(i, j) = static_cast<double>(c);
            q.complement_adjacency(i, j) =
                static_cast<double>(pi.blocks[j].size()) - (i == j ? 1.0 : 0.0) - static_cast<double>(c);
            total += c;
            if (i != j) {
                external += c;
                join = join && (c == 0 || c == pi.blocks[j].size());
            }
        }
        q.external_degree.push_back(external);
        q.degree(i, i) = static_cast<double>(total);
    }
    q.laplacian = DenseMatrix(p);
    q.signless_laplacian = DenseMatrix(p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            q.laplacian(i, j) = q.degree(i, j) - q.adjacency(i, j);
            q.signless_laplacian(i, j) = q.degree(i, j) + q.adjacency(i, j);
        }

    if (!join) {
        if (variants == SymmetricVariants::required)
            throw StructureError("partition is equitable but blocks are not completely joined or separated");
        return q;
    }
    DenseMatrix ah(p), lh(p), qh(p);
    for (std::size_t i = 0; i < p; ++i) {
        ah(i, i) = q.adjacency(i, i);
        lh(i, i) = q.laplacian(i, i);
        qh(i, i) = q.signless_laplacian(i, i);
        for (std::size_t j = 0; j < p; ++j) {
            if (i == j || eq.counts[i][j] == 0) continue;
            const double w = std::sqrt(static_cast<double>(q.block_sizes[i] * q.block_sizes[j]));
            ah(i, j) = w;
            lh(i, j) = -w;
            qh(i, j) = w;
        }
    }
    q.adjacency_h = std::move(ah);
    q.laplacian_h = std::move(lh);
    q.signless_laplacian_h = std::move(qh);
    return q;
}

namespace {

// Worst |c_k(numeric) - c_k(exact)| divided by the k-th coefficient of
// prod (x + |lambda_i|), the natural size of the expansion.
double coefficient_residual(const ExactPolynomial& exact, const std::vector<double>& numeric_roots) {
    const std::vector<double> rebuilt = poly_from_roots(numeric_roots);
    std::vector<double> magnitudes;
    for (double r : numeric_roots) magnitudes.push_back(-std::abs(r));
    const std::vector<double> scale = poly_from_roots(magnitudes);
    if (rebuilt.size() != exact.degree() + 1) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t k = 0; k < rebuilt.size(); ++k) {
        const double c = exact.coefficient(k).convert_to<double>();
        worst = std::max(worst, std::abs(rebuilt[k] - c) / std::max(1.0, std::abs(scale[k])));
    }
    return worst;
}

}  // namespace

TheoremReport verify_quotient_spectra_equal(const Graph& g, const Partition& pi) {
    const QuotientSet q = quotient_matrices(g, pi, SymmetricVariants::required);
    TheoremReport r;
    r.id = "quotient-spectral-equality";
    r.inputs = {g.name().empty() ? to_graph6(g) : g.name()};
    r.hypothesis_check = true;

    struct Pair {
        const char* name;
        const DenseMatrix* integral;
        const DenseMatrix* symmetric;
    };
    const Pair pairs[] = {{"A", &q.adjacency, &*q.adjacency_h},
                          {"L", &q.laplacian, &*q.laplacian_h},
                          {"Q", &q.signless_laplacian, &*q.signless_laplacian_h}};
    for (const Pair& pair : pairs) {
        const std::string key = pair.name;
        const ExactSpectrum exact = exact_spectrum(*pair.integral);
        const Spectrum numeric = sym_eigen(*pair.symmetric).spectrum;
        r.predicted[key] = spectrum_json(exact.spectrum);
        r.predicted[key + "_polynomial"] = exact.polynomial.to_string();
        r.computed[key] = spectrum_json(numeric);
        r.add_check(key + "_all_roots_real", exact.roots.nonreal_count == 0);
        r.add_check(key + "_multiplicities", exact.spectrum.matches(numeric, kQuotientSpectrumTolerance));
        r.add_residual(key + "_spectrum", exact.spectrum.max_deviation(numeric), kQuotientSpectrumTolerance);
        r.add_residual(key + "_coefficients", coefficient_residual(exact.polynomial, numeric.values()),
                       kQuotientCoefficientTolerance);
    }
    r.computed["A_pi"] = matrix_json(q.adjacency);
    r.computed["A_pi_h"] = matrix_json(*q.adjacency_h);
    r.finalize();
    return r;
}

TheoremReport verify_quotient_spectra_equal(const HJoin& join) {
    return verify_quotient_spectra_equal(join.graph, join.blocks);
}

Spectrum hjoin_signless_spectrum(const Graph& pattern, const std::vector<Graph>& parts) {
    std::vector<std::size_t> regular;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto r = structure_queries(parts[i]).regular_degree;
        if (!r) throw RegularityError("part " + std::to_string(i) + " is not regular");
        regular.push_back(*r);
    }
    const HJoin join = h_join(pattern, parts);
    const QuotientSet q = quotient_matrices(join.graph, join.blocks, SymmetricVariants::required);
    const ExactSpectrum quotient = exact_spectrum(q.signless_laplacian);
    if (quotient.roots.nonreal_count != 0) throw NumericFailure("signless quotient has non-real roots");

    SpectrumAssembly out;
    out.add_all(quotient.spectrum.values());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        SpectrumAssembly part;
        part.add_all(spectrum_of(parts[i], MatrixKind::signless_laplacian).values());
        part.remove(2.0 * static_cast<double>(regular[i]));
        out.add_all(part.finish().values(), static_cast<double>(q.external_degree[i]));
    }
    return out.finish();
}

CospectralityWitness quotient_cospectrality_witness(const HJoin& a, const HJoin& b) {
    if (a.blocks.blocks.size() != b.blocks.blocks.size())
        throw StructureError("joins have different numbers of blocks");
    for (std::size_t i = 0; i < a.blocks.blocks.size(); ++i)
        if (a.blocks.blocks[i].size() != b.blocks.blocks[i].size())
            throw StructureError("block " + std::to_string(i) + " sizes differ");
    const QuotientSet qa = quotient_matrices(a.graph, a.blocks, SymmetricVariants::required);
    const QuotientSet qb = quotient_matrices(b.graph, b.blocks, SymmetricVariants::required);

    CospectralityWitness w;
    w.same_quotient = qa.adjacency == qb.adjacency;
    w.same_complement_quotient = qa.complement_adjacency == qb.complement_adjacency;
    w.spectral_gap = spectrum_of(a.graph).max_deviation(spectrum_of(b.graph));
    w.cospectral = w.spectral_gap <= kQuotientSpectrumTolerance;
    w.complement_spectral_gap =
        spectrum_of(complement(a.graph)).max_deviation(spectrum_of(complement(b.graph)));
    w.complements_cospectral = w.complement_spectral_gap <= kQuotientSpectrumTolerance;
    const Graph la = line_graph(a.graph), lb = line_graph(b.graph);
    w.line_energy_gap = std::abs(energy(la).energy - energy(lb).energy);
    w.complement_line_energy_gap = std::abs(energy(complement(la)).energy - energy(complement(lb)).energy);
    return w;
}

std::vector<Graph> standard_regular_parts() {
    return {complete_graph(2), complete_graph(3), cycle_graph(4), cycle_graph(5),
            cycle_graph(6),    complete_graph(4), disjoint_union(cycle_graph(3), cycle_graph(3))};
}

HJoin HJoinSample::build() const { return h_join(pattern, parts); }

std::vector<HJoinSample> random_hjoin_corpus(std::size_t count, std::uint64_t seed,
                                             std::size_t max_pattern_order) {
    if (max_pattern_order < 1) throw ParameterError("pattern order bound must be at least 1");
    const std::vector<Graph> pool = standard_regular_parts();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> order_dist(1, max_pattern_order);
    std::uniform_int_distribution<std::size_t> part_dist(0, pool.size() - 1);
    std::bernoulli_distribution edge_dist(0.5);

    std::vector<HJoinSample> out;
    for (std::size_t s = 0; s < count; ++s) {
        const std::size_t k = order_dist(rng);
        GraphBuilder b(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (edge_dist(rng)) b.add_edge(i, j);
        HJoinSample sample;
        sample.pattern = std::move(b).build();
        sample.description = to_graph6(sample.pattern) + "[";
        for (std::size_t i = 0; i < k; ++i) {
            sample.parts.push_back(pool[part_dist(rng)]);
            sample.description += (i ? "," : "") + sample.parts.back().name();
        }
        sample.description += "]";
        sample.pattern = sample.pattern.renamed(to_graph6(sample.pattern));
        out.push_back(std::move(sample));
    }
    return out;
}

}  // namespace srho
