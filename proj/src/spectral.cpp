#include "srho/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "srho/eigen.hpp"
#include "srho/errors.hpp"
#include "srho/structure.hpp"
#include "srho/transforms.hpp"

namespace srho {

DenseMatrix matrix_of(const Graph& g, MatrixKind kind) {
    const std::size_t n = g.order();
    DenseMatrix m(n);
    const double off = kind == MatrixKind::laplacian ? -1.0 : 1.0;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j)
            if (g.adjacent(i, j)) m(i, j) = off;
        if (kind != MatrixKind::adjacency) m(i, i) = static_cast<double>(g.degree(i));
    }
    return m;
}

Spectrum spectrum_of(const Graph& g, MatrixKind kind) {
    if (g.order() == 0) return Spectrum::from_values({});
    return sym_eigen(matrix_of(g, kind)).spectrum;
}

EnergyReport energy_of(const Spectrum& s) {
    EnergyReport r;
    for (double v : s.values()) {
        r.energy += std::abs(v);
        if (v > 0.0) r.via_positive += 2.0 * v;
        if (v < 0.0) r.via_negative -= 2.0 * v;
    }
    return r;
}

EnergyReport energy(const Graph& g) { return energy_of(spectrum_of(g)); }

RhoVerdict rho_of(const Spectrum& s) {
    RhoVerdict v;
    const double eps = s.tolerance();
    for (double x : s.values()) {
        if (x > eps) {
            ++v.positive_count;
        } else if (x < -eps) {
            ++v.negative_count;
            const double dev = std::abs(x + 2.0);
            v.worst_deviation = std::max(v.worst_deviation, dev);
            if (dev <= v.tolerance) ++v.multiplicity_of_minus2;
        }
    }
    v.vacuous = v.negative_count == 0;
    v.holds = v.worst_deviation <= v.tolerance;
    return v;
}

RhoVerdict check_rho(const Graph& g) { return rho_of(spectrum_of(g)); }

long long expected_line_minus2(const Graph& root) {
    const ComponentCounts c = component_counts(root);
    return static_cast<long long>(root.size()) - static_cast<long long>(root.order()) +
           static_cast<long long>(c.bipartite_components);
}

LineRhoVerdict check_line_rho(const Graph& root) {
    LineRhoVerdict out;
    out.verdict = check_rho(line_graph(root));
    out.root_bipartite = is_bipartite(root);
    out.expected_minus2 = expected_line_minus2(root);
    out.multiplicity_rule_holds =
        static_cast<long long>(out.verdict.multiplicity_of_minus2) == out.expected_minus2;
    return out;
}

void SpectrumAssembly::add(double value, long long count) {
    if (count >= 0) {
        values_.insert(values_.end(), static_cast<std::size_t>(count), value);
    } else {
        for (long long k = 0; k < -count; ++k) remove(value);
    }
}

void SpectrumAssembly::add_all(const std::vector<double>& values, double shift, double scale) {
    for (double v : values) values_.push_back(scale * v + shift);
}

void SpectrumAssembly::remove(double value) {
    auto best = values_.end();
    double best_dist = tol_;
    for (auto it = values_.begin(); it != values_.end(); ++it) {
        const double d = std::abs(*it - value);
        if (d <= best_dist) {
            best_dist = d;
            best = it;
        }
    }
    if (best == values_.end())
        throw NumericFailure("spectrum assembly: no value within " + std::to_string(tol_) + " of " +
                             std::to_string(value) + " to remove");
    values_.erase(best);
}

Spectrum SpectrumAssembly::finish() const { return Spectrum::from_values(values_); }

Spectrum line_spectrum_via_Q(const Graph& g) {
    SpectrumAssembly a;
    a.add_all(spectrum_of(g, MatrixKind::signless_laplacian).values(), -2.0);
    a.add(-2.0, static_cast<long long>(g.size()) - static_cast<long long>(g.order()));
    return a.finish();
}

bool is_hyperenergetic(const Graph& g) {
    const double n = static_cast<double>(g.order());
    return energy(g).energy > 2.0 * (n - 1.0) + 1e-9;
}

double q_min(const Graph& g) {
    if (g.order() == 0) throw DomainError("q_min: graph has no vertices");
    return spectrum_of(g, MatrixKind::signless_laplacian).smallest();
}

namespace {

std::size_t require_regular(const Graph& g, const char* who) {
    const StructureInfo info = structure_queries(g);
    if (!info.regular_degree) throw RegularityError(std::string(who) + ": graph is not regular");
    return *info.regular_degree;
}

}  // namespace

Spectrum regular_complement_spectrum(const Graph& g) {
    const double r = static_cast<double>(require_regular(g, "regular_complement_spectrum"));
    const double n = static_cast<double>(g.order());
    SpectrumAssembly rest;
    rest.add_all(spectrum_of(g).values());
    rest.remove(r);
    SpectrumAssembly a;
    a.add(n - r - 1.0);
    a.add_all(rest.finish().values(), -1.0, -1.0);
    return a.finish();
}

Spectrum regular_line_spectrum(const Graph& g) {
    const double r = static_cast<double>(require_regular(g, "regular_line_spectrum"));
    SpectrumAssembly rest;
    rest.add_all(spectrum_of(g).values());
    rest.remove(r);
    SpectrumAssembly a;
    a.add(2.0 * r - 2.0);
    a.add_all(rest.finish().values(), r - 2.0);
    a.add(-2.0, static_cast<long long>(g.size()) - static_cast<long long>(g.order()));
    return a.finish();
}

}  // namespace srho
