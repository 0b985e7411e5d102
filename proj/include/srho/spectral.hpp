#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "srho/graph.hpp"
#include "srho/matrix.hpp"
#include "srho/spectrum.hpp"

namespace srho {

enum class MatrixKind { adjacency, laplacian, signless_laplacian };

/// A, L = D - A or Q = D + A.
DenseMatrix matrix_of(const Graph& g, MatrixKind kind);

/// Numeric spectrum via sym_eigen; the null graph has an empty spectrum.
Spectrum spectrum_of(const Graph& g, MatrixKind kind = MatrixKind::adjacency);

struct EnergyReport {
    double energy = 0.0;        // sum |lambda_i|
    double via_positive = 0.0;  // 2 * sum of positive eigenvalues
    double via_negative = 0.0;  // -2 * sum of negative eigenvalues
};

EnergyReport energy(const Graph& g);
EnergyReport energy_of(const Spectrum& adjacency_spectrum);

/// Tolerance for "equals -2" in the property checks.
inline constexpr double kRhoTolerance = 1e-6;

/// Verdict on "every negative adjacency eigenvalue equals -2".
struct RhoVerdict {
    bool holds = true;
    bool vacuous = true;  // no negative eigenvalues at all
    std::size_t negative_count = 0;  // n^-
    std::size_t positive_count = 0;  // n^+
    std::size_t multiplicity_of_minus2 = 0;
    double worst_deviation = 0.0;  // max |lambda + 2| over negative eigenvalues
    double tolerance = kRhoTolerance;
};

RhoVerdict check_rho(const Graph& g);
/// Eigenvalues below -spectrum.tolerance() count as negative.
RhoVerdict rho_of(const Spectrum& adjacency_spectrum);

/// Verdict for L(root) together with the expected -2 multiplicity of a line
/// graph: m - n + (number of bipartite components of root). For connected
/// roots this is m-n+1 (bipartite) or m-n (otherwise).
struct LineRhoVerdict {
    RhoVerdict verdict;
    bool root_bipartite = false;
    long long expected_minus2 = 0;
    bool multiplicity_rule_holds = false;
};

LineRhoVerdict check_line_rho(const Graph& root);
long long expected_line_minus2(const Graph& root);

/// {-2^(m-n)} U (Sp_Q(G) - 2). When m < n the surplus n-m values at -2 are
/// removed instead; throws NumericFailure if they are not there.
Spectrum line_spectrum_via_Q(const Graph& g);

/// energy(g) > 2(n-1) + 1e-9.
bool is_hyperenergetic(const Graph& g);

/// Least signless Laplacian eigenvalue. Throws DomainError for the null graph.
double q_min(const Graph& g);

/// Multiset arithmetic with tolerance-matched removal, used to assemble
/// closed-form spectra such as {2r-2} U (Sp - {r} + r - 2) U {-2^(m-n)} where
/// a negative multiplicity means removal.
class SpectrumAssembly {
public:
    explicit SpectrumAssembly(double match_tolerance = 1e-6) : tol_(match_tolerance) {}

    void add(double value, long long count = 1);
    void add_all(const std::vector<double>& values, double shift = 0.0, double scale = 1.0);
    /// Removes one value within tolerance of `value`; throws NumericFailure if absent.
    void remove(double value);

    Spectrum finish() const;

private:
    double tol_;
    std::vector<double> values_;
};

/// Sp(complement) = {n-r-1} U (-1 - (Sp(G) \ {r})) for r-regular G.
/// Throws RegularityError when g is not regular.
Spectrum regular_complement_spectrum(const Graph& g);

/// Sp(L(G)) = {2r-2} U (Sp(G) \ {r} + r - 2) U {-2^(m-n)} for r-regular G.
Spectrum regular_line_spectrum(const Graph& g);

}  // namespace srho
