#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srho/graph.hpp"
#include "srho/matrix.hpp"
#include "srho/report.hpp"
#include "srho/spectrum.hpp"
#include "srho/transforms.hpp"

namespace srho {

/// Throws PartitionError unless the blocks are non-empty, disjoint, in range
/// and cover every vertex.
void validate_partition(const Graph& g, const Partition& pi);

struct EquitableCheck {
    bool equitable = false;
    /// counts[i][j]: neighbours in block j of any vertex of block i; empty
    /// when not equitable.
    std::vector<std::vector<std::size_t>> counts;
};

EquitableCheck is_equitable(const Graph& g, const Partition& pi);

/// Colour refinement from the one-block partition; blocks ordered by their
/// smallest vertex.
Partition coarsest_equitable_partition(const Graph& g);

/// Equitable, and every off-diagonal count is 0 or the full block size.
bool has_hjoin_structure(const Graph& g, const Partition& pi);

struct QuotientSet {
    Partition partition;
    std::vector<std::size_t> block_sizes;
    std::vector<std::size_t> internal_degree;  // r_i = c_ii
    std::vector<std::size_t> external_degree;  // R_i = sum_{j != i} c_ij
    DenseMatrix adjacency;             // A_pi = [c_ij]
    DenseMatrix degree;                // D_pi
    DenseMatrix laplacian;             // D_pi - A_pi
    DenseMatrix signless_laplacian;    // D_pi + A_pi
    DenseMatrix complement_adjacency;  // J_pi - I - A_pi, J_pi(i,j) = |pi_j|
    /// Symmetric variants: diagonals as above, off-diagonal +-sqrt(n_i n_j)
    /// for adjacent blocks and 0 otherwise. Present iff has_hjoin_structure.
    std::optional<DenseMatrix> adjacency_h;
    std::optional<DenseMatrix> laplacian_h;
    std::optional<DenseMatrix> signless_laplacian_h;
};

enum class SymmetricVariants { when_available, required };

/// Throws EquitabilityError for a non-equitable partition and StructureError
/// when symmetric variants are required but the partition is not a join.
QuotientSet quotient_matrices(const Graph& g, const Partition& pi,
                              SymmetricVariants variants = SymmetricVariants::when_available);

inline constexpr double kQuotientSpectrumTolerance = 1e-8;
inline constexpr double kQuotientCoefficientTolerance = 1e-6;

/// Spectra of A_pi, L_pi, Q_pi by exact characteristic polynomial and Sturm
/// isolation against the Jacobi spectra of the symmetric variants, plus the
/// characteristic coefficients rebuilt from the numeric spectra compared to
/// the exact ones relative to the size of the expansion.
/// Throws StructureError unless the partition has join structure.
TheoremReport verify_quotient_spectra_equal(const Graph& g, const Partition& pi);
TheoremReport verify_quotient_spectra_equal(const HJoin& join);

/// Q-spectrum of pattern[parts] assembled from the parts and the quotient:
/// U_i (R_i + (Sp_Q(H_i) minus one copy of 2 r_i)) U Sp(Q_pi).
/// Throws RegularityError if a part is not regular.
Spectrum hjoin_signless_spectrum(const Graph& pattern, const std::vector<Graph>& parts);

struct CospectralityWitness {
    bool same_quotient = false;
    bool same_complement_quotient = false;
    bool cospectral = false;
    bool complements_cospectral = false;
    double spectral_gap = 0.0;             // max |lambda_i(G1) - lambda_i(G2)|
    double complement_spectral_gap = 0.0;
    double line_energy_gap = 0.0;          // |E(L(G1)) - E(L(G2))|
    double complement_line_energy_gap = 0.0;

    bool equienergetic_noncospectral() const noexcept {
        return same_quotient && !cospectral && line_energy_gap <= 1e-6;
    }
};

/// Throws StructureError when block counts or block sizes differ.
CospectralityWitness quotient_cospectrality_witness(const HJoin& a, const HJoin& b);

/// K2, K3, C4, C5, C6, K4 and C3 u C3.
std::vector<Graph> standard_regular_parts();

struct HJoinSample {
    Graph pattern;
    std::vector<Graph> parts;
    std::string description;

    HJoin build() const;
};

/// Patterns of order 1..max_pattern_order with edges drawn independently at
/// probability 1/2; parts drawn uniformly from standard_regular_parts().
std::vector<HJoinSample> random_hjoin_corpus(std::size_t count, std::uint64_t seed,
                                             std::size_t max_pattern_order = 5);

}  // namespace srho
