#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "srho/matrix.hpp"
#include "srho/spectrum.hpp"

namespace srho {

struct EigenDecomposition {
    Spectrum spectrum;
    /// Column j is a unit eigenvector for spectrum.values()[j]; present only
    /// when requested.
    std::optional<DenseMatrix> vectors;
    std::size_t sweeps = 0;
    double off_diagonal_norm = 0.0;
};

inline constexpr std::size_t kJacobiSweepCap = 100;

/// Row-cyclic Jacobi eigensolver for symmetric matrices. Iterates until the
/// off-diagonal Frobenius norm drops below 1e-12 * ||M||_F (1e-14 absolute for
/// the zero matrix). Throws SymmetryError for non-symmetric input, DomainError
/// for dimension 0 and NumericFailure after kJacobiSweepCap sweeps.
EigenDecomposition sym_eigen(const DenseMatrix& m, bool want_vectors = false);

struct Interval {
    double lo;
    double hi;

    bool contains(double x, double slack = 0.0) const { return x >= lo - slack && x <= hi + slack; }
};

/// Row discs [m_ii - R_i, m_ii + R_i] with R_i = sum_{j != i} |m_ij|.
std::vector<Interval> gershgorin_intervals(const DenseMatrix& m);

bool in_union(const std::vector<Interval>& intervals, double x, double slack = 0.0);

}  // namespace srho
