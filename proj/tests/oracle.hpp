#pragma once

// Test-side oracles, independent of the library's engines: Eigen's
// self-adjoint solver, brute-force subset and permutation searches, and
// Bareiss determinants of principal minors.

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "srho/graph.hpp"
#include "srho/matrix.hpp"

namespace oracle {

inline std::vector<double> eigenvalues(const srho::DenseMatrix& m) {
    const auto d = static_cast<Eigen::Index>(m.dim());
    Eigen::MatrixXd e(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) e(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e, Eigen::EigenvaluesOnly);
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + d);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

inline srho::DenseMatrix adjacency(const srho::Graph& g) {
    srho::DenseMatrix a(g.order());
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = 0; j < g.order(); ++j) a(i, j) = g.adjacent(i, j) ? 1.0 : 0.0;
    return a;
}

inline std::vector<double> adjacency_eigenvalues(const srho::Graph& g) { return eigenvalues(adjacency(g)); }

inline double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return 1e300;
    double gap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
    return gap;
}

inline std::size_t brute_alpha(const srho::Graph& g) {
    const std::size_t n = g.order();
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool independent = true;
        for (std::size_t i = 0; i < n && independent; ++i)
            for (std::size_t j = i + 1; j < n && independent; ++j)
                if ((mask >> i & 1) && (mask >> j & 1) && g.adjacent(i, j)) independent = false;
        if (independent) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
    }
    return best;
}

inline bool brute_isomorphic(const srho::Graph& a, const srho::Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<std::size_t> p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < a.order() && ok; ++i)
            for (std::size_t j = i + 1; j < a.order() && ok; ++j)
                if (a.adjacent(i, j) != b.adjacent(p[i], p[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Exact integer determinant by fraction-free elimination.
inline long long bareiss(std::vector<std::vector<long long>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    long long sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Sum of all r x r principal minors of an integer matrix.
inline long long principal_minor_sum(const srho::DenseMatrix& m, std::size_t r) {
    const std::size_t n = m.dim();
    long long total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != r) continue;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) idx.push_back(i);
        std::vector<std::vector<long long>> sub(r, std::vector<long long>(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) sub[i][j] = static_cast<long long>(m(idx[i], idx[j]));
        total += bareiss(sub);
    }
    return total;
}

}  // namespace oracle
