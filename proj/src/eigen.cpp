#include "srho/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "srho/errors.hpp"

namespace srho {

namespace {

double off_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

void rotate(DenseMatrix& a, std::optional<DenseMatrix>& v, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    if (apq == 0.0) return;
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    a(p, p) -= t * apq;
    a(q, q) += t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    const std::size_t d = a.dim();
    for (std::size_t r = 0; r < d; ++r) {
        if (r == p || r == q) continue;
        const double arp = a(r, p);
        const double arq = a(r, q);
        const double np = c * arp - s * arq;
        const double nq = s * arp + c * arq;
        a(r, p) = np;
        a(p, r) = np;
        a(r, q) = nq;
        a(q, r) = nq;
    }
    if (v) {
        DenseMatrix& vm = *v;
        for (std::size_t r = 0; r < d; ++r) {
            const double vrp = vm(r, p);
            const double vrq = vm(r, q);
            vm(r, p) = c * vrp - s * vrq;
            vm(r, q) = s * vrp + c * vrq;
        }
    }
}

}  // namespace

EigenDecomposition sym_eigen(const DenseMatrix& m, bool want_vectors) {
    if (m.dim() == 0) throw DomainError("sym_eigen: dimension must be at least 1");
    if (!m.all_finite()) throw DomainError("sym_eigen: non-finite matrix entry");
    if (!m.is_symmetric())
        throw SymmetryError("sym_eigen: matrix is not symmetric; use the exact characteristic "
                            "polynomial route");

    const std::size_t d = m.dim();
    const double norm = m.frobenius_norm();
    const double threshold = norm > 0.0 ? 1e-12 * norm : 1e-14;

    DenseMatrix a = m;
    std::optional<DenseMatrix> v;
    if (want_vectors) v = DenseMatrix::identity(d);

    EigenDecomposition out;
    double off = off_norm(a);
    while (off >= threshold) {
        if (out.sweeps == kJacobiSweepCap)
            throw NumericFailure("sym_eigen: no convergence after " +
                                 std::to_string(kJacobiSweepCap) +
                                 " sweeps, off-diagonal norm " + std::to_string(off));
        for (std::size_t p = 0; p + 1 < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q) rotate(a, v, p, q);
        ++out.sweeps;
        off = off_norm(a);
    }
    out.off_diagonal_norm = off;

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
    std::vector<double> values(d);
    for (std::size_t k = 0; k < d; ++k) values[k] = a(order[k], order[k]);
    out.spectrum = Spectrum::from_values(std::move(values));

    if (v) {
        DenseMatrix sorted(d);
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t r = 0; r < d; ++r) sorted(r, k) = (*v)(r, order[k]);
        out.vectors = std::move(sorted);
    }
    return out;
}

std::vector<Interval> gershgorin_intervals(const DenseMatrix& m) {
    std::vector<Interval> out;
    out.reserve(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        double radius = 0.0;
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (j != i) radius += std::abs(m(i, j));
        out.push_back({m(i, i) - radius, m(i, i) + radius});
    }
    return out;
}

bool in_union(const std::vector<Interval>& intervals, double x, double slack) {
    return std::any_of(intervals.begin(), intervals.end(),
                       [&](const Interval& iv) { return iv.contains(x, slack); });
}

}  // namespace srho
