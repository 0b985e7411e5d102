#include "srho/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace srho {

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto& r : rows) {
        if (r.size() != dim_) throw std::invalid_argument("DenseMatrix: rows must form a square");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

bool DenseMatrix::is_symmetric() const noexcept {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool DenseMatrix::is_integral() const noexcept {
    for (double x : data_)
        if (!std::isfinite(x) || std::nearbyint(x) != x) return false;
    return true;
}

bool DenseMatrix::all_finite() const noexcept {
    for (double x : data_)
        if (!std::isfinite(x)) return false;
    return true;
}

double DenseMatrix::trace() const noexcept {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double DenseMatrix::frobenius_norm() const noexcept {
    double s = 0.0;
    for (double x : data_) s += x * x;
    return std::sqrt(s);
}

std::vector<double> DenseMatrix::multiply(std::span<const double> v) const {
    if (v.size() != dim_) throw std::invalid_argument("DenseMatrix::multiply: size mismatch");
    std::vector<double> out(dim_, 0.0);
    for (std::size_t i = 0; i < dim_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

}  // namespace srho
