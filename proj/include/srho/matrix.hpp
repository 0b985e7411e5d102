#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace srho {

/// Square row-major matrix of doubles.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim, double fill = 0.0) : dim_(dim), data_(dim * dim, fill) {}
    /// Throws std::invalid_argument when the rows do not form a square.
    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static DenseMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * dim_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * dim_ + j]; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }

    /// Exact symmetry: M(i,j) == M(j,i) bitwise for all pairs.
    bool is_symmetric() const noexcept;
    bool is_integral() const noexcept;
    bool all_finite() const noexcept;
    double trace() const noexcept;
    double frobenius_norm() const noexcept;

    std::vector<double> multiply(std::span<const double> v) const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

}  // namespace srho
