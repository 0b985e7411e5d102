#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace srho {

struct Eigenvalue {
    double value;
    std::size_t multiplicity;
};

/// Multiset of real eigenvalues, grouped and sorted descending. Consecutive
/// sorted values closer than the grouping tolerance share a group; the group
/// value is their mean.
class Spectrum {
public:
    Spectrum() = default;

    /// tolerance < 0 selects the default 1e-8 * max(1, max |value|).
    static Spectrum from_values(std::vector<double> values, double tolerance = -1.0);

    static double default_tolerance(const std::vector<double>& values);

    const std::vector<Eigenvalue>& groups() const noexcept { return groups_; }
    /// Raw (ungrouped) values, descending.
    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t dimension() const noexcept { return values_.size(); }
    double tolerance() const noexcept { return tolerance_; }
    bool empty() const noexcept { return values_.empty(); }

    double largest() const;
    double smallest() const;
    double spectral_radius() const;

    std::size_t count_above(double threshold) const;
    std::size_t count_below(double threshold) const;
    /// Number of raw values within tol of x.
    std::size_t multiplicity_near(double x, double tol) const;

    /// Same dimension, same multiplicity vector, group values within tol.
    bool matches(const Spectrum& other, double tol) const;
    /// Largest |a_i - b_i| over the descending raw values; infinity on a
    /// dimension mismatch.
    double max_deviation(const Spectrum& other) const;

    /// "8 4^3 2^2" with values rounded to `precision` decimals (trailing zeros trimmed).
    std::string to_string(int precision = 4) const;

private:
    std::vector<double> values_;
    std::vector<Eigenvalue> groups_;
    double tolerance_ = 0.0;
};

/// Formats a real compactly: integers without a decimal point, otherwise
/// `precision` decimals with trailing zeros removed.
std::string format_real(double x, int precision = 4);

}  // namespace srho
