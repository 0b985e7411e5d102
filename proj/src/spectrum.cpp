#include "srho/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>

namespace srho {

double Spectrum::default_tolerance(const std::vector<double>& values) {
    double radius = 0.0;
    for (double v : values) radius = std::max(radius, std::abs(v));
    return 1e-8 * std::max(1.0, radius);
}

Spectrum Spectrum::from_values(std::vector<double> values, double tolerance) {
    Spectrum s;
    std::sort(values.begin(), values.end(), std::greater<>());
    s.tolerance_ = tolerance < 0.0 ? default_tolerance(values) : tolerance;
    s.values_ = std::move(values);
    std::size_t start = 0;
    for (std::size_t i = 1; i <= s.values_.size(); ++i) {
        if (i == s.values_.size() || s.values_[i - 1] - s.values_[i] > s.tolerance_) {
            double sum = 0.0;
            for (std::size_t k = start; k < i; ++k) sum += s.values_[k];
            s.groups_.push_back({sum / static_cast<double>(i - start), i - start});
            start = i;
        }
    }
    return s;
}

double Spectrum::largest() const {
    if (values_.empty()) throw std::logic_error("Spectrum::largest on an empty spectrum");
    return values_.front();
}

double Spectrum::smallest() const {
    if (values_.empty()) throw std::logic_error("Spectrum::smallest on an empty spectrum");
    return values_.back();
}

double Spectrum::spectral_radius() const {
    double r = 0.0;
    for (double v : values_) r = std::max(r, std::abs(v));
    return r;
}

std::size_t Spectrum::count_above(double threshold) const {
    return static_cast<std::size_t>(
        std::count_if(values_.begin(), values_.end(), [&](double v) { return v > threshold; }));
}

std::size_t Spectrum::count_below(double threshold) const {
    return static_cast<std::size_t>(
        std::count_if(values_.begin(), values_.end(), [&](double v) { return v < threshold; }));
}

std::size_t Spectrum::multiplicity_near(double x, double tol) const {
    return static_cast<std::size_t>(std::count_if(
        values_.begin(), values_.end(), [&](double v) { return std::abs(v - x) <= tol; }));
}

bool Spectrum::matches(const Spectrum& other, double tol) const {
    if (groups_.size() != other.groups_.size() || dimension() != other.dimension()) return false;
    for (std::size_t i = 0; i < groups_.size(); ++i) {
        if (groups_[i].multiplicity != other.groups_[i].multiplicity) return false;
        if (std::abs(groups_[i].value - other.groups_[i].value) > tol) return false;
    }
    return max_deviation(other) <= tol;
}

double Spectrum::max_deviation(const Spectrum& other) const {
    if (dimension() != other.dimension()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        worst = std::max(worst, std::abs(values_[i] - other.values_[i]));
    return worst;
}

std::string format_real(double x, int precision) {
    double rounded = std::nearbyint(x);
    double scale = std::pow(10.0, precision);
    if (std::abs(x - rounded) * scale < 0.5) {
        if (rounded == 0.0) rounded = 0.0;  // drop the sign of -0
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.0f", rounded);
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, x);
    std::string s = buf;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

std::string Spectrum::to_string(int precision) const {
    std::string out;
    for (const auto& g : groups_) {
        if (!out.empty()) out += ' ';
        out += format_real(g.value, precision);
        if (g.multiplicity > 1) out += '^' + std::to_string(g.multiplicity);
    }
    return out;
}

}  // namespace srho
