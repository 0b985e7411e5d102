#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "srho/matrix.hpp"
#include "srho/spectrum.hpp"

namespace srho {

using BigInt = boost::multiprecision::cpp_int;

/// Integer-coefficient polynomial c_0 + c_1 x + ... + c_d x^d.
class ExactPolynomial {
public:
    ExactPolynomial() = default;
    /// Leading zero coefficients are trimmed.
    explicit ExactPolynomial(std::vector<BigInt> coefficients);
    static ExactPolynomial from_ints(std::initializer_list<long long> coefficients);

    /// Degree of the zero polynomial is reported as 0.
    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

    double evaluate(double x) const;
    /// "x^3 - 15x^2 + 62x - 72"
    std::string to_string() const;

    friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

private:
    std::vector<BigInt> coeffs_;
};

inline constexpr std::size_t kExactDimensionCap = 64;

/// det(xI - M) by the Faddeev-LeVerrier recurrence in exact integer arithmetic.
/// Throws ExactnessError for non-integral entries and SizeError above
/// kExactDimensionCap.
ExactPolynomial exact_char_poly(const DenseMatrix& m);

struct RealRoot {
    double value;
    std::size_t multiplicity;
};

struct RootIsolation {
    std::vector<RealRoot> roots;  // descending, distinct
    std::size_t nonreal_count = 0;  // roots (with multiplicity) that are not real

    /// Real roots expanded by multiplicity, descending.
    std::vector<double> values() const;
};

/// All real roots with multiplicities. Multiplicities come from an exact
/// square-free decomposition; each square-free factor is isolated with Sturm
/// sequences at dyadic points and bisected until the bracket is at most
/// `width` wide. Throws DomainError for constant polynomials.
RootIsolation real_roots(const ExactPolynomial& p, double width = 1e-10);

/// Coefficients c_0..c_d of prod (x - r_i), evaluated in floating point.
std::vector<double> poly_from_roots(std::span<const double> roots);

struct ExactSpectrum {
    ExactPolynomial polynomial;
    RootIsolation roots;
    Spectrum spectrum;  // real roots only; compare dimension against polynomial degree
};

/// Characteristic polynomial plus isolated roots of an integer matrix. Works
/// for non-symmetric input.
ExactSpectrum exact_spectrum(const DenseMatrix& m, double width = 1e-10);

}  // namespace srho
