#include "srho/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "srho/errors.hpp"

namespace srho {

namespace mp = boost::multiprecision;
using Rational = mp::cpp_rational;
using RatPoly = std::vector<Rational>;  // c_0..c_d, no trailing zeros

namespace {

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(std::vector<BigInt>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rational(const std::vector<BigInt>& p) {
    RatPoly out;
    out.reserve(p.size());
    for (const auto& c : p) out.emplace_back(c);
    return out;
}

RatPoly derivative(const RatPoly& p) {
    RatPoly out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long long>(i));
    trim(out);
    return out;
}

RatPoly subtract(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// a = q*b + r
void divide(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    r = a;
    q.clear();
    if (r.size() < b.size()) return;
    q.assign(r.size() - b.size() + 1, Rational(0));
    const Rational lead = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        const std::size_t shift = r.size() - b.size();
        const Rational factor = r.back() / lead;
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= factor * b[i];
        r.pop_back();  // leading term cancels exactly
        trim(r);
    }
    trim(q);
}

RatPoly make_monic(RatPoly p) {
    if (p.empty()) return p;
    const Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.empty()) {
        RatPoly q, r;
        divide(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a));
}

RatPoly exact_quotient(const RatPoly& a, const RatPoly& b) {
    RatPoly q, r;
    divide(a, b, q, r);
    return q;
}

// Positive rational multiple with coprime integer coefficients.
std::vector<BigInt> primitive(const RatPoly& p) {
    BigInt lcm = 1;
    for (const auto& c : p) {
        BigInt d = mp::denominator(c);
        lcm = lcm / mp::gcd(lcm, d) * d;
    }
    std::vector<BigInt> out;
    out.reserve(p.size());
    BigInt g = 0;
    for (const auto& c : p) {
        BigInt v = mp::numerator(c) * (lcm / mp::denominator(c));
        g = mp::gcd(g, v);
        out.push_back(v);
    }
    if (g != 0 && g != 1)
        for (auto& v : out) v /= mp::abs(g);
    trim(out);
    return out;
}

struct SquareFreeFactor {
    RatPoly factor;
    std::size_t multiplicity;
};

// Yun's algorithm over Q for a monic polynomial.
std::vector<SquareFreeFactor> square_free_decomposition(const RatPoly& f) {
    std::vector<SquareFreeFactor> out;
    RatPoly df = derivative(f);
    RatPoly a = gcd(f, df);
    RatPoly b = exact_quotient(f, a);
    RatPoly c = exact_quotient(df, a);
    RatPoly d = subtract(c, derivative(b));
    for (std::size_t i = 1; b.size() > 1; ++i) {
        RatPoly ai = gcd(b, d);
        b = exact_quotient(b, ai);
        c = exact_quotient(d, ai);
        d = subtract(c, derivative(b));
        if (ai.size() > 1) out.push_back({std::move(ai), i});
    }
    return out;
}

// x = num / 2^exp
struct Dyadic {
    BigInt num;
    unsigned exp;
};

int sign_at(const std::vector<BigInt>& p, const Dyadic& x) {
    // Homogenized Horner: sum c_i num^i (2^exp)^(d-i) has the sign of p(x).
    BigInt acc = p.back();
    for (std::size_t k = p.size() - 1; k-- > 0;) {
        const unsigned shift = x.exp * static_cast<unsigned>(p.size() - 1 - k);
        acc = acc * x.num + (p[k] << shift);
    }
    return acc.sign();
}

class SturmChain {
public:
    explicit SturmChain(const std::vector<BigInt>& square_free) {
        RatPoly p0 = to_rational(square_free);
        RatPoly p1 = derivative(p0);
        chain_.push_back(primitive(p0));
        chain_.push_back(primitive(p1));
        while (true) {
            RatPoly q, r;
            divide(p0, p1, q, r);
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            chain_.push_back(primitive(r));
            p0 = std::move(p1);
            p1 = std::move(r);
        }
    }

    std::size_t variations(const Dyadic& x) const {
        std::size_t count = 0;
        int last = 0;
        for (const auto& p : chain_) {
            const int s = sign_at(p, x);
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    const std::vector<BigInt>& base() const { return chain_.front(); }

private:
    std::vector<std::vector<BigInt>> chain_;
};

double to_double(const Dyadic& x) {
    return std::ldexp(static_cast<double>(x.num), -static_cast<int>(x.exp));
}

// Bracket (lo, hi] at a shared exponent.
struct Bracket {
    BigInt lo;
    BigInt hi;
    unsigned exp;
};

class Isolator {
public:
    Isolator(const SturmChain& chain, double width) : chain_(chain), width_(width) {}

    void isolate(Bracket b, std::size_t count, std::vector<double>& roots, int depth = 0) {
        if (count == 0) return;
        if (count == 1) {
            roots.push_back(refine(std::move(b)));
            return;
        }
        if (depth > 4000) throw NumericFailure("real_roots: root separation below dyadic resolution");
        Bracket left{b.lo * 2, b.lo + b.hi, b.exp + 1};
        Bracket right{b.lo + b.hi, b.hi * 2, b.exp + 1};
        const std::size_t v_lo = chain_.variations({left.lo, left.exp});
        const std::size_t v_mid = chain_.variations({left.hi, left.exp});
        const std::size_t left_count = v_lo - v_mid;
        isolate(std::move(left), left_count, roots, depth + 1);
        isolate(std::move(right), count - left_count, roots, depth + 1);
    }

private:
    double refine(Bracket b) {
        while (std::ldexp(static_cast<double>(b.hi - b.lo), -static_cast<int>(b.exp)) > width_) {
            BigInt mid = b.lo + b.hi;
            b.lo *= 2;
            b.hi *= 2;
            ++b.exp;
            if (sign_at(chain_.base(), {mid, b.exp}) == 0) return to_double({mid, b.exp});
            const std::size_t v_lo = chain_.variations({b.lo, b.exp});
            const std::size_t v_mid = chain_.variations({mid, b.exp});
            if (v_lo - v_mid == 1)
                b.hi = std::move(mid);
            else
                b.lo = std::move(mid);
        }
        if (sign_at(chain_.base(), {b.hi, b.exp}) == 0) return to_double({b.hi, b.exp});
        return to_double({b.lo + b.hi, b.exp + 1});
    }

    const SturmChain& chain_;
    double width_;
};

}  // namespace

ExactPolynomial::ExactPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    trim(coeffs_);
}

ExactPolynomial ExactPolynomial::from_ints(std::initializer_list<long long> coefficients) {
    std::vector<BigInt> c;
    for (long long v : coefficients) c.emplace_back(v);
    return ExactPolynomial(std::move(c));
}

double ExactPolynomial::evaluate(double x) const {
    double acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + static_cast<double>(coeffs_[k]);
    return acc;
}

std::string ExactPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        const BigInt mag = mp::abs(c);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1 || k == 0) out += mag.str();
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

ExactPolynomial exact_char_poly(const DenseMatrix& m) {
    const std::size_t d = m.dim();
    if (d > kExactDimensionCap)
        throw SizeError("exact_char_poly: dimension " + std::to_string(d) + " exceeds cap " +
                        std::to_string(kExactDimensionCap));
    if (!m.is_integral()) throw ExactnessError("exact_char_poly: matrix has a non-integer entry");

    std::vector<BigInt> a(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a[i * d + j] = BigInt(static_cast<long long>(m(i, j)));

    // M_k = A M_{k-1} + c_{d-k+1} I,  c_{d-k} = -tr(A M_k) / k
    std::vector<BigInt> c(d + 1);
    c[d] = 1;
    std::vector<BigInt> mk(d * d, BigInt(0));
    std::vector<BigInt> next(d * d);
    for (std::size_t k = 1; k <= d; ++k) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                BigInt s = 0;
                for (std::size_t l = 0; l < d; ++l)
                    if (a[i * d + l] != 0 && mk[l * d + j] != 0) s += a[i * d + l] * mk[l * d + j];
                next[i * d + j] = std::move(s);
            }
        for (std::size_t i = 0; i < d; ++i) next[i * d + i] += c[d - k + 1];
        mk.swap(next);
        BigInt trace = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t l = 0; l < d; ++l)
                if (a[i * d + l] != 0) trace += a[i * d + l] * mk[l * d + i];
        c[d - k] = -trace / static_cast<long long>(k);
    }
    return ExactPolynomial(std::move(c));
}

std::vector<double> RootIsolation::values() const {
    std::vector<double> out;
    for (const auto& r : roots) out.insert(out.end(), r.multiplicity, r.value);
    return out;
}

RootIsolation real_roots(const ExactPolynomial& p, double width) {
    if (p.is_zero() || p.degree() == 0) throw DomainError("real_roots: polynomial has degree 0");
    if (!(width > 0.0)) throw DomainError("real_roots: bracket width must be positive");

    RatPoly f = make_monic(to_rational(p.coefficients()));
    RootIsolation out;
    for (const auto& [factor, multiplicity] : square_free_decomposition(f)) {
        const std::vector<BigInt> integral = primitive(factor);
        SturmChain chain(integral);

        // Cauchy bound: every root lies strictly inside (-B, B).
        BigInt lead = mp::abs(integral.back());
        BigInt max_ratio = 0;
        for (std::size_t k = 0; k + 1 < integral.size(); ++k)
            max_ratio = std::max(max_ratio, BigInt(mp::abs(integral[k]) / lead + 1));
        BigInt bound = 1;
        while (bound <= max_ratio + 1) bound <<= 1;

        const std::size_t count =
            chain.variations({-bound, 0}) - chain.variations({bound, 0});
        std::vector<double> found;
        Isolator(chain, width).isolate({-bound, bound, 0}, count, found);
        for (double r : found) out.roots.push_back({r, multiplicity});
        out.nonreal_count += (integral.size() - 1 - count) * multiplicity;
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const RealRoot& x, const RealRoot& y) { return x.value > y.value; });
    return out;
}

std::vector<double> poly_from_roots(std::span<const double> roots) {
    std::vector<double> c{1.0};
    for (double r : roots) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return c;
}

ExactSpectrum exact_spectrum(const DenseMatrix& m, double width) {
    ExactSpectrum out;
    out.polynomial = exact_char_poly(m);
    out.roots = real_roots(out.polynomial, width);
    out.spectrum = Spectrum::from_values(out.roots.values());
    return out;
}

}  // namespace srho
