#pragma once

#include "ppm/multipoly.hpp"
#include "ppm/numeric.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppm {

// Coefficient-ring glue for TruncatedSeries. A "unit" is a ring element the
// series division may divide by: any nonzero rational, or a nonzero constant
// polynomial.
template <typename R> struct SeriesRing;

template <> struct SeriesRing<BigRational> {
    static BigRational zero() { return BigRational(0); }
    static BigRational one() { return BigRational(1); }
    static bool is_zero(const BigRational& a) { return a == 0; }
    static bool is_unit(const BigRational& a) { return a != 0; }
    static BigRational divide_by_unit(const BigRational& a, const BigRational& u) { return a / u; }
    static BigRational scale(const BigRational& a, const BigRational& c) { return a * c; }
};

template <> struct SeriesRing<MultiPoly> {
    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly one() { return MultiPoly(1); }
    static bool is_zero(const MultiPoly& a) { return a.is_zero(); }
    static bool is_unit(const MultiPoly& a) { return a.is_constant() && a.constant_term() != 0; }
    static MultiPoly divide_by_unit(const MultiPoly& a, const MultiPoly& u) {
        return a.scaled(1 / u.constant_term());
    }
    static MultiPoly scale(const MultiPoly& a, const BigRational& c) { return a.scaled(c); }
};

/**
 * Formal power series in t truncated at t^order (exclusive), with exact
 * coefficients in R. All arithmetic is exact modulo t^order; binary
 * operations truncate to the smaller operand order.
 */
template <typename R>
class TruncatedSeries {
public:
    using Ring = SeriesRing<R>;

    explicit TruncatedSeries(int order) : coeffs_(check_order(order), Ring::zero()) {}

    static TruncatedSeries constant(const R& c, int order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }
    static TruncatedSeries one(int order) { return constant(Ring::one(), order); }
    // The series t.
    static TruncatedSeries t(int order) {
        TruncatedSeries s(order);
        if (order > 1) s.coeffs_[1] = Ring::one();
        return s;
    }
    static TruncatedSeries from_coefficients(std::vector<R> coeffs) {
        TruncatedSeries s(static_cast<int>(coeffs.size()));
        s.coeffs_ = std::move(coeffs);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()); }

    const R& coeff(int n) const {
        if (n < 0 || n >= order())
            throw std::domain_error("series coefficient " + std::to_string(n) +
                                    " beyond truncation order " + std::to_string(order()));
        return coeffs_[static_cast<size_t>(n)];
    }

    R& coeff_mut(int n) { return coeffs_[static_cast<size_t>(n)]; }

    // Index of the first nonzero coefficient; order() for the zero series.
    int valuation() const {
        for (int i = 0; i < order(); ++i)
            if (!Ring::is_zero(coeffs_[static_cast<size_t>(i)])) return i;
        return order();
    }

    bool is_zero() const { return valuation() == order(); }

    TruncatedSeries truncated(int new_order) const {
        TruncatedSeries out(new_order);
        for (int i = 0; i < std::min(order(), new_order); ++i)
            out.coeffs_[static_cast<size_t>(i)] = coeffs_[static_cast<size_t>(i)];
        return out;
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        const int n = std::min(order(), o.order());
        TruncatedSeries out(n);
        for (int i = 0; i < n; ++i)
            out.coeffs_[static_cast<size_t>(i)] =
                coeffs_[static_cast<size_t>(i)] + o.coeffs_[static_cast<size_t>(i)];
        return out;
    }

    TruncatedSeries operator-(const TruncatedSeries& o) const {
        const int n = std::min(order(), o.order());
        TruncatedSeries out(n);
        for (int i = 0; i < n; ++i)
            out.coeffs_[static_cast<size_t>(i)] =
                coeffs_[static_cast<size_t>(i)] - o.coeffs_[static_cast<size_t>(i)];
        return out;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries out(order());
        for (int i = 0; i < order(); ++i)
            out.coeffs_[static_cast<size_t>(i)] = Ring::zero() - coeffs_[static_cast<size_t>(i)];
        return out;
    }

    TruncatedSeries operator*(const TruncatedSeries& o) const {
        const int n = std::min(order(), o.order());
        TruncatedSeries out(n);
        for (int i = 0; i < n && i < order(); ++i) {
            const R& a = coeffs_[static_cast<size_t>(i)];
            if (Ring::is_zero(a)) continue;
            for (int j = 0; i + j < n && j < o.order(); ++j) {
                const R& b = o.coeffs_[static_cast<size_t>(j)];
                if (Ring::is_zero(b)) continue;
                out.coeffs_[static_cast<size_t>(i + j)] += a * b;
            }
        }
        return out;
    }

    TruncatedSeries scaled(const BigRational& c) const {
        TruncatedSeries out(order());
        for (int i = 0; i < order(); ++i)
            out.coeffs_[static_cast<size_t>(i)] = Ring::scale(coeffs_[static_cast<size_t>(i)], c);
        return out;
    }

    // Multiply by t^k (coefficients past the order fall off).
    TruncatedSeries shifted(int k) const {
        TruncatedSeries out(order());
        for (int i = 0; i + k < order(); ++i)
            out.coeffs_[static_cast<size_t>(i + k)] = coeffs_[static_cast<size_t>(i)];
        return out;
    }

    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

private:
    static int check_order(int order) {
        if (order < 1) throw std::invalid_argument("series order must be >= 1");
        return order;
    }
    std::vector<R> coeffs_;
};

/**
 * a / b. When b has valuation v > 0, a must too (exact division by t^v);
 * both operands are shifted down and the result order shrinks by v. After
 * the shift the divisor's constant term must be a unit of the ring --
 * anything else signals a misencoded closed form.
 */
template <typename R>
TruncatedSeries<R> div(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    using Ring = SeriesRing<R>;
    const int v = b.valuation();
    if (v == b.order()) throw std::domain_error("series division by zero");
    if (v > 0 && a.valuation() < v)
        throw std::domain_error("series division: dividend valuation below divisor valuation");
    const int n = std::min(a.order(), b.order()) - v;
    if (n < 1) throw std::domain_error("series division: no precision left after t^k shift");
    const R& lead = b.coeff(v);
    if (!Ring::is_unit(lead))
        throw std::domain_error("series division: leading coefficient is not invertible "
                                "(formula transcription error)");
    TruncatedSeries<R> q(n);
    for (int k = 0; k < n; ++k) {
        R acc = a.coeff(k + v);
        for (int i = 1; i <= k; ++i) {
            const R& bi = b.coeff(i + v);
            if (Ring::is_zero(bi)) continue;
            acc = acc - bi * q.coeff(k - i);
        }
        q.coeff_mut(k) = Ring::divide_by_unit(acc, lead);
    }
    return q;
}

/**
 * Square root of a series with constant term exactly 1, by Newton iteration
 * y <- (y + a/y) / 2 with doubling working precision. The iteration stays in
 * the rational (or rational-coefficient polynomial) ring throughout.
 */
template <typename R>
TruncatedSeries<R> sqrt_one_plus(const TruncatedSeries<R>& a) {
    using Ring = SeriesRing<R>;
    if (!(a.coeff(0) == Ring::one()))
        throw std::domain_error("series sqrt: constant term must be exactly 1");
    const int n = a.order();
    TruncatedSeries<R> y = TruncatedSeries<R>::one(1);
    int prec = 1;
    while (prec < n) {
        prec = std::min(2 * prec, n);
        TruncatedSeries<R> yext = y.truncated(prec);
        y = (yext + div(a.truncated(prec), yext)).scaled(BigRational(1, 2));
    }
    return y;
}

// --- conversions between the rational and polynomial coefficient rings ---

TruncatedSeries<MultiPoly> lift(const TruncatedSeries<BigRational>& s);

// Coefficient n becomes c_n * v^n; turns C(t) into C(v t).
TruncatedSeries<MultiPoly> var_scaled(const TruncatedSeries<BigRational>& s, Var v);

// Evaluate every polynomial coefficient; throws if a variable present in the
// series has no assignment.
TruncatedSeries<BigRational> specialize(const TruncatedSeries<MultiPoly>& s,
                                        const std::map<Var, BigRational>& assignment);

// (d/dv applied coefficient-wise), then all variables evaluated at 1.
TruncatedSeries<BigRational> x_derivative_at_one(const TruncatedSeries<MultiPoly>& s, Var v);

// Per-t-power coefficient of an exact monomial over all marking variables
// (variables outside the monomial contribute only exponent-0 terms).
TruncatedSeries<BigRational> monomial_slice(const TruncatedSeries<MultiPoly>& s, const Monomial& m);

std::string series_str(const TruncatedSeries<BigRational>& s);
std::string series_str(const TruncatedSeries<MultiPoly>& s);

} // namespace ppm
