#pragma once

#include "ppm/numeric.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ppm {

// Marking variables. x is the single-variable marker (F1..F6, FS4, the
// Catalan triangle); x1..x6 mark P1..P6 in the joint generating functions.
enum class Var : std::uint8_t { x = 0, x1, x2, x3, x4, x5, x6 };

constexpr int kNumVars = 7;

const char* var_name(Var v);
std::optional<Var> parse_var(std::string_view name);

// Exponent vector over (x, x1..x6).
using Monomial = std::array<std::uint8_t, kNumVars>;

Monomial monomial_one();
Monomial monomial_of(Var v, int exponent = 1);

/**
 * Sparse multivariate polynomial in x, x1..x6 with exact rational
 * coefficients. Zero coefficients are never stored.
 */
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(int c) : MultiPoly(BigRational(c)) {}
    MultiPoly(const BigRational& c);
    static MultiPoly variable(Var v);
    static MultiPoly monomial(const Monomial& m, const BigRational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The constant (degree-0) coefficient.
    BigRational constant_term() const;

    BigRational coefficient(const Monomial& m) const;
    // Coefficient of v^k, a polynomial in the remaining variables.
    MultiPoly coefficient_of(Var v, int k) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);

    MultiPoly scaled(const BigRational& c) const;

    MultiPoly derivative(Var v) const;
    // Substitute a rational for one variable.
    MultiPoly substituted(Var v, const BigRational& value) const;
    // Rename a variable; exponents merge additively when the target occurs.
    MultiPoly renamed(Var from, Var to) const;
    // Evaluate with every variable set to the same value.
    BigRational evaluated_all(const BigRational& value) const;

    bool uses(Var v) const;
    std::vector<Var> variables() const;
    int total_degree() const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    // "x2^2*x5 + 3*x2 + 14" with terms in a fixed deterministic order.
    std::string str() const;

    const std::map<Monomial, BigRational>& terms() const { return terms_; }

private:
    void add_term(const Monomial& m, const BigRational& c);
    std::map<Monomial, BigRational> terms_;
};

} // namespace ppm
