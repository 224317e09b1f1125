#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppm/catalog.hpp"
#include "ppm/series.hpp"

#include <random>
#include <stdexcept>

using namespace ppm;

using RS = TruncatedSeries<BigRational>;
using PS = TruncatedSeries<MultiPoly>;

namespace {

RS random_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    RS s(order);
    for (int i = 0; i < order; ++i) s.coeff_mut(i) = BigRational(num(rng), den(rng));
    return s;
}

PS random_poly_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> exp(0, 2);
    PS s(order);
    for (int i = 0; i < order; ++i) {
        MultiPoly p;
        for (int t = 0; t < 3; ++t) {
            Monomial m{};
            m[static_cast<size_t>(Var::x)] = static_cast<std::uint8_t>(exp(rng));
            m[static_cast<size_t>(Var::x2)] = static_cast<std::uint8_t>(exp(rng));
            p += MultiPoly::monomial(m, num(rng));
        }
        s.coeff_mut(i) = p;
    }
    return s;
}

} // namespace

TEST_CASE("basic arithmetic") {
    const int N = 8;
    RS one = RS::one(N), t = RS::t(N);
    RS prod = (one + t) * (one - t);
    CHECK(prod.coeff(0) == 1);
    CHECK(prod.coeff(1) == 0);
    CHECK(prod.coeff(2) == -1);
    for (int i = 3; i < N; ++i) CHECK(prod.coeff(i) == 0);
}

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(20250810);
    const int N = 12;
    for (int trial = 0; trial < 20; ++trial) {
        RS a = random_series(rng, N), b = random_series(rng, N), c = random_series(rng, N);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
    for (int trial = 0; trial < 6; ++trial) {
        PS a = random_poly_series(rng, 8), b = random_poly_series(rng, 8);
        CHECK(a * b == b * a);
        CHECK(a * (b + b) == a * b + a * b);
    }
}

TEST_CASE("division") {
    std::mt19937 rng(7);
    const int N = 12;
    RS one = RS::one(N);

    RS c = catalan(N);
    RS cm1_over_t = div(c - one, RS::t(N));
    const std::vector<int> shifted = {1, 2, 5, 14, 42, 132};
    for (size_t i = 0; i < shifted.size(); ++i)
        CHECK(cm1_over_t.coeff(static_cast<int>(i)) == shifted[i]);

    for (int trial = 0; trial < 10; ++trial) {
        RS a = random_series(rng, N);
        RS b = random_series(rng, N);
        b.coeff_mut(0) = BigRational(trial + 1, 2); // unit constant term
        CHECK(div(a, one) == a);
        CHECK(div(a * b, b) == a);
    }

    RS z(N);
    CHECK_THROWS_AS(div(one, z), std::domain_error);
    // dividend valuation below divisor valuation
    CHECK_THROWS_AS(div(one, RS::t(N)), std::domain_error);
    // non-invertible polynomial leading coefficient
    PS px = PS::constant(MultiPoly::variable(Var::x), 6) + PS::one(6);
    PS bad = PS::constant(MultiPoly::variable(Var::x), 6);
    CHECK_THROWS_AS(div(px, bad), std::domain_error);
}

TEST_CASE("sqrt_one_plus") {
    const int N = 12;
    RS a = RS::one(N);
    a.coeff_mut(1) = -4;
    RS s = sqrt_one_plus(a);
    const std::vector<int> expected = {1, -2, -2, -4, -10, -28, -84};
    for (size_t i = 0; i < expected.size(); ++i)
        CHECK(s.coeff(static_cast<int>(i)) == expected[i]);
    CHECK(s * s == a);

    CHECK(sqrt_one_plus(RS::one(N)) == RS::one(N));

    std::mt19937 rng(99);
    for (int trial = 0; trial < 8; ++trial) {
        RS r = random_series(rng, 10);
        r.coeff_mut(0) = 1;
        RS root = sqrt_one_plus(r);
        CHECK(root * root == r);
    }

    // in the polynomial ring: sqrt(1 - 4 x t)^2 = 1 - 4 x t
    PS m = PS::one(10);
    m.coeff_mut(1) = MultiPoly::variable(Var::x).scaled(-4);
    PS ms = sqrt_one_plus(m);
    CHECK(ms * ms == m);
    CHECK(ms.coeff(0) == MultiPoly(1));

    RS bad = RS::one(6);
    bad.coeff_mut(0) = 2;
    CHECK_THROWS_AS(sqrt_one_plus(bad), std::domain_error);
}

TEST_CASE("coefficient access and truncation") {
    RS c = catalan(6);
    CHECK_THROWS_AS(c.coeff(6), std::domain_error);
    CHECK(c.truncated(3).order() == 3);
    RS z(5);
    for (int i = 0; i < 5; ++i) CHECK(z.coeff(i) == 0);
}

TEST_CASE("catalan functional equation to order 20") {
    const int N = 20;
    RS c = catalan(N);
    CHECK(RS::one(N) + RS::t(N) * c * c == c);
    // c * t * c + 1 = c as well
    CHECK(c * RS::t(N) * c + RS::one(N) == c);
}

TEST_CASE("specialize / derivative / slices") {
    const int N = 10;
    PS cx = var_scaled(catalan(N), Var::x); // C(xt)
    RS back = specialize(cx, {{Var::x, 1}});
    CHECK(back == catalan(N));

    CHECK_THROWS_AS(specialize(cx, std::map<Var, BigRational>{}), std::invalid_argument);

    // d/dx C(xt) at 1: coefficient n is n * C_n
    RS d = x_derivative_at_one(cx, Var::x);
    RS c = catalan(N);
    for (int n = 0; n < N; ++n) CHECK(d.coeff(n) == BigRational(n) * c.coeff(n));

    // derivative in an absent variable vanishes
    CHECK(x_derivative_at_one(cx, Var::x3).is_zero());

    RS sl = monomial_slice(cx, monomial_of(Var::x, 2));
    for (int n = 0; n < N; ++n) CHECK(sl.coeff(n) == (n == 2 ? c.coeff(2) : 0));

    // specializing a rational series lifted to the polynomial ring is a no-op
    CHECK(specialize(lift(c), {{Var::x, 1}}) == c);
}

TEST_CASE("printing") {
    RS c = catalan(3);
    CHECK(series_str(c) == "1 + t + 2*t^2 + O(t^3)");
    PS f(3);
    f.coeff_mut(0) = MultiPoly(1);
    f.coeff_mut(2) = MultiPoly::variable(Var::x) + MultiPoly(5);
    CHECK(series_str(f) == "1 + (x + 5)*t^2 + O(t^3)");
    CHECK(series_str(RS(4)) == "0");
}
