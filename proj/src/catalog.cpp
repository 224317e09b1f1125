#include "ppm/catalog.hpp"

#include <stdexcept>

namespace ppm {

namespace {

using RS = TruncatedSeries<BigRational>;
using PS = TruncatedSeries<MultiPoly>;

RS sqrt_1m4t(int order) {
    RS a = RS::one(order);
    if (order > 1) a.coeff_mut(1) = BigRational(-4);
    return sqrt_one_plus(a);
}

RS sqrt_1m6tpt2(int order) {
    RS a = RS::one(order);
    if (order > 1) a.coeff_mut(1) = BigRational(-6);
    if (order > 2) a.coeff_mut(2) = BigRational(1);
    return sqrt_one_plus(a);
}

PS var_series(Var v, int order) { return PS::constant(MultiPoly::variable(v), order); }

// C(v t): coefficient n is C_n v^n.
PS catalan_at(Var v, int order) { return var_scaled(catalan(order), v); }

// Catalan triangle with marking variable v.
PS catalan_triangle_at(Var v, int order) {
    RS s = sqrt_1m4t(order);
    PS num = lift(RS::one(order) - s);
    PS den = (lift(s) - PS::one(order)) * var_series(v, order) + PS::constant(MultiPoly(2), order);
    return PS::one(order) + div(num, den);
}

// Marking variables may be overridden (e.g. all set to x) so the diagonal
// specializations F(x,...,x,t) build directly in the univariate ring.
PS build_named(GFName name, int order, const std::vector<Var>& vars) {
    const int n = order;
    const PS one = PS::one(n);
    const PS t = PS::t(n);
    auto v = [&](size_t i) { return vars.at(i); };
    switch (name) {
    case GFName::F1:
    case GFName::F6: {
        // (C(t)-1)/t * 1/(1 - (C(xt)-1)(C(t)-1)); the published radical
        // denominator has constant term 2x, so this equivalent form is used.
        RS c = catalan(n + 1);
        RS a = div(c - RS::one(n + 1), RS::t(n + 1)); // order n
        PS cm1 = lift(c.truncated(n)) - one;
        PS b = (catalan_at(v(0), n) - one) * cm1;
        return div(lift(a), one - b);
    }
    case GFName::F2:
    case GFName::F5: {
        // -(s-1)(s x - s - x + 3) / (2 (s x t - x t - s t + 5 t + s - 1))
        PS s = lift(sqrt_1m4t(n + 1));
        PS one1 = PS::one(n + 1), t1 = PS::t(n + 1);
        PS x = var_series(v(0), n + 1);
        PS num = -((s - one1) * (s * x - s - x + PS::constant(MultiPoly(3), n + 1)));
        PS den = (s * x * t1 - x * t1 - s * t1 + t1.scaled(5) + s - one1).scaled(2);
        return div(num, den); // both sides have valuation 1; order drops to n
    }
    case GFName::F3:
    case GFName::F4: {
        // 2 / (2t(x-1) + (s-1)x + s + 1)
        PS s = lift(sqrt_1m4t(n));
        PS x = var_series(v(0), n);
        PS den = (t * (x - one)).scaled(2) + (s - one) * x + s + one;
        return div(one.scaled(2), den);
    }
    case GFName::F16: {
        // 1 / (1 - t C(x1 t) - t C(x6 t)); the published denominator is
        // 2 x1 x6 times this one.
        PS den = one - t * catalan_at(v(0), n) - t * catalan_at(v(1), n);
        return div(one, den);
    }
    case GFName::F25: {
        // C(x2,t) C(x5,t) / (1 - (C(x2,t)-1)(C(x5,t)-1))
        PS a = catalan_triangle_at(v(0), n) - one;
        PS b = catalan_triangle_at(v(1), n) - one;
        return div((a + one) * (b + one), one - a * b);
    }
    case GFName::F34: {
        PS c = lift(catalan(n));
        PS cm1 = c - one;
        PS x3 = var_series(v(0), n), x4 = var_series(v(1), n);
        PS g = div(cm1 * (x4 * cm1 + one), one - x3 * x4 * cm1 * cm1);
        return c + (one + x3 * cm1) * g;
    }
    case GFName::F24: {
        PS a = catalan_triangle_at(v(0), n) - one;
        PS cm1 = lift(catalan(n)) - one;
        PS x4 = var_series(v(1), n);
        PS g = div(a * (x4 * cm1 + one), one - x4 * a * cm1);
        return (cm1 + one) * (g + one);
    }
    case GFName::F2345: {
        PS a = catalan_triangle_at(v(0), n) - one;
        PS b = catalan_triangle_at(v(3), n) - one;
        PS x3 = var_series(v(1), n), x4 = var_series(v(2), n);
        PS g = div(a * (x4 * b + one), one - x3 * x4 * a * b);
        return (b + one) * (x3 * g + one) + (one - x3) * g;
    }
    case GFName::FS4: {
        // 2 / (3 + S + 2(x-1)/(1-t) + t(x-1) - 3x + S x), S = sqrt(1-6t+t^2)
        PS s = lift(sqrt_1m6tpt2(n));
        PS x = var_series(v(0), n);
        PS inv1mt = div(one, one - t);
        PS den = PS::constant(MultiPoly(3), n) + s + (x - one).scaled(2) * inv1mt + t * (x - one) -
                 x.scaled(3) + s * x;
        return div(one.scaled(2), den);
    }
    case GFName::C: return lift(catalan(n));
    case GFName::Cxt: return catalan_triangle_at(vars.empty() ? Var::x : vars.front(), n);
    case GFName::D: return lift(schroder(n));
    case GFName::Dlittle: return lift(little_schroder(n));
    }
    throw std::logic_error("build: unknown generating function");
}

// Solve G = g(G,H), H = h(G,H) by iteration; every catalog system is a
// t-adic contraction (each feedback term carries a factor of valuation >= 1).
template <typename FG, typename FH>
std::pair<PS, PS> solve_gh(int order, FG g, FH h) {
    PS G(order), H(order);
    for (int i = 0; i <= order + 1; ++i) {
        PS Gn = g(G, H);
        PS Hn = h(G, H);
        if (Gn == G && Hn == H) return {G, H};
        G = Gn;
        H = Hn;
    }
    throw std::logic_error("solve_gh: fixed point did not stabilize");
}

template <typename FF>
PS solve_fixed_point(int order, FF f) {
    PS F(order);
    for (int i = 0; i <= order + 1; ++i) {
        PS Fn = f(F);
        if (Fn == F) return F;
        F = Fn;
    }
    throw std::logic_error("solve_fixed_point: did not stabilize");
}

PS recurrence_named(GFName name, int order, const std::vector<Var>& vars) {
    const int n = order;
    const PS one = PS::one(n);
    const PS t = PS::t(n);
    auto v = [&](size_t i) { return vars.at(i); };
    switch (name) {
    case GFName::F1:
    case GFName::F6: {
        RS c = catalan(n + 1);
        PS a = lift(div(c - RS::one(n + 1), RS::t(n + 1)));
        PS b = (catalan_at(v(0), n) - one) * (lift(c.truncated(n)) - one);
        return solve_fixed_point(n, [&](const PS& F) { return a + b * F; });
    }
    case GFName::F2:
    case GFName::F5: {
        PS a = catalan_triangle_at(v(0), n) - one;
        PS cm1 = lift(catalan(n)) - one;
        auto [G, H] = solve_gh(
            n, [&](const PS&, const PS& H) { return a * (H + one); },
            [&](const PS& G, const PS&) { return cm1 * (G + one); });
        return one + G + H;
    }
    case GFName::F3:
    case GFName::F4: {
        PS cm1 = lift(catalan(n)) - one;
        PS x = var_series(v(0), n);
        auto [G, H] = solve_gh(
            n, [&](const PS&, const PS& H) { return cm1 * (H + one); },
            [&](const PS& G, const PS&) { return cm1 * (x * G + one); });
        return one + G + H;
    }
    case GFName::F16: {
        PS inv = div(one, one - t.scaled(2));
        PS b = t * inv *
               (catalan_at(v(0), n) + catalan_at(v(1), n) - PS::constant(MultiPoly(2), n));
        return solve_fixed_point(n, [&](const PS& F) { return inv + b * F; });
    }
    case GFName::F25: {
        PS a2 = catalan_triangle_at(v(0), n) - one;
        PS a5 = catalan_triangle_at(v(1), n) - one;
        auto [G, H] = solve_gh(
            n, [&](const PS&, const PS& H) { return a2 * (H + one); },
            [&](const PS& G, const PS&) { return a5 * (G + one); });
        return one + G + H;
    }
    case GFName::F34: {
        PS cm1 = lift(catalan(n)) - one;
        PS x3 = var_series(v(0), n), x4 = var_series(v(1), n);
        auto [G, H] = solve_gh(
            n, [&](const PS&, const PS& H) { return cm1 * (x4 * H + one); },
            [&](const PS& G, const PS&) { return cm1 * (x3 * G + one); });
        return one + G + H;
    }
    case GFName::F24: {
        PS a2 = catalan_triangle_at(v(0), n) - one;
        PS cm1 = lift(catalan(n)) - one;
        PS x4 = var_series(v(1), n);
        auto [G, H] = solve_gh(
            n, [&](const PS&, const PS& H) { return a2 * (x4 * H + one); },
            [&](const PS& G, const PS&) { return cm1 * (G + one); });
        return one + G + H;
    }
    case GFName::F2345: {
        PS a2 = catalan_triangle_at(v(0), n) - one;
        PS a5 = catalan_triangle_at(v(3), n) - one;
        PS x3 = var_series(v(1), n), x4 = var_series(v(2), n);
        auto [G, H] = solve_gh(
            n, [&](const PS&, const PS& H) { return a2 * (x4 * H + one); },
            [&](const PS& G, const PS&) { return a5 * (x3 * G + one); });
        return one + G + H;
    }
    case GFName::FS4: {
        PS d = lift(schroder(n));
        PS dl = lift(little_schroder(n));
        PS inv1mt = div(one, one - t);
        PS x = var_series(v(0), n);
        auto [G, H] = solve_gh(
            n,
            [&](const PS&, const PS& H) {
                return (d - inv1mt) * (x * H + one) + t * inv1mt * (H + one);
            },
            [&](const PS& G, const PS&) { return (dl - one) * (G + one); });
        return one + G + H;
    }
    case GFName::C: {
        // C_n = sum C_i C_{n-1-i}
        RS c(n);
        c.coeff_mut(0) = 1;
        for (int k = 1; k < n; ++k) {
            BigRational acc = 0;
            for (int i = 0; i < k; ++i) acc += c.coeff(i) * c.coeff(k - 1 - i);
            c.coeff_mut(k) = acc;
        }
        return lift(c);
    }
    case GFName::Cxt: {
        // sequence of primitive arches: 1 + tC / (1 - x tC)
        PS r = t * lift(catalan(n));
        const Var xv = vars.empty() ? Var::x : vars.front();
        return one + div(r, one - var_series(xv, n) * r);
    }
    case GFName::D: {
        // D = 1 + tD + tD^2
        return solve_fixed_point(n, [&](const PS& F) { return one + t * F + t * F * F; });
    }
    case GFName::Dlittle: {
        // 2 Dlittle = D + 1
        PS d = recurrence_named(GFName::D, n, {});
        return (d + one).scaled(BigRational(1, 2));
    }
    }
    throw std::logic_error("build_by_recurrence: unknown generating function");
}

} // namespace

const std::vector<GFName>& all_gf_names() {
    static const std::vector<GFName> names = {
        GFName::F1,  GFName::F2,  GFName::F3,  GFName::F4,  GFName::F5,  GFName::F6,
        GFName::F16, GFName::F25, GFName::F34, GFName::F24, GFName::F2345,
        GFName::FS4, GFName::C,   GFName::Cxt, GFName::D,   GFName::Dlittle,
    };
    return names;
}

std::string gf_name_str(GFName name) {
    switch (name) {
    case GFName::F1: return "F1";
    case GFName::F2: return "F2";
    case GFName::F3: return "F3";
    case GFName::F4: return "F4";
    case GFName::F5: return "F5";
    case GFName::F6: return "F6";
    case GFName::F16: return "F16";
    case GFName::F25: return "F25";
    case GFName::F34: return "F34";
    case GFName::F24: return "F24";
    case GFName::F2345: return "F2345";
    case GFName::FS4: return "FS4";
    case GFName::C: return "C";
    case GFName::Cxt: return "Cxt";
    case GFName::D: return "D";
    case GFName::Dlittle: return "Dlittle";
    }
    return "?";
}

std::optional<GFName> parse_gf_name(std::string_view text) {
    for (GFName n : all_gf_names())
        if (gf_name_str(n) == text) return n;
    return std::nullopt;
}

std::vector<Var> gf_variables(GFName name) {
    std::vector<Var> vars;
    for (auto& [p, v] : gf_patterns(name)) vars.push_back(v);
    if (name == GFName::Cxt) vars.push_back(Var::x);
    return vars;
}

std::vector<std::pair<PairedPattern, Var>> gf_patterns(GFName name) {
    auto pat = [](int i) { return PairedPattern::canonical_pattern(i); };
    switch (name) {
    case GFName::F1: return {{pat(1), Var::x}};
    case GFName::F2: return {{pat(2), Var::x}};
    case GFName::F3: return {{pat(3), Var::x}};
    case GFName::F4: return {{pat(4), Var::x}};
    case GFName::F5: return {{pat(5), Var::x}};
    case GFName::F6: return {{pat(6), Var::x}};
    case GFName::F16: return {{pat(1), Var::x1}, {pat(6), Var::x6}};
    case GFName::F25: return {{pat(2), Var::x2}, {pat(5), Var::x5}};
    case GFName::F34: return {{pat(3), Var::x3}, {pat(4), Var::x4}};
    case GFName::F24: return {{pat(2), Var::x2}, {pat(4), Var::x4}};
    case GFName::F2345:
        return {{pat(2), Var::x2}, {pat(3), Var::x3}, {pat(4), Var::x4}, {pat(5), Var::x5}};
    case GFName::FS4: return {{pat(4), Var::x}};
    default: return {};
    }
}

PathKind gf_path_kind(GFName name) {
    switch (name) {
    case GFName::FS4:
    case GFName::D:
    case GFName::Dlittle: return PathKind::delannoy;
    default: return PathKind::lattice;
    }
}

TruncatedSeries<BigRational> catalan(int order) {
    RS s = sqrt_1m4t(order + 1);
    RS num = RS::one(order + 1) - s; // valuation 1
    return div(num, RS::t(order + 1).scaled(2));
}

TruncatedSeries<MultiPoly> catalan_triangle(int order) { return catalan_triangle_at(Var::x, order); }

TruncatedSeries<BigRational> schroder(int order) {
    RS s = sqrt_1m6tpt2(order + 1);
    RS num = RS::one(order + 1) - RS::t(order + 1) - s;
    return div(num, RS::t(order + 1).scaled(2));
}

TruncatedSeries<BigRational> little_schroder(int order) {
    RS s = sqrt_1m6tpt2(order + 1);
    RS num = RS::one(order + 1) + RS::t(order + 1) - s;
    return div(num, RS::t(order + 1).scaled(4));
}

TruncatedSeries<MultiPoly> build(GFName name, int order) {
    return build_named(name, order, gf_variables(name));
}

TruncatedSeries<MultiPoly> build_by_recurrence(GFName name, int order) {
    return recurrence_named(name, order, gf_variables(name));
}

TruncatedSeries<MultiPoly> exactly_k(GFName name, Var v, int k, int order) {
    if (k >= order) throw std::domain_error("exactly_k: k must be below the truncation order");
    PS f = build(name, order);
    PS out(order);
    for (int i = 0; i < order; ++i) out.coeff_mut(i) = f.coeff(i).coefficient_of(v, k);
    return out;
}

TruncatedSeries<BigRational> gf_slice(GFName name, const Monomial& m, int order) {
    return monomial_slice(build(name, order), m);
}

TruncatedSeries<MultiPoly> diagonal(GFName name, int order) {
    std::vector<Var> all_x(gf_variables(name).size(), Var::x);
    return build_named(name, order, all_x);
}

ParityPair parity(GFName name, const std::vector<Var>& flip, int order) {
    PS f = build(name, order);
    std::map<Var, BigRational> plus, minus;
    for (Var v : gf_variables(name)) {
        plus[v] = 1;
        minus[v] = 1;
    }
    for (Var v : flip.empty() ? gf_variables(name) : flip) minus[v] = -1;
    RS fp = specialize(f, plus);
    RS fm = specialize(f, minus);
    return {(fp + fm).scaled(BigRational(1, 2)), (fp - fm).scaled(BigRational(1, 2))};
}

TruncatedSeries<BigRational> expectation_numerators(GFName name, int order) {
    // d/dx of the diagonal F(x,...,x,t) at x = 1 equals the sum of the
    // single-variable derivatives at all-ones.
    PS f = diagonal(name, order);
    return x_derivative_at_one(f, Var::x);
}

BigInt path_count(GFName name, int n) {
    return gf_path_kind(name) == PathKind::delannoy ? central_delannoy(n) : binomial(2 * n, n);
}

std::vector<BigRational> expectation(GFName name, int order) {
    RS num = expectation_numerators(name, order);
    std::vector<BigRational> out;
    out.reserve(static_cast<size_t>(order));
    for (int n = 0; n < order; ++n)
        out.push_back(num.coeff(n) / BigRational(path_count(name, n)));
    return out;
}

TruncatedSeries<MultiPoly> substitute_var(const TruncatedSeries<MultiPoly>& s, Var v,
                                          const BigRational& value) {
    PS out(s.order());
    for (int i = 0; i < s.order(); ++i) out.coeff_mut(i) = s.coeff(i).substituted(v, value);
    return out;
}

TruncatedSeries<MultiPoly> rename_var(const TruncatedSeries<MultiPoly>& s, Var from, Var to) {
    PS out(s.order());
    for (int i = 0; i < s.order(); ++i) out.coeff_mut(i) = s.coeff(i).renamed(from, to);
    return out;
}

} // namespace ppm
