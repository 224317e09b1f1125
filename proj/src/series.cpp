#include "ppm/series.hpp"

namespace ppm {

TruncatedSeries<MultiPoly> lift(const TruncatedSeries<BigRational>& s) {
    TruncatedSeries<MultiPoly> out(s.order());
    for (int i = 0; i < s.order(); ++i) out.coeff_mut(i) = MultiPoly(s.coeff(i));
    return out;
}

TruncatedSeries<MultiPoly> var_scaled(const TruncatedSeries<BigRational>& s, Var v) {
    TruncatedSeries<MultiPoly> out(s.order());
    for (int i = 0; i < s.order(); ++i) {
        if (s.coeff(i) == 0) continue;
        out.coeff_mut(i) = MultiPoly::monomial(monomial_of(v, i), s.coeff(i));
    }
    return out;
}

TruncatedSeries<BigRational> specialize(const TruncatedSeries<MultiPoly>& s,
                                        const std::map<Var, BigRational>& assignment) {
    TruncatedSeries<BigRational> out(s.order());
    for (int i = 0; i < s.order(); ++i) {
        MultiPoly p = s.coeff(i);
        for (const auto& [v, val] : assignment) p = p.substituted(v, val);
        if (!p.is_constant()) {
            const Var missing = p.variables().front();
            throw std::invalid_argument(std::string("specialize: no assignment for variable ") +
                                        var_name(missing));
        }
        out.coeff_mut(i) = p.constant_term();
    }
    return out;
}

TruncatedSeries<BigRational> x_derivative_at_one(const TruncatedSeries<MultiPoly>& s, Var v) {
    TruncatedSeries<BigRational> out(s.order());
    for (int i = 0; i < s.order(); ++i)
        out.coeff_mut(i) = s.coeff(i).derivative(v).evaluated_all(1);
    return out;
}

TruncatedSeries<BigRational> monomial_slice(const TruncatedSeries<MultiPoly>& s, const Monomial& m) {
    TruncatedSeries<BigRational> out(s.order());
    for (int i = 0; i < s.order(); ++i) out.coeff_mut(i) = s.coeff(i).coefficient(m);
    return out;
}

namespace {

std::string term_str(const std::string& coeff, bool negative, int power, bool first) {
    std::string out;
    if (first) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    if (power == 0) return out + coeff;
    std::string tp = power == 1 ? "t" : "t^" + std::to_string(power);
    if (coeff == "1") return out + tp;
    return out + coeff + "*" + tp;
}

} // namespace

std::string series_str(const TruncatedSeries<BigRational>& s) {
    std::string out;
    bool first = true;
    for (int i = 0; i < s.order(); ++i) {
        BigRational c = s.coeff(i);
        if (c == 0) continue;
        const bool neg = c < 0;
        if (neg) c = -c;
        out += term_str(to_string(c), neg, i, first);
        first = false;
    }
    if (first) return "0";
    return out + " + O(t^" + std::to_string(s.order()) + ")";
}

std::string series_str(const TruncatedSeries<MultiPoly>& s) {
    std::string out;
    bool first = true;
    for (int i = 0; i < s.order(); ++i) {
        const MultiPoly& p = s.coeff(i);
        if (p.is_zero()) continue;
        if (p.is_constant()) {
            BigRational c = p.constant_term();
            const bool neg = c < 0;
            if (neg) c = -c;
            out += term_str(to_string(c), neg, i, first);
        } else if (p.terms().size() == 1) {
            out += term_str(p.str(), false, i, first);
        } else {
            out += term_str("(" + p.str() + ")", false, i, first);
        }
        first = false;
    }
    if (first) return "0";
    return out + " + O(t^" + std::to_string(s.order()) + ")";
}

} // namespace ppm
