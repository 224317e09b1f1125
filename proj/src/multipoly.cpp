#include "ppm/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ppm {

const char* var_name(Var v) {
    static const char* names[kNumVars] = {"x", "x1", "x2", "x3", "x4", "x5", "x6"};
    return names[static_cast<size_t>(v)];
}

std::optional<Var> parse_var(std::string_view name) {
    for (int i = 0; i < kNumVars; ++i)
        if (name == var_name(static_cast<Var>(i))) return static_cast<Var>(i);
    return std::nullopt;
}

Monomial monomial_one() { return Monomial{}; }

Monomial monomial_of(Var v, int exponent) {
    Monomial m{};
    m[static_cast<size_t>(v)] = static_cast<std::uint8_t>(exponent);
    return m;
}

MultiPoly::MultiPoly(const BigRational& c) {
    if (c != 0) terms_.emplace(monomial_one(), c);
}

MultiPoly MultiPoly::variable(Var v) { return monomial(monomial_of(v), 1); }

MultiPoly MultiPoly::monomial(const Monomial& m, const BigRational& c) {
    MultiPoly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == monomial_one());
}

BigRational MultiPoly::constant_term() const {
    auto it = terms_.find(monomial_one());
    return it == terms_.end() ? BigRational(0) : it->second;
}

BigRational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRational(0) : it->second;
}

MultiPoly MultiPoly::coefficient_of(Var v, int k) const {
    MultiPoly out;
    const size_t vi = static_cast<size_t>(v);
    for (const auto& [m, c] : terms_) {
        if (m[vi] == k) {
            Monomial rest = m;
            rest[vi] = 0;
            out.add_term(rest, c);
        }
    }
    return out;
}

void MultiPoly::add_term(const Monomial& m, const BigRational& c) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    out += o;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    out -= o;
    return out;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            for (int i = 0; i < kNumVars; ++i) {
                const int s = ma[static_cast<size_t>(i)] + mb[static_cast<size_t>(i)];
                if (s > 255) throw std::overflow_error("MultiPoly: exponent overflow");
                m[static_cast<size_t>(i)] = static_cast<std::uint8_t>(s);
            }
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::scaled(const BigRational& c) const {
    MultiPoly out;
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

MultiPoly MultiPoly::derivative(Var v) const {
    MultiPoly out;
    const size_t vi = static_cast<size_t>(v);
    for (const auto& [m, c] : terms_) {
        if (m[vi] == 0) continue;
        Monomial d = m;
        d[vi] -= 1;
        out.add_term(d, c * m[vi]);
    }
    return out;
}

MultiPoly MultiPoly::substituted(Var v, const BigRational& value) const {
    MultiPoly out;
    const size_t vi = static_cast<size_t>(v);
    for (const auto& [m, c] : terms_) {
        BigRational coeff = c;
        for (int e = 0; e < m[vi]; ++e) coeff *= value;
        Monomial rest = m;
        rest[vi] = 0;
        out.add_term(rest, coeff);
    }
    return out;
}

MultiPoly MultiPoly::renamed(Var from, Var to) const {
    if (from == to) return *this;
    MultiPoly out;
    const size_t fi = static_cast<size_t>(from), ti = static_cast<size_t>(to);
    for (const auto& [m, c] : terms_) {
        Monomial r = m;
        const int s = r[ti] + r[fi];
        if (s > 255) throw std::overflow_error("MultiPoly::renamed: exponent overflow");
        r[ti] = static_cast<std::uint8_t>(s);
        r[fi] = 0;
        out.add_term(r, c);
    }
    return out;
}

BigRational MultiPoly::evaluated_all(const BigRational& value) const {
    BigRational total = 0;
    for (const auto& [m, c] : terms_) {
        BigRational term = c;
        for (int i = 0; i < kNumVars; ++i)
            for (int e = 0; e < m[static_cast<size_t>(i)]; ++e) term *= value;
        total += term;
    }
    return total;
}

bool MultiPoly::uses(Var v) const {
    const size_t vi = static_cast<size_t>(v);
    return std::any_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.first[vi] != 0; });
}

std::vector<Var> MultiPoly::variables() const {
    std::vector<Var> out;
    for (int i = 0; i < kNumVars; ++i)
        if (uses(static_cast<Var>(i))) out.push_back(static_cast<Var>(i));
    return out;
}

int MultiPoly::total_degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (int i = 0; i < kNumVars; ++i) d += m[static_cast<size_t>(i)];
        deg = std::max(deg, d);
    }
    return deg;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    // highest total degree first, then reverse-lex on exponents, constants last
    std::vector<std::pair<Monomial, BigRational>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (int i = 0; i < kNumVars; ++i) {
            da += a.first[static_cast<size_t>(i)];
            db += b.first[static_cast<size_t>(i)];
        }
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : items) {
        BigRational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string vars;
        for (int i = 0; i < kNumVars; ++i) {
            const int e = m[static_cast<size_t>(i)];
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += var_name(static_cast<Var>(i));
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << vars;
        }
    }
    return os.str();
}

} // namespace ppm
