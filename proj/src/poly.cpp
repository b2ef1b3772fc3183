#include "momentlab/poly.hpp"

#include <algorithm>
#include <cctype>

namespace momentlab {

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    return {std::max(a.i, b.i), std::max(a.j, b.j)};
}

std::string Monomial::str() const {
    if (i == 0 && j == 0) return "1";
    std::string s;
    if (i > 0) {
        s += "x";
        if (i > 1) s += "^" + std::to_string(i);
    }
    if (j > 0) {
        if (!s.empty()) s += "*";
        s += "y";
        if (j > 1) s += "^" + std::to_string(j);
    }
    return s;
}

std::strong_ordering compareMonomials(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    switch (ord) {
        case MonomialOrder::GradedLex: {
            if (auto c = a.degree() <=> b.degree(); c != 0) return c;
            return a.j <=> b.j;  // within a degree y-heavy monomials are larger
        }
        case MonomialOrder::Lex: {
            if (auto c = a.i <=> b.i; c != 0) return c;
            return a.j <=> b.j;
        }
    }
    return std::strong_ordering::equal;
}

std::vector<Monomial> monomialsUpToDegree(int d) {
    std::vector<Monomial> out;
    for (int deg = 0; deg <= d; ++deg)
        for (int j = 0; j <= deg; ++j) out.push_back({deg - j, j});
    return out;
}

MultiPoly::MultiPoly(const Rational& c) {
    if (c != 0) terms_[{0, 0}] = c;
}

MultiPoly MultiPoly::term(const Rational& c, const Monomial& m) {
    MultiPoly p;
    if (c != 0) p.terms_[m] = c;
    return p;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::setCoefficient(const Monomial& m, const Rational& c) {
    if (c == 0)
        terms_.erase(m);
    else
        terms_[m] = c;
}

Monomial MultiPoly::leadingMonomial(MonomialOrder ord) const {
    if (terms_.empty()) throw Error("leading monomial of the zero polynomial");
    if (ord == MonomialOrder::GradedLex) return terms_.rbegin()->first;
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (compareMonomials(it->first, best->first, ord) == std::strong_ordering::greater) best = it;
    return best->first;
}

Rational MultiPoly::leadingCoefficient(MonomialOrder ord) const {
    return coefficient(leadingMonomial(ord));
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1 * m2;
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                Rational c = c1 * c2;
                if (c != 0) r.terms_[m] = c;
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    if (c == 0) return {};
    MultiPoly r = *this;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

MultiPoly MultiPoly::timesMonomial(const Monomial& m, const Rational& c) const {
    MultiPoly r;
    if (c == 0) return r;
    for (const auto& [mm, cc] : terms_) r.terms_[mm * m] = cc * c;
    return r;
}

MultiPoly MultiPoly::monic(MonomialOrder ord) const {
    if (isZero()) return *this;
    return *this * (Rational(1) / leadingCoefficient(ord));
}

MultiPoly MultiPoly::swapped() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_[{m.j, m.i}] = c;
    return r;
}

Rational MultiPoly::evaluate(const Rational& x, const Rational& y) const {
    // Horner in x with inner Horner in y would need a dense view; with very
    // sparse terms cached powers are just as exact and simpler.
    int maxI = 0, maxJ = 0;
    for (const auto& [m, c] : terms_) {
        maxI = std::max(maxI, m.i);
        maxJ = std::max(maxJ, m.j);
    }
    std::vector<Rational> px(maxI + 1), py(maxJ + 1);
    px[0] = 1;
    for (int k = 1; k <= maxI; ++k) px[k] = px[k - 1] * x;
    py[0] = 1;
    for (int k = 1; k <= maxJ; ++k) py[k] = py[k - 1] * y;
    Rational s(0);
    for (const auto& [m, c] : terms_) s += c * px[m.i] * py[m.j];
    return s;
}

RatInterval MultiPoly::evaluate(const RatInterval& x, const RatInterval& y) const {
    // Horner over x keeps the enclosure reasonably tight: p = sum_i x^i q_i(y).
    if (terms_.empty()) return RatInterval(Rational(0));
    int maxI = 0;
    for (const auto& [m, c] : terms_) maxI = std::max(maxI, m.i);
    std::vector<MultiPoly> byX(maxI + 1);
    for (const auto& [m, c] : terms_) byX[m.i].setCoefficient({0, m.j}, c);
    auto evalY = [&](const MultiPoly& q) {
        RatInterval s{Rational(0)};
        for (const auto& [m, c] : q.terms()) s += c * y.power(static_cast<unsigned>(m.j));
        return s;
    };
    RatInterval acc = evalY(byX[maxI]);
    for (int i = maxI - 1; i >= 0; --i) acc = acc * x + evalY(byX[i]);
    return acc;
}

RatVector MultiPoly::coefficientVector(const std::vector<Monomial>& basis) const {
    RatVector v(basis.size(), Rational(0));
    std::map<Monomial, size_t, GrlexLess> index;
    for (size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
    for (const auto& [m, c] : terms_) {
        auto it = index.find(m);
        if (it == index.end()) throw Error("polynomial has support outside the given monomial basis");
        v[it->second] = c;
    }
    return v;
}

MultiPoly MultiPoly::fromCoefficientVector(const RatVector& v, const std::vector<Monomial>& basis) {
    if (v.size() != basis.size()) throw DimensionMismatchError("coefficient vector length mismatch");
    MultiPoly p;
    for (size_t k = 0; k < basis.size(); ++k) p.setCoefficient(basis[k], v[k]);
    return p;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        const bool constant = m.i == 0 && m.j == 0;
        if (constant) {
            s += toString(a);
        } else if (a == 1) {
            s += m.str();
        } else {
            s += toString(a) + "*" + m.str();
        }
        first = false;
    }
    return s;
}

namespace {

struct Parser {
    std::string_view s;
    size_t pos = 0;

    void skipWs() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skipWs();
        return pos >= s.size();
    }
    char peek() {
        skipWs();
        return s[pos];
    }

    [[noreturn]] void fail(const std::string& what) {
        throw Error("polynomial parse error at column " + std::to_string(pos + 1) + ": " + what);
    }

    Integer parseInteger() {
        skipWs();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return Integer(std::string(s.substr(start, pos - start)), 10);
    }

    int parseExponent() {
        if (!eof() && peek() == '^') {
            ++pos;
            Integer e = parseInteger();
            if (e < 0 || e > 64) fail("exponent out of range");
            return static_cast<int>(e.get_si());
        }
        return 1;
    }

    // coefficient ["*"] {var factors}
    MultiPoly parseTerm() {
        Rational coeff(1);
        Monomial mono;
        bool sawAny = false;
        if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            Integer num = parseInteger();
            Integer den(1);
            if (!eof() && peek() == '/') {
                ++pos;
                den = parseInteger();
                if (den == 0) fail("zero denominator");
            }
            coeff = Rational(num, den);
            coeff.canonicalize();
            sawAny = true;
        }
        for (;;) {
            if (eof()) break;
            char c = peek();
            if (c == '*') {
                ++pos;
                continue;
            }
            if (c == 'x' || c == 'X') {
                ++pos;
                mono.i += parseExponent();
                sawAny = true;
                continue;
            }
            if (c == 'y' || c == 'Y') {
                ++pos;
                mono.j += parseExponent();
                sawAny = true;
                continue;
            }
            break;
        }
        if (!sawAny) fail("expected a term");
        return MultiPoly::term(coeff, mono);
    }

    MultiPoly parsePoly() {
        MultiPoly p;
        bool negate = false;
        if (!eof() && (peek() == '+' || peek() == '-')) {
            negate = peek() == '-';
            ++pos;
        }
        for (;;) {
            MultiPoly t = parseTerm();
            p = negate ? p - t : p + t;
            if (eof()) break;
            char c = peek();
            if (c == '+' || c == '-') {
                negate = c == '-';
                ++pos;
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
        }
        return p;
    }
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) {
    Parser p{text};
    if (p.eof()) throw Error("polynomial parse error: empty input");
    return p.parsePoly();
}

}  // namespace momentlab
