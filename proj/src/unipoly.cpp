#include "momentlab/unipoly.hpp"

#include <algorithm>

namespace momentlab {

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

UnivariatePoly UnivariatePoly::constant(const Rational& c) {
    return UnivariatePoly(std::vector<Rational>{c});
}

void UnivariatePoly::strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& UnivariatePoly::leadingCoefficient() const {
    if (c_.empty()) throw ZeroPolynomialError("leading coefficient of zero polynomial");
    return c_.back();
}

Rational UnivariatePoly::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
}

Rational UnivariatePoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatInterval UnivariatePoly::operator()(const RatInterval& x) const {
    RatInterval acc{Rational(0)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + RatInterval(*it);
    return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return UnivariatePoly(std::move(d));
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
    return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& o) const {
    return *this + o * Rational(-1);
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t a = 0; a < c_.size(); ++a) {
        if (c_[a] == 0) continue;
        for (size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
    }
    return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::operator*(const Rational& s) const {
    if (s == 0) return {};
    std::vector<Rational> r = c_;
    for (auto& v : r) v *= s;
    return UnivariatePoly(std::move(r));
}

void UnivariatePoly::divmod(const UnivariatePoly& num, const UnivariatePoly& den, UnivariatePoly& quot,
                            UnivariatePoly& rem) {
    if (den.isZero()) throw ZeroPolynomialError("division by zero polynomial");
    std::vector<Rational> r = num.c_;
    const int dn = den.degree();
    std::vector<Rational> q(std::max<size_t>(num.c_.size(), 1), Rational(0));
    while (static_cast<int>(r.size()) - 1 >= dn) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        const int dr = static_cast<int>(r.size()) - 1;
        if (dr < dn) break;
        const Rational f = r.back() / den.c_.back();
        q[dr - dn] = f;
        for (int k = 0; k <= dn; ++k) r[dr - dn + k] -= f * den.c_[k];
        r.pop_back();
    }
    quot = UnivariatePoly(std::move(q));
    rem = UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::normalized() const {
    if (c_.empty()) return {};
    Integer l(1);
    for (const auto& v : c_) l = lcm(l, Integer(v.get_den()));
    Integer g(0);
    for (const auto& v : c_) {
        Rational s = v * Rational(l);
        s.canonicalize();
        g = gcd(g, Integer(s.get_num()));
    }
    Rational scale = Rational(l) / Rational(g);
    if (c_.back() < 0) scale = -scale;
    return *this * scale;
}

UnivariatePoly UnivariatePoly::monic() const {
    if (c_.empty()) return {};
    return *this * (Rational(1) / c_.back());
}

std::string UnivariatePoly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k] == 0) continue;
        if (!s.empty()) s += c_[k] > 0 ? " + " : " - ";
        else if (c_[k] < 0)
            s += "-";
        Rational a = ratAbs(c_[k]);
        if (k == 0)
            s += toString(a);
        else {
            if (a != 1) s += toString(a) + "*";
            s += "t";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
    UnivariatePoly x = a.normalized(), y = b.normalized();
    while (!y.isZero()) {
        UnivariatePoly q, r;
        UnivariatePoly::divmod(x, y, q, r);
        x = y;
        y = r.normalized();
    }
    return x;
}

UnivariatePoly squarefreePart(const UnivariatePoly& p) {
    if (p.isZero()) throw ZeroPolynomialError("squarefree part of zero polynomial");
    if (p.degree() == 0) return UnivariatePoly::constant(Rational(1));
    UnivariatePoly g = gcd(p, p.derivative());
    UnivariatePoly q, r;
    UnivariatePoly::divmod(p, g, q, r);
    // Exact by construction.
    return q.normalized();
}

namespace {

struct SturmChain {
    std::vector<UnivariatePoly> seq;

    explicit SturmChain(const UnivariatePoly& f) {
        seq.push_back(f);
        seq.push_back(f.derivative().normalized());
        while (!seq.back().isZero() && seq.back().degree() > 0) {
            UnivariatePoly q, r;
            UnivariatePoly::divmod(seq[seq.size() - 2], seq.back(), q, r);
            if (r.isZero()) break;
            seq.push_back((r * Rational(-1)).normalized());
        }
    }

    int variations(const Rational& x) const {
        int v = 0, prev = 0;
        for (const auto& p : seq) {
            const int s = sgn(p(x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    // Roots in (a, b] for the squarefree head polynomial.
    int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }
};

Rational cauchyBound(const UnivariatePoly& p) {
    Rational m(0);
    const Rational lead = ratAbs(p.leadingCoefficient());
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, ratAbs(p.coefficient(k)) / lead);
    return m + 2;  // all real roots lie strictly inside (-B, B)
}

// Rational roots of small denominator become exact point intervals. After
// refining below 2^-34, a root with denominator <= 2^16 is necessarily the
// simplest rational in its isolating interval.
RatInterval tagExactRoot(const UnivariatePoly& f, RatInterval iv) {
    if (iv.isPoint()) return iv;
    const Rational cap(Integer(1), Integer(1) << 34);
    iv = refineRoot(f, iv, cap);
    if (iv.isPoint()) return iv;
    const Rational cand = simplestRationalIn(iv.lo, iv.hi);
    if (cand.get_den() <= 65536 && f(cand) == 0) return RatInterval(cand);
    return iv;
}

}  // namespace

std::vector<RatInterval> isolateRealRoots(const UnivariatePoly& p) {
    if (p.isZero()) throw ZeroPolynomialError("root isolation of zero polynomial");
    UnivariatePoly f = squarefreePart(p);
    std::vector<RatInterval> exact;  // discovered rational roots

    for (;;) {
        if (f.degree() <= 0) break;
        const Rational bound = cauchyBound(f);
        // Deflating at an exactly-hit root keeps every evaluation point
        // off the root set, which Sturm counting needs.
        std::optional<Rational> hitRoot;
        std::vector<RatInterval> found;
        SturmChain chain(f);
        std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
        while (!stack.empty() && !hitRoot) {
            auto [a, b] = stack.back();
            stack.pop_back();
            const int n = chain.count(a, b);
            if (n == 0) continue;
            if (n == 1) {
                if (f(b) == 0) {
                    hitRoot = b;
                    break;
                }
                found.emplace_back(a, b);
                continue;
            }
            const Rational mid = (a + b) / 2;
            if (f(mid) == 0) {
                hitRoot = mid;
                break;
            }
            stack.emplace_back(a, mid);
            stack.emplace_back(mid, b);
        }
        if (hitRoot) {
            exact.emplace_back(*hitRoot);
            // Synthetic division by (t - root).
            UnivariatePoly q, r;
            UnivariatePoly::divmod(f, UnivariatePoly({-*hitRoot, Rational(1)}), q, r);
            f = q.normalized();
            continue;
        }
        for (auto& iv : found) exact.push_back(tagExactRoot(f, iv));
        break;
    }

    std::sort(exact.begin(), exact.end(),
              [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
    return exact;
}

RatInterval refineRoot(const UnivariatePoly& p, RatInterval iv, const Rational& targetRadius) {
    if (iv.isPoint()) return iv;
    int slo = sgn(p(iv.lo));
    int shi = sgn(p(iv.hi));
    if (slo == 0) return RatInterval(iv.lo);
    if (shi == 0) return RatInterval(iv.hi);
    if (slo == shi) throw Error("refineRoot: no sign change on the interval");
    const UnivariatePoly dp = p.derivative();
    int guard = 0;
    while (iv.rad() > targetRadius) {
        if (++guard > 100000) throw Error("refineRoot: refinement did not converge");
        const Rational m = iv.mid();
        const Rational fm = p(m);
        if (fm == 0) return RatInterval(m);
        bool contracted = false;
        const RatInterval d = dp(iv);
        if (!d.containsZero()) {
            RatInterval newton = RatInterval(m) - RatInterval(fm) / d;
            if (auto meet = newton.intersect(iv)) {
                if (meet->width() * 2 < iv.width()) {
                    // Re-establish the sign-change bracket on the contraction.
                    RatInterval cand = *meet;
                    int cl = sgn(p(cand.lo));
                    int ch = sgn(p(cand.hi));
                    if (cl == 0) return RatInterval(cand.lo);
                    if (ch == 0) return RatInterval(cand.hi);
                    if (cl != ch) {
                        iv = cand;
                        slo = cl;
                        shi = ch;
                        contracted = true;
                    }
                }
            }
        }
        if (!contracted) {
            const int sm = sgn(fm);
            if (sm == slo)
                iv.lo = m;
            else
                iv.hi = m;
        }
    }
    return iv;
}

int countRootsInInterval(const UnivariatePoly& p, const Rational& a, const Rational& b) {
    if (p.isZero()) throw ZeroPolynomialError("root count of zero polynomial");
    UnivariatePoly f = squarefreePart(p);
    if (f(a) == 0 || f(b) == 0) throw Error("countRootsInInterval: endpoint is a root");
    SturmChain chain(f);
    return chain.count(a, b);
}

Rational simplestRationalIn(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw Error("simplestRationalIn: empty interval");
    if (lo == hi) return lo;
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
    if (sgn(hi) < 0) return -simplestRationalIn(-hi, -lo);
    // 0 < lo < hi
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    if (Rational(c) <= hi) return Rational(c);
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    const Rational n(fl);
    // Recurse on the reciprocal of the fractional parts (order reverses).
    const Rational inner = simplestRationalIn(Rational(1) / (hi - n), Rational(1) / (lo - n));
    Rational r = n + Rational(1) / inner;
    r.canonicalize();
    return r;
}

}  // namespace momentlab
