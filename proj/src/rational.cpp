#include "momentlab/rational.hpp"

#include <cctype>

namespace momentlab {

Rational ratPow(const Rational& base, unsigned exp) {
    Rational acc(1);
    Rational b = base;
    while (exp) {
        if (exp & 1u) acc *= b;
        exp >>= 1u;
        if (exp) b *= b;
    }
    return acc;
}

namespace {

bool allDigits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::optional<Rational> parseDecimal(std::string_view s) {
    // [+-]digits[.digits][(e|E)[+-]digits]
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    long expo = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string_view::npos) {
        std::string_view es = s.substr(epos + 1);
        s = s.substr(0, epos);
        bool eneg = false;
        if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
            eneg = es[0] == '-';
            es.remove_prefix(1);
        }
        if (!allDigits(es) || es.size() > 6) return std::nullopt;
        expo = std::stol(std::string(es));
        if (eneg) expo = -expo;
    }
    std::string digits;
    auto dot = s.find('.');
    if (dot != std::string_view::npos) {
        std::string_view frac = s.substr(dot + 1);
        s = s.substr(0, dot);
        if (!allDigits(frac) && !frac.empty()) return std::nullopt;
        digits = std::string(s) + std::string(frac);
        expo -= static_cast<long>(frac.size());
        if (s.empty() && frac.empty()) return std::nullopt;
        if (!s.empty() && !allDigits(s)) return std::nullopt;
    } else {
        if (!allDigits(s)) return std::nullopt;
        digits = std::string(s);
    }
    if (digits.empty()) return std::nullopt;
    Integer num(digits, 10);
    Rational r(num);
    if (expo > 0)
        r *= ratPow(Rational(10), static_cast<unsigned>(expo));
    else if (expo < 0)
        r /= ratPow(Rational(10), static_cast<unsigned>(-expo));
    r.canonicalize();
    if (neg) r = -r;
    return r;
}

}  // namespace

std::optional<Rational> tryParseRational(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        std::string_view ns = s.substr(0, slash);
        std::string_view ds = s.substr(slash + 1);
        bool nneg = false;
        if (!ns.empty() && (ns[0] == '+' || ns[0] == '-')) {
            nneg = ns[0] == '-';
            ns.remove_prefix(1);
        }
        if (!allDigits(ns) || !allDigits(ds)) return std::nullopt;
        Integer den(std::string(ds), 10);
        if (den == 0) return std::nullopt;
        Rational r(Integer(std::string(ns), 10), den);
        r.canonicalize();
        if (nneg) r = -r;
        return r;
    }
    return parseDecimal(s);
}

Rational parseRational(std::string_view s) {
    auto r = tryParseRational(s);
    if (!r) throw Error("not a rational literal: '" + std::string(s) + "'");
    return *r;
}

std::string toString(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double toDouble(const Rational& r) { return r.get_d(); }

}  // namespace momentlab
