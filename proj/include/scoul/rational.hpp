#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace scoul {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Parses "p/q" or a plain integer string. No float coercion, ever.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s));
        }
        Integer p(s.substr(0, slash));
        Integer q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
}

inline std::string to_string(const Rational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Fixed-point decimal rendering with round-half-even at `digits` fractional
// digits. Used for the human-readable columns; the rational string is the
// authoritative value.
inline std::string decimal_string(const Rational& q, int digits) {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    Integer p = num(q), d = den(q);
    bool neg = p < 0;
    if (neg) p = -p;
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Integer scaled_num = p * scale;
    Integer quot = scaled_num / d;
    Integer rem  = scaled_num % d;
    Integer twice = rem * 2;
    if (twice > d || (twice == d && (quot % 2) != 0)) ++quot;
    Integer ip = quot / scale;
    Integer fp = quot % scale;
    std::string frac = fp.str();
    if (digits > 0) frac.insert(frac.begin(), digits - frac.size(), '0');
    std::string out = (neg && quot != 0) ? "-" : "";
    out += ip.str();
    if (digits > 0) out += "." + frac;
    return out;
}

}  // namespace scoul
