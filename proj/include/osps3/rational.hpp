#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <array>
#include <stdexcept>
#include <string>

namespace osps3 {

// Exact rational scalar. cpp_rational keeps lowest terms with positive
// denominator as a class invariant, so every value is canonical.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Idx4 = std::array<int, 4>;

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// canonical "p/q" form used in JSON payloads
inline std::string to_fraction_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

// rising factorial (a)_n = a (a+1) ... (a+n-1)
inline Rational pochhammer(const Rational& a, int n) {
    Rational r = 1;
    for (int k = 0; k < n; ++k) r *= a + k;
    return r;
}

// falling factorial c (c-1) ... (c-k+1); c may be negative (Laurent exponents)
inline Integer falling_factorial(int c, int k) {
    Integer r = 1;
    for (int j = 0; j < k; ++j) r *= c - j;
    return r;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int j = 1; j <= k; ++j) { r *= n - j + 1; r /= j; }
    return r;
}

inline Rational factorial_rat(int n) {
    Rational r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

} // namespace osps3
