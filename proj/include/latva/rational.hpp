#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latva {

// All scalars in the library are exact: arbitrary-precision integers and
// rationals. No floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IVec = std::vector<Integer>;
using QVec = std::vector<Rational>;

inline const Integer& numerator(const Rational& q) {
    return boost::multiprecision::numerator(q);
}

inline const Integer& denominator(const Rational& q) {
    return boost::multiprecision::denominator(q);
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Truncated integer part (rounds toward zero).
inline Integer integer_part(const Rational& q) {
    return numerator(q) / denominator(q);
}

inline Rational fractional_mod_one(const Rational& q) {
    // Representative of q + Z in [0, 1).
    Integer n = numerator(q), d = denominator(q);
    Integer r = n % d;
    if (r < 0) r += d;
    return Rational(r, d);
}

inline std::string to_string(const Rational& q) { return q.str(); }

inline std::string to_string(const QVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    out += ")";
    return out;
}

inline Rational parse_rational(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

/// Binomial coefficient C(n, k) for any integer n and k >= 0.
/// C(n, k) = n(n-1)...(n-k+1) / k!, an exact integer even for n < 0.
inline Integer binomial(long long n, long long k) {
    if (k < 0) return 0;
    Integer num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= Integer(n - i);
        den *= Integer(i + 1);
    }
    return num / den;  // exact: k! divides any product of k consecutive integers
}

inline Integer factorial(long long n) {
    Integer r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline QVec to_qvec(const IVec& v) {
    QVec q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
    return q;
}

inline QVec qvec_add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec qvec_sub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVec qvec_neg(const QVec& a) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline bool qvec_is_zero(const QVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

inline bool qvec_is_integral(const QVec& a) {
    for (const auto& x : a)
        if (!is_integer(x)) return false;
    return true;
}

}  // namespace latva
