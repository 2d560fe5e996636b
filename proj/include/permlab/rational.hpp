#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "permlab/errors.hpp"

namespace permlab {

// Exact scalar mode. cpp_rational keeps every identity check exact; the
// float64 mode is for search and sampling.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

template <class T>
inline constexpr bool is_exact_v = false;
template <>
inline constexpr bool is_exact_v<Rat> = true;

inline double to_double(double x) { return x; }
inline double to_double(const Rat& x) { return x.convert_to<double>(); }

template <class T>
T scalar_abs(const T& x) {
    return x < T(0) ? T(-x) : x;
}

// Scalar-mode-aware default tolerance: exact mode compares exactly.
template <class T>
T mode_tol(double float_tol) {
    if constexpr (is_exact_v<T>)
        return T(0);
    else
        return T(float_tol);
}

namespace detail {

inline BigInt parse_bigint(std::string_view s) {
    if (s.empty()) throw ParseError("empty integer");
    // strip sign and leading zeros; cpp_int would read "025" as octal
    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
    if (s.empty()) throw ParseError("empty integer");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad integer: '" + std::string(s) + "'");
    try {
        BigInt v{std::string(s)};
        if (negative) v = -v;
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad integer: '" + std::string(s) + "'");
    }
}

} // namespace detail

// Parses "p/q", plain integers, and decimal strings ("-0.25", "1e-3")
// into exact rationals. Decimal strings convert via powers of ten, so
// "0.1" becomes 1/10, not the nearest double.
inline Rat rat_parse(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty scalar");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num = detail::parse_bigint(s.substr(0, slash));
        BigInt den = detail::parse_bigint(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
        return Rat(num, den);
    }

    std::string mantissa;
    long long exp10 = 0;
    std::string_view body = s;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        body = s.substr(0, e);
        try {
            exp10 = std::stoll(std::string(s.substr(e + 1)));
        } catch (const std::exception&) {
            throw ParseError("bad exponent in '" + std::string(s) + "'");
        }
    }
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
        mantissa = std::string(body.substr(0, dot)) + std::string(body.substr(dot + 1));
        exp10 -= static_cast<long long>(body.size() - dot - 1);
    } else {
        mantissa = std::string(body);
    }
    BigInt num = detail::parse_bigint(mantissa);
    BigInt den = 1;
    BigInt ten = 10;
    for (long long i = 0; i < (exp10 < 0 ? -exp10 : exp10); ++i) {
        if (exp10 < 0)
            den *= ten;
        else
            num *= ten;
    }
    return Rat(num, den);
}

inline std::string rat_to_string(const Rat& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

// Every finite double is a dyadic rational; this conversion is exact.
inline Rat rat_from_double(double x) { return Rat(x); }

} // namespace permlab
