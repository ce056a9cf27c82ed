#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace qwspectra {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRational& q) {
    return boost::multiprecision::numerator(q);
}

inline BigInt denominator(const BigRational& q) {
    return boost::multiprecision::denominator(q);
}

// "p/q" with q omitted when 1; the sign lives on the numerator.
inline std::string format_rational(const BigRational& q) {
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace detail {

inline BigInt parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty())
        throw ParseError("bad rational literal: '" + std::string(whole) + "'");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size())
        throw ParseError("bad rational literal: '" + std::string(whole) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9')
            throw ParseError("bad rational literal: '" + std::string(whole) + "'");
    // cpp_int rejects a leading '+', so hand it digits plus optional '-'.
    BigInt mag{std::string(s.substr(i))};
    return s[0] == '-' ? BigInt(-mag) : mag;
}

} // namespace detail

// Accepts "p", "p/q", optional leading sign on either part, no whitespace.
inline BigRational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return BigRational(detail::parse_integer(s, s));
    BigInt num = detail::parse_integer(s.substr(0, slash), s);
    BigInt den = detail::parse_integer(s.substr(slash + 1), s);
    if (den == 0)
        throw ParseError("zero denominator in '" + std::string(s) + "'");
    return BigRational(num, den);
}

inline double to_double(const BigRational& q) {
    return q.template convert_to<double>();
}

// Exact integer square root, or nothing when x is not a perfect square.
inline std::optional<BigInt> perfect_sqrt(const BigInt& x) {
    if (x < 0)
        return std::nullopt;
    BigInt rem;
    BigInt root = boost::multiprecision::sqrt(x, rem);
    if (rem != 0)
        return std::nullopt;
    return root;
}

// Exact square root in Q. A reduced p/q has one iff p and q are both
// perfect squares.
inline std::optional<BigRational> rational_sqrt(const BigRational& q) {
    if (q < 0)
        return std::nullopt;
    auto n = perfect_sqrt(numerator(q));
    if (!n)
        return std::nullopt;
    auto d = perfect_sqrt(denominator(q));
    if (!d)
        return std::nullopt;
    return BigRational(*n, *d);
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

} // namespace qwspectra
