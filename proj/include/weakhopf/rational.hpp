#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace weakhopf {

// Exact arbitrary-precision rational scalar. Always kept in lowest terms with
// a positive denominator, so string round-trips are canonical.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string rat_to_string(const Rational& r) { return r.str(); }

// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws
// std::invalid_argument on anything else; callers wrap this into ParseError
// with file/field context.
inline Rational rat_from_string(const std::string& s) {
    auto fail = [&]() -> void {
        throw std::invalid_argument("not a rational literal: '" + s + "'");
    };
    if (s.empty()) fail();
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') ++pos;
    std::size_t digits_start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == digits_start) fail();
    Integer num(s.substr(0, pos));
    if (pos == s.size()) return Rational(num);
    if (s[pos] != '/') fail();
    ++pos;
    std::size_t den_start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == den_start || pos != s.size()) fail();
    Integer den(s.substr(den_start));
    if (den == 0) fail();
    return Rational(num, den);
}

}  // namespace weakhopf
