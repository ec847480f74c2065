#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace kothe {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 1-based sequence index.
using Index = std::int64_t;

// Canonical text form: "num/den" in lowest terms, denominator > 0, sign on
// the numerator. Integers keep the explicit denominator ("4/1", "-2/1").
std::string to_canonical_string(const Rational& q);

// Accepts "num" or "num/den" where num is an optionally negated decimal
// integer and den is a positive decimal integer. Throws std::invalid_argument
// on anything else, including a zero denominator.
Rational rational_from_string(std::string_view text);

// Throws std::invalid_argument when den == 0.
Rational make_rational(Int num, Int den);

} // namespace kothe
