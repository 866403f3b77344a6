#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace a2w {

// Exact rational arithmetic. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form the rest of the
// library assumes. All formulas downstream are rational in their inputs, so
// the whole pipeline runs over Q with zero-tolerance equality.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Canonicalizing constructor: accepts any nonzero denominator sign and
// reduces to lowest terms with the denominator positive.
Rat make_rat(Int num, Int den);

// True iff a - b is a (possibly zero) integer.
inline bool differ_by_integer(const Rat& a, const Rat& b) { return is_integer(a - b); }

// Canonical text form: optional sign, decimal integer, optional "/den".
// "5", "-3/7". Used by all CLI inputs and JSON outputs.
std::string rat_to_string(const Rat& r);

// Strict parser for the external rational format. Throws ParseError on
// anything else (including zero denominators and embedded whitespace).
Rat parse_rat(std::string_view text);

}  // namespace a2w
