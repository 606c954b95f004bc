#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>

namespace qid {

// Exact rational arithmetic for generator values and lattice reductions.
// long long is ample at desk scale; the parsers below refuse inputs whose
// exact representation would not fit.
using Rational = boost::rational<long long>;

// Accepts "p/q", plain integers, and plain decimals ("0.25", "-3", "7/10").
// No exponent notation.  Returns nullopt when the text is malformed or the
// exact value does not fit in a long long numerator/denominator.
std::optional<Rational> parse_rational(const std::string& text);

double to_double(const Rational& r);

std::string to_string(const Rational& r);

}  // namespace qid
