#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schemeforge {

// Rank decisions must be exact, so all linear algebra runs over arbitrary
// precision rationals. Scheme-derived generators are 0/1 matrices, which
// keeps magnitudes small in practice.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& x) { return x.is_zero(); }

}  // namespace schemeforge
