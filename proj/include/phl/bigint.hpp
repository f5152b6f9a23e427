#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace phl {

// Unbounded exact arithmetic. Coefficients of QPoly stay in Z; full-point
// polynomial evaluation is exact over Q.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace phl
