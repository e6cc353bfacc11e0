#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qsk {

// All persistent coefficients are arbitrary-precision integers. Rationals appear
// only transiently inside linear solves, never in stored results.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace qsk
