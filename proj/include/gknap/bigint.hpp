/* bigint.hpp -- arbitrary-precision integer alias */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gknap {

// Edge prices and Baumslag-Solitar exponents can be exponential in the
// input length, so all such values are arbitrary-precision.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace gknap
