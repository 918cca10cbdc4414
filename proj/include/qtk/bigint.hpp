#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qtk {

// All exact integer arithmetic in the library runs on arbitrary-precision
// integers; desk-scale inputs never overflow in practice, but Bareiss
// elimination and character sums are not worth bounding by hand.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

}  // namespace qtk
