#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kmps {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

}  // namespace kmps
