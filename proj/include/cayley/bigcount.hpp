#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cayley {

/// Exact nonnegative counts (independent sets, container tables).
using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigCount& c) { return c.str(); }

inline BigCount pow2(unsigned e) {
  BigCount r = 1;
  r <<= e;
  return r;
}

/// log2 of a positive count, accurate to double precision.
double log2_of(const BigCount& c);

}  // namespace cayley
