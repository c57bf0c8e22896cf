#include "cayley/bigcount.hpp"

#include <cmath>

#include "cayley/errors.hpp"

namespace cayley {

double log2_of(const BigCount& c) {
  if (c <= 0) throw Error(ErrorKind::InvalidInput, "log2 of a nonpositive count");
  const unsigned bits = boost::multiprecision::msb(c) + 1;
  if (bits <= 53) return std::log2(c.convert_to<double>());
  // Keep the top 53 bits as a double mantissa.
  const unsigned shift = bits - 53;
  BigCount top = c >> shift;
  return std::log2(top.convert_to<double>()) + shift;
}

}  // namespace cayley
