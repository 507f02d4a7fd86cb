#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boxball {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when an input lies outside the domain of an operation.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Zero-based slot of the 1-based cyclic index i in a vector of size m.
inline std::size_t cyc(long i, std::size_t m) {
  long r = (i - 1) % static_cast<long>(m);
  if (r < 0) r += static_cast<long>(m);
  return static_cast<std::size_t>(r);
}

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

// Floor and nearest-integer rounding of exact rationals.
BigInt floor_div(const Rational& q);
BigInt round_nearest(const Rational& q);

}  // namespace boxball
