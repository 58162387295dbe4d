#pragma once

#include <random>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace quartic {

// Arbitrary-precision integers. Natural values are kept non-negative by the
// functions that produce them; Integer is used where a sign is meaningful
// (Bezout coefficients). Expression templates are off so intermediate results
// are plain values.
using Natural = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Integer = Natural;

// Seeded random source threaded explicitly through every randomized call.
using Rng = std::mt19937_64;

/// Uniform value in [0, bound). bound must be positive.
Natural random_below(const Natural& bound, Rng& rng);

/// Uniform value in [lo, hi). Requires lo < hi.
Natural random_between(const Natural& lo, const Natural& hi, Rng& rng);

/// Parses a plain decimal string (digits only, no sign). Throws SyntaxError.
Natural parse_natural(std::string_view text, std::string_view field = "value");

std::string to_string(const Natural& value);

/// Number of significant bits; 0 for zero.
unsigned bit_length(const Natural& value);

/// A residue class representative 0 <= value < modulus, modulus >= 2.
class Residue {
 public:
  Residue(Natural value, Natural modulus);

  const Natural& value() const noexcept { return value_; }
  const Natural& modulus() const noexcept { return modulus_; }

  Residue operator*(const Residue& other) const;
  Residue pow(const Natural& exponent) const;

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Natural value_;
  Natural modulus_;
};

}  // namespace quartic
