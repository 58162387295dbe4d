#include "quartic/natural.hpp"

#include "quartic/error.hpp"
#include "quartic/numtheory.hpp"

namespace quartic {

namespace {

constexpr std::size_t kMaxDecimalDigits = 4096;

}  // namespace

unsigned bit_length(const Natural& value) {
  if (value <= 0) return 0;
  return static_cast<unsigned>(boost::multiprecision::msb(value)) + 1;
}

Natural random_below(const Natural& bound, Rng& rng) {
  if (bound <= 0) throw Error(ErrorCode::InvalidArgument, "random_below: bound must be positive");
  const unsigned bits = bit_length(bound);
  const unsigned words = (bits + 63) / 64;
  const unsigned top_bits = bits - 64 * (words - 1);
  const std::uint64_t top_mask =
      top_bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);
  for (;;) {
    Natural candidate = 0;
    for (unsigned i = 0; i < words; ++i) {
      std::uint64_t word = rng();
      if (i == 0) word &= top_mask;
      candidate <<= 64;
      candidate += word;
    }
    if (candidate < bound) return candidate;
  }
}

Natural random_between(const Natural& lo, const Natural& hi, Rng& rng) {
  if (lo >= hi) throw Error(ErrorCode::InvalidArgument, "random_between: empty range");
  return lo + random_below(hi - lo, rng);
}

Natural parse_natural(std::string_view text, std::string_view field) {
  if (text.empty()) {
    throw Error(ErrorCode::SyntaxError, std::string(field) + ": expected a decimal integer");
  }
  if (text.size() > kMaxDecimalDigits) {
    throw Error(ErrorCode::SyntaxError, std::string(field) + ": integer too long");
  }
  Natural value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw Error(ErrorCode::SyntaxError,
                  std::string(field) + ": non-digit character in decimal integer");
    }
    value *= 10;
    value += ch - '0';
  }
  return value;
}

std::string to_string(const Natural& value) { return value.str(); }

Residue::Residue(Natural value, Natural modulus)
    : value_(std::move(value)), modulus_(std::move(modulus)) {
  if (modulus_ < 2) throw Error(ErrorCode::InvalidModulus, "residue modulus must be >= 2");
  value_ %= modulus_;
  if (value_ < 0) value_ += modulus_;
}

Residue Residue::operator*(const Residue& other) const {
  if (modulus_ != other.modulus_) {
    throw Error(ErrorCode::InvalidModulus, "residues have different moduli");
  }
  return Residue(value_ * other.value_ % modulus_, modulus_);
}

Residue Residue::pow(const Natural& exponent) const {
  return Residue(mod_pow(value_, exponent, modulus_), modulus_);
}

}  // namespace quartic
