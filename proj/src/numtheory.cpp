#include "quartic/numtheory.hpp"

#include <array>

#include "quartic/error.hpp"

namespace quartic {

namespace {

void require_non_negative(const Natural& value, const char* what) {
  if (value < 0) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be non-negative");
  }
}

constexpr std::array<unsigned, 12> kWitnessBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

constexpr std::array<unsigned, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                                   29, 31, 37, 41, 43, 47, 53, 59, 61,
                                                   67, 71, 73, 79, 83, 89, 97};

// One Miller-Rabin round with n - 1 = odd * 2^twos.
bool passes_round(const Natural& n, const Natural& base, const Natural& odd, unsigned twos) {
  Natural x = mod_pow(base, odd, n);
  const Natural n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned i = 1; i < twos; ++i) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus) {
  if (modulus < 2) throw Error(ErrorCode::InvalidModulus, "mod_pow: modulus must be >= 2");
  require_non_negative(exponent, "mod_pow exponent");
  Natural b = base % modulus;
  if (b < 0) b += modulus;
  Natural result = 1;
  const unsigned bits = bit_length(exponent);
  for (unsigned i = bits; i-- > 0;) {
    result = result * result % modulus;
    if (boost::multiprecision::bit_test(exponent, i)) result = result * b % modulus;
  }
  return result;
}

GcdResult ext_gcd(const Natural& a, const Natural& b) {
  require_non_negative(a, "ext_gcd a");
  require_non_negative(b, "ext_gcd b");
  if (a == 0 && b == 0) throw Error(ErrorCode::UndefinedGcd, "gcd(0, 0) is undefined");
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer quotient = old_r / r;
    Integer tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quotient * t;
    old_t = t;
    t = tmp;
  }
  return {old_r, old_s, old_t};
}

Natural gcd(const Natural& a, const Natural& b) { return ext_gcd(a, b).g; }

Natural mod_inverse(const Natural& a, const Natural& m) {
  if (m < 2) throw Error(ErrorCode::InvalidModulus, "mod_inverse: modulus must be >= 2");
  require_non_negative(a, "mod_inverse argument");
  const Natural reduced = a % m;
  if (reduced == 0) throw Error(ErrorCode::NotInvertible, "0 has no inverse");
  const GcdResult r = ext_gcd(reduced, m);
  if (r.g != 1) throw Error(ErrorCode::NotInvertible, "argument shares a factor with the modulus");
  Natural inverse = r.x % m;
  if (inverse < 0) inverse += m;
  return inverse;
}

Natural crt_combine(const Natural& r_p, const Natural& p, const Natural& r_q, const Natural& q) {
  if (p < 2 || q < 2) throw Error(ErrorCode::InvalidModulus, "crt_combine: moduli must be >= 2");
  require_non_negative(r_p, "crt_combine r_p");
  require_non_negative(r_q, "crt_combine r_q");
  if (gcd(p, q) != 1) throw Error(ErrorCode::ModuliNotCoprime, "crt_combine: moduli share a factor");
  const Natural n = p * q;
  const Natural q_term = (r_p % p) * q * mod_inverse(q, p);
  const Natural p_term = (r_q % q) * p * mod_inverse(p, q);
  return (q_term + p_term) % n;
}

Natural crt_combine_garner(const Natural& r_p, const Natural& p, const Natural& r_q,
                           const Natural& q) {
  if (p < 2 || q < 2) throw Error(ErrorCode::InvalidModulus, "crt_combine: moduli must be >= 2");
  require_non_negative(r_p, "crt_combine r_p");
  require_non_negative(r_q, "crt_combine r_q");
  const GcdResult r = ext_gcd(q, p);
  if (r.g != 1) throw Error(ErrorCode::ModuliNotCoprime, "crt_combine: moduli share a factor");
  // x = r_q + q * h, with h = (r_p - r_q) * q^-1 mod p.
  const Natural base = r_q % q;
  Integer h = (Integer(r_p % p) - base) * r.x % p;
  if (h < 0) h += p;
  return base + q * h;
}

std::optional<std::pair<Natural, Natural>> sqrt_mod_prime(const Natural& a, const Natural& p) {
  if (p < 3 || p % 2 == 0 || !is_probable_prime(p)) {
    throw Error(ErrorCode::NotPrime, "sqrt_mod_prime: modulus must be an odd prime");
  }
  if (a < 0 || a >= p) throw Error(ErrorCode::InvalidArgument, "sqrt_mod_prime: need 0 <= a < p");
  if (a == 0) return std::pair<Natural, Natural>{0, 0};

  const Natural half = (p - 1) / 2;
  if (mod_pow(a, half, p) != 1) return std::nullopt;

  // p - 1 = odd * 2^twos
  Natural odd = p - 1;
  unsigned twos = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++twos;
  }

  Natural root;
  if (twos == 1) {
    root = mod_pow(a, (p + 1) / 4, p);
  } else {
    Natural z = 2;
    while (mod_pow(z, half, p) != p - 1) ++z;

    unsigned m = twos;
    Natural c = mod_pow(z, odd, p);
    Natural t = mod_pow(a, odd, p);
    root = mod_pow(a, (odd + 1) / 2, p);
    while (t != 1) {
      unsigned i = 0;
      Natural t2 = t;
      while (t2 != 1) {
        t2 = t2 * t2 % p;
        ++i;
      }
      Natural b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b % p;
      m = i;
      c = b * b % p;
      t = t * c % p;
      root = root * b % p;
    }
  }

  Natural other = p - root;
  if (other < root) std::swap(root, other);
  return std::pair<Natural, Natural>{root, other};
}

bool is_probable_prime(const Natural& n, unsigned rounds) {
  if (n < 2) return false;
  for (unsigned small : kSmallPrimes) {
    if (n == small) return true;
    if (n % small == 0) return false;
  }

  Natural odd = n - 1;
  unsigned twos = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++twos;
  }

  for (unsigned base : kWitnessBases) {
    if (!passes_round(n, base, odd, twos)) return false;
  }
  // The fixed bases are a deterministic test far beyond 2^64.
  if (bit_length(n) <= 64 || rounds <= kWitnessBases.size()) return true;

  Rng rng(static_cast<std::uint64_t>(n & Natural(~std::uint64_t{0})));
  for (unsigned i = kWitnessBases.size(); i < rounds; ++i) {
    const Natural base = random_between(2, n - 1, rng);
    if (!passes_round(n, base, odd, twos)) return false;
  }
  return true;
}

Natural generate_prime(unsigned bits, const ResidueClass& residue_class, Rng& rng) {
  if (bits < 4) throw Error(ErrorCode::InvalidArgument, "generate_prime: need at least 4 bits");
  const Natural& modulus = residue_class.modulus;
  if (modulus < 1) throw Error(ErrorCode::InvalidModulus, "generate_prime: class modulus must be >= 1");
  Natural remainder = residue_class.remainder % modulus;
  if (remainder < 0) remainder += modulus;

  const Natural lo = Natural(1) << (bits - 1);
  const Natural hi = Natural(1) << bits;
  // First member of the class at or above lo.
  Natural offset = (remainder - lo % modulus) % modulus;
  if (offset < 0) offset += modulus;
  const Natural first = lo + offset;
  if (first >= hi) {
    throw Error(ErrorCode::GenerationFailed, "residue class has no members of the requested size");
  }
  const Natural count = (hi - 1 - first) / modulus + 1;

  for (unsigned attempt = 0; attempt < kPrimeAttemptBudget; ++attempt) {
    const Natural candidate = first + modulus * random_below(count, rng);
    if (is_probable_prime(candidate)) return candidate;
  }
  throw Error(ErrorCode::GenerationFailed, "no prime found within the attempt budget");
}

std::optional<unsigned> multiplicative_order(const Natural& x, const Natural& n, unsigned cap) {
  if (n < 2) throw Error(ErrorCode::InvalidModulus, "multiplicative_order: modulus must be >= 2");
  require_non_negative(x, "multiplicative_order x");
  const Natural base = x % n;
  if (gcd(base, n) != 1) throw Error(ErrorCode::NotAUnit, "element is not a unit");
  Natural power = base;
  for (unsigned k = 1; k <= cap; ++k) {
    if (power == 1) return k;
    power = power * base % n;
  }
  return std::nullopt;
}

}  // namespace quartic
