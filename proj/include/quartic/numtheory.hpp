#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "quartic/natural.hpp"

namespace quartic {

inline constexpr unsigned kDefaultPrimalityRounds = 40;
inline constexpr unsigned kPrimeAttemptBudget = 10000;

/// base^exponent mod modulus by left-to-right square-and-multiply.
Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus);

struct GcdResult {
  Natural g;
  Integer x;
  Integer y;
};

/// Extended Euclid: g = gcd(a, b) and a*x + b*y = g.
GcdResult ext_gcd(const Natural& a, const Natural& b);

Natural gcd(const Natural& a, const Natural& b);

/// b with a*b = 1 (mod m), 0 < b < m.
Natural mod_inverse(const Natural& a, const Natural& m);

/// Unique x in [0, pq) with x = r_p (mod p), x = r_q (mod q), evaluated as
/// (r_p * q * (q^-1 mod p) + r_q * p * (p^-1 mod q)) mod pq.
Natural crt_combine(const Natural& r_p, const Natural& p, const Natural& r_q, const Natural& q);

/// Same result via Garner's single-inverse lifting; kept as an independent
/// route for cross-checking crt_combine.
Natural crt_combine_garner(const Natural& r_p, const Natural& p, const Natural& r_q,
                           const Natural& q);

/// Square roots of a modulo an odd prime p (Tonelli-Shanks). Returns the pair
/// (r, p - r) with r <= p - r, (0, 0) for a = 0, and nullopt for a non-residue.
std::optional<std::pair<Natural, Natural>> sqrt_mod_prime(const Natural& a, const Natural& p);

/// Miller-Rabin. Exact for n < 2^64; otherwise error below 4^-rounds.
bool is_probable_prime(const Natural& n, unsigned rounds = kDefaultPrimalityRounds);

struct ResidueClass {
  Natural remainder;
  Natural modulus;
};

/// Random probable prime with exactly `bits` bits and p = remainder (mod modulus).
Natural generate_prime(unsigned bits, const ResidueClass& residue_class, Rng& rng);

/// Smallest k in [1, cap] with x^k = 1 (mod n), or nullopt.
std::optional<unsigned> multiplicative_order(const Natural& x, const Natural& n, unsigned cap);

}  // namespace quartic
