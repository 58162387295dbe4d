#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "quartic/natural.hpp"

namespace quartic {

// Modulus regimes for the map m -> m^4 mod n.
//   Prime:       n = p, p = 5 (mod 8); four roots of unity.
//   Composite4:  n = pq, p = q = 3 (mod 4); phi(n) = 4 (mod 8), four roots.
//   Composite16: n = pq, p = q = 1 (mod 4); sixteen roots.
enum class KeyMode { Prime, Composite4, Composite16 };

std::string_view to_string(KeyMode mode);
/// Inverse of to_string; throws SyntaxError on an unknown name.
KeyMode parse_key_mode(std::string_view name);

/// Number of fourth roots of unity for a mode: 4 or 16.
std::size_t root_count(KeyMode mode);

struct PublicKey {
  KeyMode mode = KeyMode::Prime;
  Natural n;
  std::vector<Natural> unity_roots;  // strictly ascending

  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct PrivateKey {
  KeyMode mode = KeyMode::Prime;
  Natural p;
  std::optional<Natural> q;  // absent in Prime mode
  Natural n;
  std::optional<Natural> a;  // multiplier with 16 | a * totient + 4; absent in Composite16 mode
  std::optional<Natural> d;  // inverse exponent; absent in Composite16 mode
  std::vector<Natural> unity_roots;

  PublicKey public_key() const { return {mode, n, unity_roots}; }

  friend bool operator==(const PrivateKey&, const PrivateKey&) = default;
};

struct KeyPair {
  PublicKey public_key;
  PrivateKey private_key;
};

/// All preimages of one cipher, ascending. The side information for a message
/// is its 1-based position here.
class AssociateSet {
 public:
  explicit AssociateSet(std::vector<Natural> members);

  const std::vector<Natural>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  /// 1-based position of x; nullopt when x is not a member.
  std::optional<std::size_t> rank_of(const Natural& x) const;
  /// Member at a 1-based rank; throws RankOutOfRange.
  const Natural& at_rank(std::size_t rank) const;

  friend bool operator==(const AssociateSet&, const AssociateSet&) = default;

 private:
  std::vector<Natural> members_;
};

struct Envelope {
  Natural cipher;
  std::size_t rank = 1;

  friend bool operator==(const Envelope&, const Envelope&) = default;
};

struct ExponentPair {
  Natural a;
  Natural d;
};

/// {1, r, p - r, p - 1} with r^2 = -1 (mod p), ascending. Requires p = 1 (mod 4).
std::vector<Natural> unity_roots_prime(const Natural& p);

/// Solutions of x^4 = 1 modulo one odd prime: two or four of them.
std::vector<Natural> prime_fourth_roots_of_unity(const Natural& p);

/// CRT product of the per-prime solution sets of x^4 = 1, ascending.
/// Size is gcd(4, p - 1) * gcd(4, q - 1).
std::vector<Natural> unity_roots_composite(const Natural& p, const Natural& q);

/// Smallest root of multiplicative order exactly 4.
Natural select_alpha(const std::vector<Natural>& roots, const Natural& n);

/// Smallest a > 0 with 16 | a * totient + 4, and d = (a * totient + 4) / 16.
/// Requires totient = 4 (mod 8).
ExponentPair derive_exponent(const Natural& totient);

/// Builds a consistent key pair from given primes. q is ignored in Prime mode.
KeyPair make_keys(KeyMode mode, const Natural& p, const std::optional<Natural>& q = std::nullopt);

/// Draws primes of `bits` bits each in the mode's residue classes.
KeyPair keygen(KeyMode mode, unsigned bits, Rng& rng);

/// Checks every PrivateKey invariant; throws InvariantViolation naming the field.
void validate(const PrivateKey& key);
/// Checks the PublicKey invariants verifiable without the factorization.
void validate(const PublicKey& key);

Natural encrypt(const Natural& m, const PublicKey& key);
AssociateSet associates(const Natural& m, const PublicKey& key);
std::size_t rank_of(const Natural& m, const PublicKey& key);

/// Some x with x^4 = c (mod n).
Natural extract_quartic_root(const Natural& c, const PrivateKey& key);

Natural decrypt(const Envelope& envelope, const PrivateKey& key);

}  // namespace quartic
