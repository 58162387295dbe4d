#include "quartic/core.hpp"

#include <algorithm>
#include <string>

#include "quartic/error.hpp"
#include "quartic/numtheory.hpp"

namespace quartic {

namespace {

constexpr unsigned kDistinctPrimeAttempts = 256;

void require_prime(const Natural& p, const char* field) {
  if (!is_probable_prime(p)) {
    throw Error(ErrorCode::NotPrime, std::string(field) + " = " + to_string(p) + " is not prime");
  }
}

Natural fourth_power(const Natural& x, const Natural& n) {
  const Natural sq = x * x % n;
  return sq * sq % n;
}

// Rejects messages that are not units, without revealing any common factor.
void require_unit_message(const Natural& m, const Natural& n) {
  if (m <= 0) throw Error(ErrorCode::MessageNotUnit, "message must be a nonzero unit");
  if (m >= n) throw Error(ErrorCode::MessageOutOfRange, "message must be smaller than the modulus");
  if (gcd(m, n) != 1) throw Error(ErrorCode::MessageNotUnit, "message is not a unit modulo n");
}

// Fourth root modulo a prime p = 1 (mod 4) by two square roots, taking the
// smaller root at each step.
Natural fourth_root_mod_prime(const Natural& c, const Natural& p) {
  const auto first = sqrt_mod_prime(c % p, p);
  if (!first) throw Error(ErrorCode::NotAQuarticResidue, "cipher is not a square modulo a prime factor");
  for (const Natural& square : {first->first, first->second}) {
    if (auto root = sqrt_mod_prime(square, p)) return root->first;
  }
  throw Error(ErrorCode::NotAQuarticResidue, "cipher is not a fourth power modulo a prime factor");
}

void violation(std::string_view field, const std::string& detail) {
  throw Error(ErrorCode::InvariantViolation, std::string(field) + ": " + detail);
}

}  // namespace

std::string_view to_string(KeyMode mode) {
  switch (mode) {
    case KeyMode::Prime: return "prime";
    case KeyMode::Composite4: return "composite4";
    case KeyMode::Composite16: return "composite16";
  }
  return "unknown";
}

KeyMode parse_key_mode(std::string_view name) {
  if (name == "prime") return KeyMode::Prime;
  if (name == "composite4") return KeyMode::Composite4;
  if (name == "composite16") return KeyMode::Composite16;
  throw Error(ErrorCode::SyntaxError, "mode: unknown key mode '" + std::string(name) + "'");
}

std::size_t root_count(KeyMode mode) { return mode == KeyMode::Composite16 ? 16 : 4; }

AssociateSet::AssociateSet(std::vector<Natural> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
}

std::optional<std::size_t> AssociateSet::rank_of(const Natural& x) const {
  const auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin()) + 1;
}

const Natural& AssociateSet::at_rank(std::size_t rank) const {
  if (rank < 1 || rank > members_.size()) {
    throw Error(ErrorCode::RankOutOfRange,
                "rank " + std::to_string(rank) + " outside 1.." + std::to_string(members_.size()));
  }
  return members_[rank - 1];
}

std::vector<Natural> unity_roots_prime(const Natural& p) {
  require_prime(p, "p");
  if (p % 4 != 1) {
    throw Error(ErrorCode::NoQuarticStructure, "only +1 and -1 solve x^4 = 1 unless p = 1 (mod 4)");
  }
  const auto roots_of_minus_one = sqrt_mod_prime(p - 1, p);
  // -1 is a square for every p = 1 (mod 4).
  return {1, roots_of_minus_one->first, roots_of_minus_one->second, p - 1};
}

std::vector<Natural> prime_fourth_roots_of_unity(const Natural& p) {
  require_prime(p, "p");
  if (p == 2) throw Error(ErrorCode::InvalidArgument, "p must be odd");
  if (p % 4 == 1) return unity_roots_prime(p);
  return {1, p - 1};
}

std::vector<Natural> unity_roots_composite(const Natural& p, const Natural& q) {
  if (p == q) throw Error(ErrorCode::PrimesNotDistinct, "p and q must differ");
  const auto roots_p = prime_fourth_roots_of_unity(p);
  const auto roots_q = prime_fourth_roots_of_unity(q);
  std::vector<Natural> roots;
  roots.reserve(roots_p.size() * roots_q.size());
  for (const Natural& rq : roots_q) {
    for (const Natural& rp : roots_p) roots.push_back(crt_combine(rp, p, rq, q));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Natural select_alpha(const std::vector<Natural>& roots, const Natural& n) {
  const Natural* best = nullptr;
  for (const Natural& r : roots) {
    if (gcd(r, n) != 1) continue;
    if (multiplicative_order(r, n, 4) == 4u && (best == nullptr || r < *best)) best = &r;
  }
  if (best == nullptr) throw Error(ErrorCode::NoGenerator, "no root of order 4");
  return *best;
}

ExponentPair derive_exponent(const Natural& totient) {
  if (totient <= 0 || totient % 8 != 4) {
    throw Error(ErrorCode::ExponentUnavailable, "totient must be 4 (mod 8), got " + to_string(totient));
  }
  // a * totient + 4 = 4 * (a * u + 1) with u odd; need a * u = 3 (mod 4).
  for (unsigned a = 1; a <= 3; ++a) {
    const Natural numerator = totient * a + 4;
    if (numerator % 16 == 0) return {a, numerator / 16};
  }
  throw Error(ErrorCode::ExponentUnavailable, "no multiplier found");
}

KeyPair make_keys(KeyMode mode, const Natural& p, const std::optional<Natural>& q) {
  PrivateKey key;
  key.mode = mode;
  key.p = p;
  require_prime(p, "p");

  if (mode == KeyMode::Prime) {
    if (p % 8 != 5) {
      if (p % 4 == 1) {
        throw Error(ErrorCode::ModeMismatch, "prime mode needs p = 5 (mod 8)");
      }
      throw Error(ErrorCode::NoQuarticStructure, "prime mode needs p = 5 (mod 8)");
    }
    key.n = p;
    key.unity_roots = unity_roots_prime(p);
    const ExponentPair e = derive_exponent(p - 1);
    key.a = e.a;
    key.d = e.d;
  } else {
    if (!q) throw Error(ErrorCode::InvalidArgument, "composite modes need a second prime q");
    require_prime(*q, "q");
    if (p == *q) throw Error(ErrorCode::PrimesNotDistinct, "p and q must differ");
    const unsigned wanted = mode == KeyMode::Composite4 ? 3 : 1;
    if (p % 4 != wanted || *q % 4 != wanted) {
      throw Error(ErrorCode::ModeMismatch, std::string(to_string(mode)) + " needs p = q = " +
                                               std::to_string(wanted) + " (mod 4)");
    }
    key.q = *q;
    key.n = p * *q;
    key.unity_roots = unity_roots_composite(p, *q);
    if (mode == KeyMode::Composite4) {
      const ExponentPair e = derive_exponent((p - 1) * (*q - 1));
      key.a = e.a;
      key.d = e.d;
    }
  }
  return {key.public_key(), key};
}

KeyPair keygen(KeyMode mode, unsigned bits, Rng& rng) {
  switch (mode) {
    case KeyMode::Prime:
      return make_keys(mode, generate_prime(bits, {5, 8}, rng));
    case KeyMode::Composite4:
    case KeyMode::Composite16: {
      const ResidueClass cls{mode == KeyMode::Composite4 ? 3 : 1, 4};
      const Natural p = generate_prime(bits, cls, rng);
      for (unsigned attempt = 0; attempt < kDistinctPrimeAttempts; ++attempt) {
        Natural q = generate_prime(bits, cls, rng);
        if (q != p) return make_keys(mode, p, q);
      }
      throw Error(ErrorCode::GenerationFailed, "could not draw two distinct primes");
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown key mode");
}

void validate(const PublicKey& key) {
  if (key.n < 2) violation("n", "modulus must be >= 2");
  const auto& roots = key.unity_roots;
  if (roots.size() != root_count(key.mode)) {
    violation("roots", "expected " + std::to_string(root_count(key.mode)) + " roots, found " +
                           std::to_string(roots.size()));
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Natural& r = roots[i];
    if (r < 1 || r >= key.n) violation("roots", to_string(r) + " is outside [1, n)");
    if (i > 0 && roots[i - 1] >= r) violation("roots", "list is not strictly ascending");
    if (fourth_power(r, key.n) != 1) {
      violation("roots", to_string(r) + " is not a fourth root of unity");
    }
  }
  if (roots.front() != 1 || roots.back() != key.n - 1) violation("roots", "must contain 1 and n-1");
  if (key.mode == KeyMode::Prime) {
    if (!is_probable_prime(key.n) || key.n % 8 != 5) violation("n", "prime mode needs a prime n = 5 (mod 8)");
  } else if (key.n % 2 == 0 || is_probable_prime(key.n)) {
    violation("n", "composite modes need an odd composite modulus");
  }
}

void validate(const PrivateKey& key) {
  KeyPair expected;
  try {
    expected = make_keys(key.mode, key.p, key.q);
  } catch (const Error& e) {
    violation(key.mode == KeyMode::Prime ? "p" : "p/q", e.what());
  }
  const PrivateKey& ref = expected.private_key;
  if (key.mode == KeyMode::Prime && key.q) violation("q", "prime mode has no second prime");
  if (key.n != ref.n) violation("n", "does not match the primes");
  if (key.unity_roots != ref.unity_roots) violation("roots", "do not match the fourth roots of unity");
  if (key.mode == KeyMode::Composite16) {
    if (key.a) violation("a", "composite16 keys have no multiplier");
    if (key.d) violation("d", "composite16 keys have no inverse exponent");
    return;
  }
  if (!key.a || *key.a <= 0) violation("a", "missing or zero multiplier");
  if (!key.d) violation("d", "missing inverse exponent");
  const Natural totient = key.mode == KeyMode::Prime ? key.p - 1 : (key.p - 1) * (*key.q - 1);
  const Natural numerator = *key.a * totient + 4;
  if (numerator % 16 != 0) violation("a", "a * totient + 4 is not divisible by 16");
  if (*key.d != numerator / 16) violation("d", "d != (a * totient + 4) / 16");
}

Natural encrypt(const Natural& m, const PublicKey& key) {
  require_unit_message(m, key.n);
  return fourth_power(m, key.n);
}

AssociateSet associates(const Natural& m, const PublicKey& key) {
  require_unit_message(m, key.n);
  std::vector<Natural> members;
  members.reserve(key.unity_roots.size());
  for (const Natural& r : key.unity_roots) members.push_back(m * r % key.n);
  return AssociateSet(std::move(members));
}

std::size_t rank_of(const Natural& m, const PublicKey& key) {
  return *associates(m, key).rank_of(m);
}

Natural extract_quartic_root(const Natural& c, const PrivateKey& key) {
  if (c <= 0 || c >= key.n || gcd(c, key.n) != 1) {
    throw Error(ErrorCode::NotAQuarticResidue, "cipher is not a unit modulo n");
  }
  Natural root;
  if (key.mode == KeyMode::Composite16) {
    if (!key.q) throw Error(ErrorCode::InvalidArgument, "composite key is missing q");
    root = crt_combine(fourth_root_mod_prime(c, key.p), key.p, fourth_root_mod_prime(c, *key.q), *key.q);
  } else {
    if (!key.d) throw Error(ErrorCode::InvalidArgument, "key is missing the inverse exponent");
    root = mod_pow(c, *key.d, key.n);
  }
  if (fourth_power(root, key.n) != c) {
    throw Error(ErrorCode::NotAQuarticResidue, "cipher is not a fourth power modulo n");
  }
  return root;
}

Natural decrypt(const Envelope& envelope, const PrivateKey& key) {
  if (envelope.rank < 1 || envelope.rank > key.unity_roots.size()) {
    throw Error(ErrorCode::RankOutOfRange, "rank " + std::to_string(envelope.rank) + " outside 1.." +
                                               std::to_string(key.unity_roots.size()));
  }
  const Natural root = extract_quartic_root(envelope.cipher, key);
  return associates(root, key.public_key()).at_rank(envelope.rank);
}

}  // namespace quartic
