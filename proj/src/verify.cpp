#include "quartic/verify.hpp"

#include <numeric>
#include <unordered_map>

#include "quartic/error.hpp"
#include "quartic/numtheory.hpp"
#include "quartic/oracle.hpp"

namespace quartic {

namespace {

std::string list(const std::vector<Natural>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(values[i]);
  }
  return out + "}";
}

class Checker {
 public:
  Checker(const PrivateKey& key, VerifyReport& report)
      : key_(key), public_key_(key.public_key()), report_(report) {}

  void check_message(const Natural& m, const std::vector<Natural>& expected_class) {
    const Natural c = encrypt(m, public_key_);
    const AssociateSet set = associates(m, public_key_);
    expect(set.members() == expected_class,
           "associates(" + to_string(m) + ") = " + list(set.members()) + ", oracle " + list(expected_class));

    const Natural root = extract_quartic_root(c, key_);
    expect(set.rank_of(root).has_value(),
           "extracted root " + to_string(root) + " of " + to_string(c) + " is outside the class");

    const Envelope envelope{c, rank_of(m, public_key_)};
    const Natural back = decrypt(envelope, key_);
    expect(back == m, "round trip of " + to_string(m) + " gave " + to_string(back));
  }

  void expect(bool ok, const std::string& what) {
    ++report_.checks;
    if (!ok) report_.mismatches.push_back(what);
  }

 private:
  const PrivateKey& key_;
  PublicKey public_key_;
  VerifyReport& report_;
};

}  // namespace

VerifyReport verify_key(const PrivateKey& key, const VerifyOptions& options, Rng& rng) {
  validate(key);
  if (key.n >= oracle::kBound || (options.exhaustive && key.n >= kExhaustiveBound)) {
    throw Error(ErrorCode::OracleBound, "modulus too large for brute-force verification");
  }
  VerifyReport report;
  Checker checker(key, report);

  const auto roots = oracle::brute_roots_of_unity(key.n);
  checker.expect(roots == key.unity_roots,
                 "unity roots " + list(key.unity_roots) + ", oracle " + list(roots));

  const auto n = static_cast<std::uint64_t>(key.n);
  if (options.exhaustive) {
    // One pass grouping every unit by its fourth power, ascending within a class.
    std::unordered_map<std::uint64_t, std::vector<Natural>> classes;
    for (std::uint64_t x = 1; x < n; ++x) {
      if (std::gcd(x, n) != 1) continue;
      classes[static_cast<std::uint64_t>(x * x % n * (x * x % n) % n)].emplace_back(x);
    }
    for (std::uint64_t m = 1; m < n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      checker.check_message(m, classes.at(static_cast<std::uint64_t>(m * m % n * (m * m % n) % n)));
    }
  } else {
    for (std::size_t i = 0; i < options.samples; ++i) {
      Natural m;
      do {
        m = random_between(1, key.n, rng);
      } while (gcd(m, key.n) != 1);
      checker.check_message(m, oracle::brute_preimages(encrypt(m, key.public_key()), key.n));
    }
  }
  return report;
}

}  // namespace quartic
