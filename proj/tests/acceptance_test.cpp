// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quartic/cli.hpp"
#include "quartic/core.hpp"
#include "quartic/error.hpp"
#include "quartic/group_events.hpp"
#include "quartic/numtheory.hpp"
#include "quartic/oracle.hpp"
#include "quartic/protocol.hpp"

using namespace quartic;

namespace {

using Naturals = std::vector<Natural>;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

Natural random_unit(const Natural& n, Rng& rng) {
  for (;;) {
    Natural m = random_between(1, n, rng);
    if (gcd(m, n) == 1) return m;
  }
}

Outcome prime_exchange() {
  Outcome o;
  const KeyPair keys = make_keys(KeyMode::Prime, 37);
  const PublicKey& pub = keys.public_key;
  o.require(pub.unity_roots == Naturals{1, 6, 31, 36}, "roots of unity mod 37");
  o.require(select_alpha(pub.unity_roots, 37) == 6, "alpha");
  o.require(*keys.private_key.a == 3 && *keys.private_key.d == 7, "a=3, d=7");
  o.require(encrypt(7, pub) == 33, "encrypt(7)");
  o.require(rank_of(7, pub) == 2, "rank_of(7)");
  o.require(associates(7, pub).members() == Naturals{5, 7, 30, 32}, "associates(7)");
  o.require(mod_pow(33, 7, 37) == 7, "33^7 mod 37");
  o.require(decrypt({33, 2}, keys.private_key) == 7, "decrypt(33, 2)");
  return o;
}

Outcome mapping_table() {
  Outcome o;
  std::ostringstream out, err;
  const int code = cli::run({"table", "--prime", "37", "--alpha", "6"}, out, err);
  o.require(code == 0, "exit code " + std::to_string(code) + ": " + err.str());
  const std::string expected =
      "m\tm*alpha\tm*alpha^2\tm*alpha^3\tc\n"
      "1\t6\t36\t31\t1\n"
      "2\t12\t35\t25\t16\n"
      "3\t18\t34\t19\t7\n"
      "4\t24\t33\t13\t34\n"
      "5\t30\t32\t7\t33\n"
      "8\t11\t29\t26\t26\n"
      "9\t17\t28\t20\t12\n"
      "10\t23\t27\t14\t10\n"
      "15\t16\t22\t21\t9\n";
  o.require(out.str() == expected, "table text differs:\n" + out.str());
  return o;
}

Outcome composite_exchange() {
  Outcome o;
  const KeyPair keys = make_keys(KeyMode::Composite16, 17, 13);
  const PublicKey& pub = keys.public_key;
  // Listed in the order the CRT enumeration produces them.
  Naturals listed = {1, 157, 183, 118, 18, 174, 200, 135, 86, 21, 47, 203, 103, 38, 64, 220};
  std::sort(listed.begin(), listed.end());
  const Naturals expected_class = {10, 11, 23, 24, 28, 41, 62, 75, 146, 159, 180, 193, 197, 198, 210, 211};
  o.require(pub.unity_roots == listed, "sixteen roots of unity mod 221");
  o.require(encrypt(24, pub) == 55, "encrypt(24)");
  o.require(associates(24, pub).members() == expected_class, "associates(24)");
  o.require(rank_of(24, pub) == 4, "rank_of(24)");
  const Natural root = extract_quartic_root(55, keys.private_key);
  o.require(std::binary_search(expected_class.begin(), expected_class.end(), root), "extracted root in class");
  o.require(root == 210, "extracted root is 210, got " + to_string(root));
  o.require(decrypt({55, 4}, keys.private_key) == 24, "decrypt(55, 4)");
  return o;
}

Outcome probability_events() {
  Outcome o;
  const GroupPartition partition = partition_groups(unity_roots_composite(17, 13), 221);
  std::set<std::set<Natural>> got;
  for (const RootGroup& g : partition.groups) got.insert({g.members.begin(), g.members.end()});
  const std::set<std::set<Natural>> expected = {
      {1, 18, 103, 86}, {1, 21, 220, 200}, {1, 38, 118, 64},
      {1, 47, 220, 174}, {1, 157, 118, 183}, {1, 203, 103, 135}};
  o.require(partition.groups.size() == 6, "six groups");
  o.require(got == expected, "group sets");
  o.require(std::set<Natural>(partition.involutions.begin(), partition.involutions.end()) ==
                std::set<Natural>{103, 220, 118},
            "involutions");
  return o;
}

Outcome round_trip() {
  Outcome o;
  Rng rng(20260501);
  std::size_t checked = 0;
  for (KeyMode mode : {KeyMode::Prime, KeyMode::Composite4, KeyMode::Composite16}) {
    for (int k = 0; k < 100; ++k) {
      const unsigned bits = 8 + static_cast<unsigned>(rng() % 25);  // 8..32
      const KeyPair keys = keygen(mode, bits, rng);
      for (int i = 0; i < 100; ++i) {
        const Natural m = random_unit(keys.public_key.n, rng);
        const Envelope envelope{encrypt(m, keys.public_key), rank_of(m, keys.public_key)};
        const Natural back = decrypt(envelope, keys.private_key);
        ++checked;
        o.require(back == m, std::string(to_string(mode)) + " n=" + to_string(keys.public_key.n) +
                                 " m=" + to_string(m) + " -> " + to_string(back));
      }
    }
  }
  o.require(checked == 30000, "message count");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t primes = 0;
  for (Natural p = 5; p < 2000; p += 8) {
    if (!is_probable_prime(p)) continue;
    ++primes;
    o.require(unity_roots_prime(p) == oracle::brute_roots_of_unity(p), "roots mod " + to_string(p));
  }
  o.require(primes == 79, "79 primes = 5 (mod 8) below 2000, found " + std::to_string(primes));

  const std::vector<KeyPair> keys = {make_keys(KeyMode::Composite4, 7, 11),
                                     make_keys(KeyMode::Composite16, 17, 13)};
  for (const KeyPair& k : keys) {
    const Natural& n = k.public_key.n;
    for (Natural m = 1; m < n; ++m) {
      if (gcd(m, n) != 1) continue;
      o.require(associates(m, k.public_key).members() ==
                    oracle::brute_preimages(encrypt(m, k.public_key), n),
                "associates(" + to_string(m) + ") mod " + to_string(n));
    }
  }
  return o;
}

Outcome kernel_law() {
  Outcome o;
  Rng rng(7);
  for (KeyMode mode : {KeyMode::Prime, KeyMode::Composite4, KeyMode::Composite16}) {
    for (int k = 0; k < 10; ++k) {
      const KeyPair keys = keygen(mode, 8 + static_cast<unsigned>(rng() % 25), rng);
      const PublicKey& pub = keys.public_key;
      for (int i = 0; i < 1000; ++i) {
        const Natural m = random_unit(pub.n, rng);
        const Natural c = encrypt(m, pub);
        for (const Natural& r : pub.unity_roots) {
          o.require(encrypt(m * r % pub.n, pub) == c,
                    "n=" + to_string(pub.n) + " m=" + to_string(m) + " r=" + to_string(r));
        }
      }
    }
  }
  return o;
}

Outcome uniformity() {
  Outcome o;
  const GroupPartition partition = partition_groups(unity_roots_composite(17, 13), 221);
  Rng rng(60000);
  std::array<int, 6> counts{};
  for (int i = 0; i < 60000; ++i) ++counts[sample_event(partition, rng) - 1];
  std::string summary;
  for (int c : counts) {
    summary += std::to_string(c) + " ";
    o.require(c >= 9000 && c <= 11000, "frequency outside [9000, 11000]");
  }
  if (!o.ok) o.detail += ": " + summary;
  return o;
}

// Runs parse on arbitrary text; only quartic::Error may escape.
template <typename Parse>
bool survives(Parse parse, const std::string& text, std::string& why) {
  try {
    parse(text);
  } catch (const Error&) {
  } catch (const std::exception& e) {
    why = e.what();
    return false;
  }
  return true;
}

Outcome format_robustness() {
  Outcome o;
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    const auto mode = static_cast<KeyMode>(i % 3);
    const KeyPair keys = keygen(mode, 5 + static_cast<unsigned>(rng() % 60), rng);
    const std::string pub = serialize_public(keys.public_key);
    const std::string priv = serialize_private(keys.private_key);
    o.require(parse_public(pub) == keys.public_key && serialize_public(parse_public(pub)) == pub,
              "public round trip " + to_string(keys.public_key.n));
    o.require(parse_private(priv) == keys.private_key && serialize_private(parse_private(priv)) == priv,
              "private round trip " + to_string(keys.public_key.n));

    const Envelope envelope{random_between(1, Natural(1) << 128, rng), 1 + rng() % 16};
    const std::string text = serialize_envelope(envelope);
    o.require(parse_envelope(text) == envelope && serialize_envelope(parse_envelope(text)) == text,
              "envelope round trip");
  }

  const std::string templates[] = {serialize_public(make_keys(KeyMode::Composite16, 17, 13).public_key),
                                   serialize_private(make_keys(KeyMode::Prime, 37).private_key),
                                   serialize_envelope({55, 4})};
  std::string why;
  for (int i = 0; i < 10000; ++i) {
    // Pure random bytes.
    std::string noise(rng() % 300, '\0');
    for (char& ch : noise) ch = static_cast<char>(rng() % 256);
    // Valid text with a few corrupted bytes.
    std::string mutated = templates[i % 3];
    for (int e = 0, edits = 1 + static_cast<int>(rng() % 3); e < edits; ++e) {
      mutated[rng() % mutated.size()] = static_cast<char>(rng() % 256);
    }
    for (const std::string* input : {&noise, &mutated}) {
      o.require(survives(parse_public, *input, why), "parse_public threw " + why);
      o.require(survives(parse_private, *input, why), "parse_private threw " + why);
      o.require(survives(parse_envelope, *input, why), "parse_envelope threw " + why);
    }
  }
  return o;
}

struct Criterion {
  const char* id;
  const char* name;
  std::function<Outcome()> run;
  double time_limit_s;  // 0 = no limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "Prime-modulus exchange (p=37, alpha=6, m=7)", prime_exchange, 1.0},
      {"AC2", "4-to-1 mapping table via `table --prime 37 --alpha 6`", mapping_table, 0},
      {"AC3", "Composite exchange (n=17*13, m=24)", composite_exchange, 1.0},
      {"AC4", "Six groups and involutions {103,118,220} mod 221", probability_events, 0},
      {"AC5", "Round trip, 100 keys x 100 messages per mode, primes <= 32 bits", round_trip, 60.0},
      {"AC6", "Oracle equivalence (p = 5 mod 8 < 2000; every unit mod 77 and 221)", oracle_equivalence, 0},
      {"AC7", "Kernel law encrypt(m*r) = encrypt(m), 1000 messages per key", kernel_law, 0},
      {"AC8", "sample_event uniformity, 60000 draws in [9000, 11000]", uniformity, 0},
      {"AC9", "Format round trips (1000) and parser fuzzing (10000 per parser)", format_robustness, 0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("unexpected exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
      outcome.ok = false;
      outcome.detail = "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.time_limit_s) + " s";
    }
    std::cout << (outcome.ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << " (" << seconds << " s)";
    if (!outcome.ok) std::cout << ": " << outcome.detail;
    std::cout << '\n';
    failures += !outcome.ok;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
