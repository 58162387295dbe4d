#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quartic/core.hpp"

namespace quartic {

struct VerifyOptions {
  bool exhaustive = false;    // every unit m < n instead of a sample
  std::size_t samples = 100;  // messages drawn when not exhaustive
};

struct VerifyReport {
  std::size_t checks = 0;
  std::vector<std::string> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

inline constexpr std::uint64_t kExhaustiveBound = 1'000'000;

/// Cross-checks a key's fast paths against the brute-force oracle: the root
/// list, associate sets, root extraction, and the send/receive round trip.
/// Throws OracleBound when n is beyond the oracle's reach.
VerifyReport verify_key(const PrivateKey& key, const VerifyOptions& options, Rng& rng);

}  // namespace quartic
