#pragma once

#include <array>
#include <vector>

#include "quartic/natural.hpp"

// Exhaustive reference scans. Plain loops over machine integers only; nothing
// here calls into the number-theory or core modules.
namespace quartic::oracle {

inline constexpr std::uint64_t kBound = 10'000'000;

/// Every x in [1, n) with x^4 = 1 (mod n).
std::vector<Natural> brute_roots_of_unity(const Natural& n);

/// Every unit x in [1, n) with x^4 = c (mod n).
std::vector<Natural> brute_preimages(const Natural& c, const Natural& n);

/// Row (m, m*alpha, m*alpha^2, m*alpha^3, m^4), all mod p.
using TableRow = std::array<Natural, 5>;

/// One row per 4-element class, keyed by the smallest member not yet listed.
std::vector<TableRow> table_for_prime(const Natural& p, const Natural& alpha);

}  // namespace quartic::oracle
