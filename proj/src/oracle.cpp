#include "quartic/oracle.hpp"

#include <numeric>

#include "quartic/error.hpp"

namespace quartic::oracle {

namespace {

std::uint64_t checked_modulus(const Natural& n) {
  if (n < 2) throw Error(ErrorCode::InvalidModulus, "oracle modulus must be >= 2");
  if (n >= kBound) throw Error(ErrorCode::OracleBound, "oracle scans are limited to n < 10^7");
  return static_cast<std::uint64_t>(n);
}

std::uint64_t fourth_power(std::uint64_t x, std::uint64_t n) {
  const std::uint64_t sq = x * x % n;
  return sq * sq % n;
}

}  // namespace

std::vector<Natural> brute_roots_of_unity(const Natural& n) {
  const std::uint64_t modulus = checked_modulus(n);
  std::vector<Natural> roots;
  for (std::uint64_t x = 1; x < modulus; ++x) {
    if (fourth_power(x, modulus) == 1) roots.emplace_back(x);
  }
  return roots;
}

std::vector<Natural> brute_preimages(const Natural& c, const Natural& n) {
  const std::uint64_t modulus = checked_modulus(n);
  if (c < 0) throw Error(ErrorCode::InvalidArgument, "cipher must be non-negative");
  const auto target = static_cast<std::uint64_t>(c % modulus);
  std::vector<Natural> preimages;
  for (std::uint64_t x = 1; x < modulus; ++x) {
    if (fourth_power(x, modulus) == target && std::gcd(x, modulus) == 1) preimages.emplace_back(x);
  }
  return preimages;
}

std::vector<TableRow> table_for_prime(const Natural& p, const Natural& alpha) {
  const std::uint64_t modulus = checked_modulus(p);
  for (std::uint64_t f = 2; f * f <= modulus; ++f) {
    if (modulus % f == 0) throw Error(ErrorCode::NotPrime, "table modulus must be prime");
  }
  if (alpha <= 0 || alpha >= p) throw Error(ErrorCode::InvalidArgument, "alpha must lie in [1, p)");
  const auto a = static_cast<std::uint64_t>(alpha);
  const std::uint64_t a2 = a * a % modulus;
  if (a2 == 1 || a2 * a2 % modulus != 1) throw Error(ErrorCode::NoGenerator, "alpha must have order 4");

  std::vector<bool> listed(modulus, false);
  std::vector<TableRow> rows;
  for (std::uint64_t m = 1; m < modulus; ++m) {
    if (listed[m]) continue;
    const std::uint64_t m1 = m * a % modulus;
    const std::uint64_t m2 = m1 * a % modulus;
    const std::uint64_t m3 = m2 * a % modulus;
    for (std::uint64_t v : {m, m1, m2, m3}) listed[v] = true;
    rows.push_back({m, m1, m2, m3, fourth_power(m, modulus)});
  }
  return rows;
}

}  // namespace quartic::oracle
