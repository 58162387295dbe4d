#include "quartic/group_events.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quartic/error.hpp"

namespace quartic {

namespace {

constexpr std::size_t kGroupCount = 6;

}  // namespace

GroupPartition partition_groups(const std::vector<Natural>& roots, const Natural& n) {
  if (n < 2) throw Error(ErrorCode::InvalidModulus, "modulus must be >= 2");
  const std::set<Natural> root_set(roots.begin(), roots.end());
  if (roots.size() != 16 || root_set.size() != 16) {
    throw Error(ErrorCode::NotSixteenRoots, "expected 16 distinct roots, got " + std::to_string(root_set.size()));
  }
  for (const Natural& r : root_set) {
    const Residue x(r, n);
    if (x.pow(4).value() != 1) {
      throw Error(ErrorCode::NotSixteenRoots, to_string(r) + " is not a fourth root of unity");
    }
  }

  GroupPartition partition;
  partition.n = n;
  std::set<Natural> assigned;
  std::map<Natural, int> square_uses;
  for (const Natural& r : root_set) {
    if (assigned.contains(r)) continue;
    const Residue g(r, n);
    const Residue g2 = g * g;
    // Elements with x^2 = 1 would only give the degenerate {1, x, 1, x}.
    if (g2.value() == 1) continue;
    const Residue g3 = g2 * g;
    partition.groups.push_back({r, {Natural(1), r, g2.value(), g3.value()}});
    assigned.insert(r);
    assigned.insert(g3.value());
    ++square_uses[g2.value()];
  }

  if (partition.groups.size() != kGroupCount || square_uses.size() != 3 ||
      std::any_of(square_uses.begin(), square_uses.end(), [](const auto& kv) { return kv.second != 2; })) {
    throw Error(ErrorCode::NotSixteenRoots, "roots do not split into six cyclic groups of order 4");
  }
  for (const auto& [square, uses] : square_uses) partition.involutions.push_back(square);
  return partition;
}

std::size_t sample_event(const GroupPartition& partition, Rng& rng) {
  if (partition.groups.empty()) throw Error(ErrorCode::InvalidArgument, "empty partition");
  std::uniform_int_distribution<std::size_t> pick(1, partition.groups.size());
  return pick(rng);
}

}  // namespace quartic
