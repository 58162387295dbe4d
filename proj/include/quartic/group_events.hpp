#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "quartic/natural.hpp"

namespace quartic {

/// Cyclic subgroup {1, g, g^2, g^3} generated by an order-4 root of unity.
struct RootGroup {
  Natural generator;
  std::array<Natural, 4> members;  // generator order: 1, g, g^2, g^3

  friend bool operator==(const RootGroup&, const RootGroup&) = default;
};

struct GroupPartition {
  Natural n;
  std::vector<RootGroup> groups;     // six, ascending by generator
  std::vector<Natural> involutions;  // the three repeated squares, ascending
};

/// Splits sixteen fourth roots of unity into the six order-4 cyclic groups.
/// x and x^3 generate the same group; the smaller one is its generator.
GroupPartition partition_groups(const std::vector<Natural>& roots, const Natural& n);

/// Uniform group index in 1..6.
std::size_t sample_event(const GroupPartition& partition, Rng& rng);

}  // namespace quartic
