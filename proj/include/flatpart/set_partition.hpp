#pragma once

#include <vector>

#include "flatpart/permutation.hpp"

namespace flatpart {

/// Disjoint non-empty blocks covering {1..n}. Construction sorts each block
/// increasingly and orders blocks by minimum element.
struct SetPartition {
  std::vector<std::vector<int>> blocks;

  explicit SetPartition(std::vector<std::vector<int>> raw_blocks);

  int ground_size() const;
};

/// Concatenates the (sorted, min-ordered) blocks into one word. The result
/// is always a flattened partition.
Permutation flatten_set_partition(const SetPartition& sp);

/// All set partitions of {1..n} via restricted growth strings. Intended for
/// exhaustive checks at small n.
std::vector<SetPartition> all_set_partitions(int n);

}  // namespace flatpart
