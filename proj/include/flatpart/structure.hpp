#pragma once

#include <cstdint>
#include <vector>

#include "flatpart/generate.hpp"
#include "flatpart/permutation.hpp"

namespace flatpart {

/// Structure of a 213-avoiding flattened partition: words p1..pr and
/// q1..q(r-1), all of consecutive integers, with
///   p1 p2 ... pr q(r-1) ... q1 = 1 2 ... n
/// and the permutation itself reading p1 q1 | p2 q2 | ... | pr.
struct PQDecomposition {
  std::vector<std::vector<int>> p_words;
  std::vector<std::vector<int>> q_words;

  /// Cut positions (each in 1..n-1) splitting the identity into the blocks
  /// p1..pr, q(r-1)..q1. Always of even cardinality 2r-2.
  std::vector<int> demarcations() const;

  /// Reassembles p1 q1 p2 q2 ... pr.
  Permutation recompose() const;
};

/// Rejects input outside the 213-avoiding flattened class.
PQDecomposition decompose_213(const Permutation& p);

/// Builds the class member determined by an even-size set of cut positions
/// among the n-1 gaps of the identity. Distinct cut sets give distinct
/// outputs, and the image over all such sets is the whole class.
Permutation compose_213(int n, std::vector<int> cuts);

/// Split of a 231-avoiding flattened partition at the position k of its
/// maximum: everything before is a permutation of {1..k-1} and everything
/// after, shifted down by k-1, is a permutation of {1..n-k}. Both sides are
/// again 231-avoiding flattened partitions.
struct SplitAtMax {
  int k = 0;  // 1-based position of n; 2 <= k <= n
  Permutation left;
  Permutation right;
};

SplitAtMax split_at_max(const Permutation& p);

/// Entry k counts the members of the (213,231)-avoiding class of [n] whose
/// first run has length k. Index 0 is unused and always zero.
std::vector<std::uint64_t> first_run_length_table(int n,
                                                  int guard = kMaxDirectN);

}  // namespace flatpart
