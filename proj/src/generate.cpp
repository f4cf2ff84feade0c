#include "flatpart/generate.hpp"

namespace flatpart {

std::vector<Permutation> all_permutations(int n, int guard) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); },
                       guard);
  return out;
}

std::vector<Permutation> all_flattened(int n, int guard) {
  std::vector<Permutation> out;
  for_each_flattened(n, PatternSet{},
                     [&](const Permutation& p) { out.push_back(p); }, guard);
  return out;
}

std::vector<Permutation> enumerate_avoiding(int n, const PatternSet& ps,
                                            int guard) {
  std::vector<Permutation> out;
  for_each_flattened(n, ps, [&](const Permutation& p) { out.push_back(p); },
                     guard);
  return out;
}

std::vector<Permutation> brute_force_avoiding(int n, const PatternSet& ps,
                                              int guard) {
  std::vector<Permutation> out;
  for_each_permutation(
      n,
      [&](const Permutation& p) {
        if (is_flattened(p) && avoids(p, ps)) out.push_back(p);
      },
      guard);
  return out;
}

std::uint64_t count_avoiding(int n, const PatternSet& ps, int guard) {
  std::uint64_t count = 0;
  for_each_flattened(n, ps, [&](const Permutation&) { ++count; }, guard);
  return count;
}

}  // namespace flatpart
