#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "flatpart/pattern.hpp"
#include "flatpart/permutation.hpp"

namespace flatpart {

// Size guards. Brute force walks all n! permutations; direct generation
// walks only flattened prefixes. Both are overridable per call.
inline constexpr int kMaxBruteN = 10;
inline constexpr int kMaxDirectN = 16;

/// Thrown when a requested n exceeds the applicable size guard.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
inline void check_guard(int n, int guard, const char* what) {
  if (n < 1 || n > guard)
    throw GuardError(std::string(what) + ": n must be in 1.." +
                     std::to_string(guard) + ", got " + std::to_string(n));
}
}  // namespace detail

/// Visits all n! permutations in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& visit, int guard = kMaxBruteN) {
  detail::check_guard(n, guard, "for_each_permutation");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

/// Visits the flattened partitions of [n] that avoid every pattern in
/// `avoid`, in lexicographic order of the one-line word.
///
/// Construction is run by run: a new run must start with the minimum unused
/// value (forced by strictly increasing starting points), and a run may be
/// closed only while that minimum is smaller than the run's last element
/// (run maximality). With `prune` set, branches whose placed prefix already
/// contains a forbidden occurrence are abandoned; occurrences survive
/// extension, so pruning never changes the produced set. With `prune`
/// unset, the definitional post-filter is applied at the leaves instead.
template <class F>
void for_each_flattened(int n, const PatternSet& avoid, F&& visit,
                        int guard = kMaxDirectN, bool prune = true) {
  detail::check_guard(n, guard, "for_each_flattened");
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  word.push_back(1);
  used[1] = 1;
  const bool filter = !avoid.unconstrained();

  auto step = [&](auto&& self, int run_last, int placed) -> void {
    if (placed == n) {
      if (!prune && filter && !avoids(word, avoid)) return;
      visit(Permutation(word));
      return;
    }
    int m = 1;
    while (used[m]) ++m;  // minimum unused value
    auto descend = [&](int v, int next_last) {
      if (prune && filter && extension_creates_occurrence(word, v, avoid))
        return;
      word.push_back(v);
      used[v] = 1;
      self(self, next_last, placed + 1);
      used[v] = 0;
      word.pop_back();
    };
    // Closing the run first keeps the output lexicographic: m is smaller
    // than every legal extension value.
    if (run_last > m) descend(m, m);
    for (int v = run_last + 1; v <= n; ++v)
      if (!used[v]) descend(v, v);
  };
  step(step, 1, 1);
}

std::vector<Permutation> all_permutations(int n, int guard = kMaxBruteN);
std::vector<Permutation> all_flattened(int n, int guard = kMaxDirectN);

/// The pattern-avoiding flattened partition class, lexicographically
/// ordered, by direct construction.
std::vector<Permutation> enumerate_avoiding(int n, const PatternSet& ps,
                                            int guard = kMaxDirectN);

/// Independent oracle: filter all n! permutations through is_flattened and
/// the definitional avoidance test.
std::vector<Permutation> brute_force_avoiding(int n, const PatternSet& ps,
                                              int guard = kMaxBruteN);

std::uint64_t count_avoiding(int n, const PatternSet& ps,
                             int guard = kMaxDirectN);

}  // namespace flatpart
