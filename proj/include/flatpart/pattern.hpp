#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flatpart/permutation.hpp"

namespace flatpart {

/// A classical pattern of length 3. The occurrence scanners below accept
/// words of any length; only 3-letter patterns are exposed through pattern
/// sets and the command line.
class Pattern {
 public:
  explicit Pattern(Permutation word);
  static Pattern parse(std::string_view s);  // "213"

  const Permutation& word() const { return word_; }
  std::string str() const;

  auto operator<=>(const Pattern&) const = default;

 private:
  Permutation word_;
};

/// Zero, one or two distinct patterns. Empty means "no constraint".
/// Canonical order is numeric, so {231,213} and {213,231} are equal.
class PatternSet {
 public:
  PatternSet() = default;
  explicit PatternSet(std::vector<Pattern> patterns);
  static PatternSet parse(std::string_view csv);  // "213,231" or ""

  const std::vector<Pattern>& patterns() const { return patterns_; }
  bool unconstrained() const { return patterns_.empty(); }

  /// Sorted words joined with '+', e.g. "213+231". Empty set gives "".
  std::string key() const;

  auto operator<=>(const PatternSet&) const = default;

 private:
  std::vector<Pattern> patterns_;
};

/// True iff a and b have equal length and the same relative order at every
/// index pair.
bool order_isomorphic(std::span<const int> a, std::span<const int> b);

// Definitional subsequence scan. For length-3 patterns this is the plain
// cubic triple scan, which is the correctness reference for this library.
bool contains(std::span<const int> word, std::span<const int> pattern);
std::uint64_t count_occurrences(std::span<const int> word,
                                std::span<const int> pattern);

bool contains(const Permutation& p, const Pattern& t);
std::uint64_t count_occurrences(const Permutation& p, const Pattern& t);

bool avoids(std::span<const int> word, const PatternSet& ps);
bool avoids(const Permutation& p, const PatternSet& ps);

/// True iff appending `next` to `prefix` (all values distinct) creates an
/// occurrence of some pattern in `ps` that uses the appended element.
/// Occurrences are stable under extension, so a generator may prune with
/// this check without changing the produced set.
bool extension_creates_occurrence(std::span<const int> prefix, int next,
                                  const PatternSet& ps);

/// 132-avoiding with no positions i < j such that p(i) < p(j) < p(j+1).
bool is_motzkin_permutation(const Permutation& p);

}  // namespace flatpart
