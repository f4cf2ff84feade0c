#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flatpart {

/// A permutation of {1..n} in one-line notation. Immutable value type.
/// The empty permutation (n = 0) is a supported convention; it never
/// appears in counting tables, which start at n = 1.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }
  bool is_identity() const;

  /// 0-based position access.
  int operator[](int i) const { return word_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& word() const { return word_; }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

/// Maximal ascending runs, left to right. Invariants: concatenating `runs`
/// restores the source word; runs strictly ascend internally; the last
/// element of each run exceeds the first element of the next (maximality).
struct RunDecomposition {
  std::vector<std::vector<int>> runs;
  std::vector<int> starts;   // first element of each run
  std::vector<int> lengths;
  int count() const { return static_cast<int>(runs.size()); }
};

RunDecomposition run_decompose(const Permutation& p);

/// True iff the run starting points strictly increase. Forces p[0] == 1.
bool is_flattened(const Permutation& p);

/// Number of pairs i < j with p(i) > p(j).
std::int64_t inversions(const Permutation& p);

/// Rank replacement: the order-isomorphic permutation of {1..|w|}.
/// Rejects repeated entries. The empty word maps to the empty permutation.
Permutation standardize(std::span<const int> w);

// Two textual forms: compact digit form for n <= 9 ("139278456") and comma
// form for any n ("1,3,9,2,7,8,4,5,6").
Permutation parse_compact(std::string_view s);
Permutation parse_comma(std::string_view s);
Permutation parse_permutation(std::string_view s);  // auto-detects the form

std::string to_compact(const Permutation& p);  // requires n <= 9
std::string to_comma(const Permutation& p);
std::string to_display(const Permutation& p);  // compact when n <= 9
std::string run_display(const Permutation& p);  // "139|278|456"

}  // namespace flatpart
