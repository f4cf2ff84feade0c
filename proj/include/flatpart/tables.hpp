#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flatpart/generate.hpp"
#include "json.hpp"

namespace flatpart {

enum class CountMethod { brute, direct, closed_form };
std::string_view method_name(CountMethod m);

/// Exact counts keyed by (pattern-set, n) with per-entry provenance.
/// Recording the same cell twice is allowed only when the values agree,
/// which makes cross-method reconciliation a structural invariant.
class CountTable {
 public:
  void add(const PatternSet& ps, int n, std::uint64_t count, CountMethod m);
  void merge(const CountTable& other);

  std::optional<std::uint64_t> lookup(const PatternSet& ps, int n) const;
  bool empty() const { return cells_.empty(); }
  std::size_t size() const { return cells_.size(); }

  /// CSV with header "n,patterns,count,method", rows ordered by pattern key
  /// then n. Cells recorded under several methods join them with '+'.
  std::string to_csv() const;

  /// Object keyed by pattern-set string, then by n.
  nlohmann::ordered_json to_json() const;

 private:
  struct Cell {
    std::uint64_t count = 0;
    std::set<std::string> methods;
  };
  std::map<std::pair<std::string, int>, Cell> cells_;
};

/// The six single patterns followed by the fifteen pairs, in key order.
const std::vector<PatternSet>& standard_pattern_sets();

/// Closed-form count for any of the 21 standard pattern sets; nullopt for
/// the unconstrained set. Sequences: 123 dies after n = 3; 132 pins the
/// identity; 213 and 312 give 2^(n-2); 231 gives Motzkin; 321 gives
/// Catalan; pairs follow Fibonacci, 2^(n-2), C(n-1,2)+1, n-1, all-ones or
/// the terminating 123 rows.
std::optional<std::uint64_t> closed_form_count(int n, const PatternSet& ps);

/// Fills all 21 standard rows for 1 <= n <= n_max using one method.
CountTable build_count_table(int n_max, CountMethod method);

}  // namespace flatpart
