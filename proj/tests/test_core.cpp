#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "flatpart/generate.hpp"
#include "flatpart/pattern.hpp"
#include "flatpart/permutation.hpp"
#include "flatpart/series.hpp"
#include "flatpart/set_partition.hpp"

using namespace flatpart;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

// Oracle for run splitting: cut exactly at the descents.
std::vector<std::vector<int>> runs_by_descent_cuts(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  for (int i = 0; i < p.size(); ++i) {
    if (!cur.empty() && p[i] < cur.back()) {
      out.push_back(cur);
      cur.clear();
    }
    cur.push_back(p[i]);
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("permutation construction and validation") {
  CHECK(P("139278456").size() == 9);
  CHECK(Permutation::identity(4).word() == std::vector<int>{1, 2, 3, 4});
  CHECK(Permutation{}.empty());
  CHECK(Permutation::identity(0).empty());
  CHECK(Permutation::identity(5).is_identity());
  CHECK_FALSE(P("132").is_identity());
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
}

TEST_CASE("parsing and printing") {
  CHECK(parse_compact("139278456").word() ==
        std::vector<int>{1, 3, 9, 2, 7, 8, 4, 5, 6});
  CHECK(parse_comma("1,3,9,2,7,8,4,5,6") == parse_compact("139278456"));
  CHECK(parse_comma("1, 2") == Permutation::identity(2));
  CHECK(parse_permutation("1,11,2,3,4,5,6,7,8,9,10").size() == 11);
  CHECK(to_compact(P("132")) == "132");
  CHECK(to_comma(P("132")) == "1,3,2");
  CHECK(to_display(P("139278456")) == "139278456");
  CHECK(run_display(P("139278456")) == "139|278|456");
  CHECK(run_display(parse_comma("1,3,2,4,6,5")) == "13|246|5");

  CHECK_THROWS_AS(parse_compact(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_compact("102"), std::invalid_argument);
  CHECK_THROWS_AS(parse_comma("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_comma("132465"), std::invalid_argument);
  Permutation big = parse_comma("1,11,2,3,4,5,6,7,8,9,10");
  CHECK_THROWS_AS(to_compact(big), std::invalid_argument);
  CHECK(to_display(big) == "1,11,2,3,4,5,6,7,8,9,10");

  // Round trips, both forms.
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [](const Permutation& p) {
      CHECK(parse_compact(to_compact(p)) == p);
      CHECK(parse_comma(to_comma(p)) == p);
    });
}

TEST_CASE("run decomposition") {
  auto rd = run_decompose(P("139278456"));
  CHECK(rd.runs == std::vector<std::vector<int>>{{1, 3, 9}, {2, 7, 8},
                                                 {4, 5, 6}});
  CHECK(rd.starts == std::vector<int>{1, 2, 4});
  CHECK(rd.lengths == std::vector<int>{3, 3, 3});

  auto one = run_decompose(Permutation::identity(7));
  CHECK(one.count() == 1);
  CHECK(one.lengths == std::vector<int>{7});

  CHECK(run_decompose(parse_comma("1,3,2,4,6,5")).runs ==
        std::vector<std::vector<int>>{{1, 3}, {2, 4, 6}, {5}});

  CHECK(run_decompose(Permutation{}).count() == 0);

  // The scan agrees with the descent-cut oracle on every permutation.
  for (int n = 1; n <= 7; ++n)
    for_each_permutation(n, [](const Permutation& p) {
      if (run_decompose(p).runs != runs_by_descent_cuts(p)) {
        CHECK(run_decompose(p).runs == runs_by_descent_cuts(p));
      }
    });

  // Concatenation restores the word, exhaustively.
  for (int n = 1; n <= 9; ++n)
    for_each_permutation(n, [](const Permutation& p) {
      std::vector<int> cat;
      for (const auto& r : run_decompose(p).runs)
        cat.insert(cat.end(), r.begin(), r.end());
      if (cat != p.word()) {
        CHECK(cat == p.word());  // report only on failure
      }
    });
}

TEST_CASE("flattened test") {
  CHECK(is_flattened(P("139278456")));
  CHECK_FALSE(is_flattened(P("213")));
  CHECK(is_flattened(P("12534")));
  CHECK(is_flattened(Permutation{}));

  for (int n = 1; n <= 8; ++n)
    for_each_permutation(n, [](const Permutation& p) {
      if (is_flattened(p) && p[0] != 1) {
        CHECK(p[0] == 1);
      }
    });
}

TEST_CASE("flatten of a set partition") {
  CHECK(flatten_set_partition(SetPartition({{1, 2}, {3}})) == P("123"));
  CHECK(flatten_set_partition(SetPartition({{1}, {2}, {3}})) == P("123"));
  CHECK(flatten_set_partition(SetPartition({{9, 3, 1}, {2, 7, 8}, {5, 6, 4}}))
        == P("139278456"));

  CHECK_THROWS_AS(SetPartition({{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition({{1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition({{1, 5}}), std::invalid_argument);

  // Bell counts, and every image is flattened.
  const std::vector<std::size_t> bell = {1, 2, 5, 15, 52, 203, 877};
  for (int n = 1; n <= 7; ++n) {
    auto parts = all_set_partitions(n);
    CHECK(parts.size() == bell[static_cast<std::size_t>(n) - 1]);
    for (const SetPartition& sp : parts)
      CHECK(is_flattened(flatten_set_partition(sp)));
  }
}

TEST_CASE("pattern containment") {
  const Pattern t231 = Pattern::parse("231");
  const Pattern t213 = Pattern::parse("213");
  const Pattern t321 = Pattern::parse("321");
  const Permutation w = P("7345612");

  CHECK(contains(w, t231));
  CHECK_FALSE(contains(w, t213));
  CHECK_FALSE(contains(P("123"), t321));
  CHECK(count_occurrences(w, t231) == 12);

  // Six of the twelve occurrences, as value triples in position order.
  for (auto triple : std::vector<std::vector<int>>{
           {5, 6, 1}, {3, 5, 2}, {3, 6, 2}, {4, 5, 2}, {4, 6, 1}, {4, 6, 2}}) {
    std::vector<int> pos;
    for (int v : triple)
      for (int i = 0; i < w.size(); ++i)
        if (w[i] == v) pos.push_back(i);
    CHECK(std::is_sorted(pos.begin(), pos.end()));
    CHECK(order_isomorphic(triple, t231.word().word()));
  }

  // contains and count agree, exhaustively.
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [&](const Permutation& p) {
      for (const char* t : {"123", "132", "213", "231", "312", "321"}) {
        const Pattern pat = Pattern::parse(t);
        if (contains(p, pat) != (count_occurrences(p, pat) > 0)) {
          CHECK(contains(p, pat) == (count_occurrences(p, pat) > 0));
        }
      }
    });

  // Generic scanner handles other lengths.
  const std::vector<int> w4 = {1, 3, 2, 4};
  const std::vector<int> t4 = {1, 3, 2, 4};
  CHECK(contains(std::span<const int>(w4), std::span<const int>(t4)));
  const std::vector<int> t2 = {2, 1};
  CHECK(count_occurrences(std::span<const int>(w4),
                          std::span<const int>(t2)) == 1);
}

TEST_CASE("pattern sets") {
  CHECK(PatternSet::parse("213,231").key() == "213+231");
  CHECK(PatternSet::parse("231,213") == PatternSet::parse("213,231"));
  CHECK(PatternSet::parse("213,213").patterns().size() == 1);
  CHECK(PatternSet::parse("").unconstrained());
  CHECK_THROWS_AS(PatternSet::parse("123,132,213"), std::invalid_argument);
  CHECK_THROWS_AS(PatternSet::parse("12"), std::invalid_argument);
  CHECK_THROWS_AS(PatternSet::parse("214"), std::invalid_argument);

  CHECK(avoids(P("7345612"), PatternSet::parse("213")));
  CHECK_FALSE(avoids(P("7345612"), PatternSet::parse("213,231")));
}

TEST_CASE("extension check matches a full rescan") {
  const PatternSet ps = PatternSet::parse("213,231");
  for (int n = 2; n <= 6; ++n)
    for_each_permutation(n, [&](const Permutation& p) {
      std::vector<int> prefix(p.word().begin(), p.word().end() - 1);
      const int last = p.word().back();
      const bool created = extension_creates_occurrence(prefix, last, ps);
      const bool before = avoids(prefix, ps);
      const bool after = avoids(p, ps);
      if (before) {
        CHECK(created == !after);
      }
    });
}

TEST_CASE("inversions") {
  CHECK(inversions(Permutation::identity(6)) == 0);
  CHECK(inversions(P("132")) == 1);
  CHECK(inversions(parse_comma("1,6,2,3,5,4")) == 5);

  for (int n = 1; n <= 7; ++n)
    for_each_permutation(n, [&](const Permutation& p) {
      std::vector<int> rev(p.word().rbegin(), p.word().rend());
      if (inversions(p) + inversions(Permutation(rev)) !=
          static_cast<std::int64_t>(n) * (n - 1) / 2) {
        CHECK(inversions(p) + inversions(Permutation(rev)) ==
              static_cast<std::int64_t>(n) * (n - 1) / 2);
      }
    });
}

TEST_CASE("standardize") {
  const std::vector<int> w = {2, 4, 6, 5};
  CHECK(standardize(w) == P("1243"));
  CHECK(standardize(std::vector<int>{1, 2, 3}) == P("123"));
  CHECK_THROWS_AS(standardize(std::vector<int>{2, 2}), std::invalid_argument);

  // Removing the first run of 13|246|5 and standardizing gives 124|3.
  CHECK(run_display(standardize(w)) == "124|3");

  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [](const Permutation& p) {
      CHECK(standardize(p.word()) == p);  // idempotence on permutations
    });
}

TEST_CASE("motzkin permutations") {
  CHECK(is_motzkin_permutation(P("12")));
  CHECK(is_motzkin_permutation(P("21")));
  CHECK_FALSE(is_motzkin_permutation(P("123")));
  CHECK(is_motzkin_permutation(Permutation{}));
  CHECK(is_motzkin_permutation(P("1")));

  for (int m = 1; m <= 7; ++m) {
    std::uint64_t count = 0;
    for_each_permutation(m, [&](const Permutation& p) {
      if (is_motzkin_permutation(p)) ++count;
    });
    CHECK(BigInt(count) == motzkin(m));
  }
}
