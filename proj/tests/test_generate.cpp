#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "flatpart/generate.hpp"
#include "flatpart/series.hpp"
#include "flatpart/tables.hpp"

using namespace flatpart;

namespace {

std::vector<std::string> displayed(const std::vector<Permutation>& v) {
  std::vector<std::string> out;
  for (const Permutation& p : v) out.push_back(to_display(p));
  return out;
}

}  // namespace

TEST_CASE("all_permutations") {
  CHECK(displayed(all_permutations(1)) == std::vector<std::string>{"1"});
  auto p3 = all_permutations(3);
  CHECK(p3.size() == 6);
  CHECK(to_display(p3.front()) == "123");
  CHECK(to_display(p3.back()) == "321");

  auto p8 = all_permutations(8);
  CHECK(p8.size() == 40320);
  std::set<Permutation> uniq(p8.begin(), p8.end());
  CHECK(uniq.size() == 40320);

  CHECK_THROWS_AS(all_permutations(11), GuardError);
  CHECK_THROWS_AS(all_permutations(0), GuardError);
}

TEST_CASE("all_flattened") {
  CHECK(displayed(all_flattened(1)) == std::vector<std::string>{"1"});
  CHECK(displayed(all_flattened(3)) ==
        std::vector<std::string>{"123", "132"});

  // Bell counts.
  const std::vector<std::size_t> expected = {1, 1, 2, 5, 15, 52, 203, 877};
  for (int n = 1; n <= 8; ++n)
    CHECK(all_flattened(n).size() ==
          expected[static_cast<std::size_t>(n) - 1]);

  // Matches the brute-force filter as a set (and as a sequence: both are
  // lexicographic).
  for (int n = 1; n <= 8; ++n)
    CHECK(all_flattened(n) == brute_force_avoiding(n, PatternSet{}));

  CHECK_THROWS_AS(all_flattened(17), GuardError);
}

TEST_CASE("enumerate_avoiding reproduces published classes") {
  CHECK(displayed(enumerate_avoiding(5, PatternSet::parse("213,231"))) ==
        std::vector<std::string>{"12345", "12354", "12534", "15234",
                                 "15243"});
  CHECK(displayed(enumerate_avoiding(4, PatternSet::parse("312,231"))) ==
        std::vector<std::string>{"1234", "1243", "1324"});
  CHECK(displayed(enumerate_avoiding(4, PatternSet::parse("213,231"))) ==
        std::vector<std::string>{"1234", "1243", "1423"});
  CHECK(displayed(enumerate_avoiding(5, PatternSet::parse("312,231"))) ==
        std::vector<std::string>{"12345", "12354", "12435", "13245",
                                 "13254"});
  CHECK(displayed(enumerate_avoiding(6, PatternSet::parse("213,231"))) ==
        std::vector<std::string>{"123456", "123465", "123645", "126345",
                                 "126354", "162345", "162354", "162534"});
  for (const char* t : {"123", "132", "213", "231", "312", "321"})
    CHECK(displayed(enumerate_avoiding(1, PatternSet::parse(t))) ==
          std::vector<std::string>{"1"});
}

TEST_CASE("outputs are lexicographically sorted") {
  for (const char* key : {"", "213", "321", "213,231"})
    for (int n = 1; n <= 8; ++n) {
      auto v = enumerate_avoiding(n, PatternSet::parse(key));
      CHECK(std::is_sorted(v.begin(), v.end()));
    }
}

TEST_CASE("pruned and unpruned generation agree") {
  for (const char* key : {"123", "213", "321", "213,231", "231,321"})
    for (int n = 1; n <= 8; ++n) {
      const PatternSet ps = PatternSet::parse(key);
      std::vector<Permutation> unpruned;
      for_each_flattened(n, ps,
                         [&](const Permutation& p) { unpruned.push_back(p); },
                         kMaxDirectN, /*prune=*/false);
      CHECK(enumerate_avoiding(n, ps) == unpruned);
    }
}

TEST_CASE("generator agrees with the brute-force filter") {
  for (int n = 1; n <= 7; ++n) {
    std::vector<PatternSet> sets = standard_pattern_sets();
    sets.push_back(PatternSet{});
    for (const PatternSet& ps : sets)
      CHECK(enumerate_avoiding(n, ps) == brute_force_avoiding(n, ps));
  }
}

TEST_CASE("count_avoiding spot values") {
  CHECK(count_avoiding(7, PatternSet::parse("231")) == 51);
  CHECK(count_avoiding(7, PatternSet::parse("321")) == 132);
  CHECK(count_avoiding(8, PatternSet::parse("231")) == 127);
  CHECK(count_avoiding(7, PatternSet::parse("213")) == 32);
  CHECK(count_avoiding(5, PatternSet::parse("213,321")) == 7);
  CHECK_THROWS_AS(count_avoiding(17, PatternSet::parse("213")), GuardError);
}

TEST_CASE("closed forms agree with direct counts") {
  for (const PatternSet& ps : standard_pattern_sets())
    for (int n = 1; n <= 12; ++n)
      CHECK(count_avoiding(n, ps) == closed_form_count(n, ps).value());
  CHECK_FALSE(closed_form_count(4, PatternSet{}).has_value());
}

TEST_CASE("count table provenance") {
  CountTable t;
  const PatternSet ps = PatternSet::parse("213");
  t.add(ps, 5, 8, CountMethod::direct);
  t.add(ps, 5, 8, CountMethod::brute);  // agreement is fine
  CHECK_THROWS_AS(t.add(ps, 5, 9, CountMethod::closed_form),
                  std::logic_error);
  CHECK(t.lookup(ps, 5) == 8);
  CHECK_FALSE(t.lookup(ps, 6).has_value());

  CountTable u;
  u.add(ps, 6, 16, CountMethod::direct);
  t.merge(u);
  CHECK(t.lookup(ps, 6) == 16);

  const std::string csv = t.to_csv();
  CHECK(csv.find("n,patterns,count,method\n") == 0);
  CHECK(csv.find("5,213,8,brute+direct") != std::string::npos);
  CHECK(csv.find("6,213,16,direct") != std::string::npos);

  auto j = t.to_json();
  CHECK(j["213"]["5"]["count"] == 8);
  CHECK(j["213"]["6"]["method"] == "direct");
}

TEST_CASE("full tables by different methods reconcile") {
  CountTable direct = build_count_table(7, CountMethod::direct);
  CountTable brute = build_count_table(7, CountMethod::brute);
  CountTable closed = build_count_table(7, CountMethod::closed_form);
  CHECK(direct.size() == 21 * 7);
  // merge throws if any cell disagrees across methods
  direct.merge(brute);
  direct.merge(closed);
  CHECK(direct.size() == 21 * 7);
  CHECK(direct.lookup(PatternSet::parse("321"), 7) == 132);
  CHECK(direct.lookup(PatternSet::parse("213,321"), 7) == 16);
}
