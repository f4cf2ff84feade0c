#include "flatpart/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "flatpart/bijections.hpp"
#include "flatpart/generate.hpp"
#include "flatpart/set_partition.hpp"
#include "flatpart/structure.hpp"
#include "flatpart/tables.hpp"

namespace flatpart {

std::optional<VerifyScope> parse_scope(std::string_view s) {
  if (s == "all") return VerifyScope::all;
  if (s == "core") return VerifyScope::core;
  if (s == "bijections") return VerifyScope::bijections;
  if (s == "series") return VerifyScope::series;
  return std::nullopt;
}

bool all_ok(const std::vector<VerifyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerifyReport& r) { return r.ok(); });
}

nlohmann::ordered_json reports_to_json(const std::vector<VerifyReport>& r) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& rep : r) arr.push_back(rep.to_json());
  return arr;
}

const std::vector<ReferenceRow>& reference_single_rows() {
  static const std::vector<ReferenceRow> rows = {
      {"123", {1, 1, 1, 0, 0, 0, 0}},
      {"132", {1, 1, 1, 1, 1, 1, 1}},          // A000012
      {"213", {1, 1, 2, 4, 8, 16, 32}},        // A011782
      {"231", {1, 1, 2, 4, 9, 21, 51}},        // A001006
      {"312", {1, 1, 2, 4, 8, 16, 32}},        // A011782
      {"321", {1, 1, 2, 5, 14, 42, 132}},      // A000108
  };
  return rows;
}

const std::vector<ReferenceRow>& reference_pair_rows() {
  static const std::vector<ReferenceRow> rows = {
      {"123+132", {1, 1, 0, 0, 0, 0, 0}},
      {"123+213", {1, 1, 1, 0, 0, 0, 0}},
      {"123+231", {1, 1, 1, 0, 0, 0, 0}},
      {"123+312", {1, 1, 1, 0, 0, 0, 0}},
      {"123+321", {1, 1, 1, 0, 0, 0, 0}},
      {"132+213", {1, 1, 1, 1, 1, 1, 1}},
      {"132+231", {1, 1, 1, 1, 1, 1, 1}},
      {"132+312", {1, 1, 1, 1, 1, 1, 1}},
      {"132+321", {1, 1, 1, 1, 1, 1, 1}},
      {"213+231", {1, 1, 2, 3, 5, 8, 13}},     // A000045
      {"213+312", {1, 1, 2, 3, 4, 5, 6}},      // A028310
      {"213+321", {1, 1, 2, 4, 7, 11, 16}},    // C(n-1,2) + 1
      {"231+312", {1, 1, 2, 3, 5, 8, 13}},     // A000045
      {"231+321", {1, 1, 2, 4, 8, 16, 32}},    // A011782
      {"312+321", {1, 1, 2, 4, 8, 16, 32}},    // A011782
  };
  return rows;
}

namespace {

template <class Body>
VerifyReport family(std::string name, int lo, int hi, Body&& body) {
  VerifyReport rep{std::move(name), lo, hi, {}, {}};
  try {
    body(rep);
  } catch (const std::exception& e) {
    rep.failures.push_back(std::string("unexpected error: ") + e.what());
  }
  return rep;
}

std::vector<Permutation> cls(int n, const char* key) {
  return enumerate_avoiding(n, PatternSet::parse(key));
}

// ---- core families ----

VerifyReport check_run_concatenation(int cap) {
  return family("run-concatenation", 1, cap, [&](VerifyReport& rep) {
    for (int n = 1; n <= cap; ++n)
      for_each_permutation(n, [&](const Permutation& p) {
        auto rd = run_decompose(p);
        std::vector<int> cat;
        int total = 0;
        for (std::size_t r = 0; r < rd.runs.size(); ++r) {
          const auto& run = rd.runs[r];
          for (std::size_t i = 1; i < run.size(); ++i)
            if (run[i] <= run[i - 1])
              rep.failures.push_back("non-ascending run in " + to_display(p));
          if (run.front() != rd.starts[r] ||
              static_cast<int>(run.size()) != rd.lengths[r])
            rep.failures.push_back("inconsistent metadata for " +
                                   to_display(p));
          if (r + 1 < rd.runs.size() &&
              run.back() < rd.runs[r + 1].front())
            rep.failures.push_back("non-maximal run split in " +
                                   to_display(p));
          cat.insert(cat.end(), run.begin(), run.end());
          total += rd.lengths[r];
        }
        if (cat != p.word() || total != n)
          rep.failures.push_back("concatenation mismatch for " +
                                 to_display(p));
      });
  });
}

VerifyReport check_flattened_first_element(int cap) {
  return family("flattened-first-element", 1, cap, [&](VerifyReport& rep) {
    for (int n = 1; n <= cap; ++n)
      for_each_permutation(n, [&](const Permutation& p) {
        auto rd = run_decompose(p);
        bool increasing = true;
        for (std::size_t r = 1; r < rd.starts.size(); ++r)
          if (rd.starts[r] <= rd.starts[r - 1]) increasing = false;
        if (is_flattened(p) != increasing)
          rep.failures.push_back("flattened test disagrees with run starts: " +
                                 to_display(p));
        if (is_flattened(p) && p[0] != 1)
          rep.failures.push_back("flattened but not starting at 1: " +
                                 to_display(p));
      });
  });
}

VerifyReport check_flatten_image(int cap) {
  return family("flatten-image-flattened", 1, cap, [&](VerifyReport& rep) {
    for (int n = 1; n <= cap; ++n)
      for (const SetPartition& sp : all_set_partitions(n))
        if (!is_flattened(flatten_set_partition(sp)))
          rep.failures.push_back("non-flattened image at n=" +
                                 std::to_string(n));
  });
}

VerifyReport check_oracle_equivalence(int cap) {
  return family("generator-oracle-equivalence", 1, cap,
                [&](VerifyReport& rep) {
    std::vector<PatternSet> sets = standard_pattern_sets();
    sets.push_back(PatternSet{});  // unconstrained
    for (int n = 1; n <= cap; ++n)
      for (const PatternSet& ps : sets)
        if (enumerate_avoiding(n, ps) != brute_force_avoiding(n, ps))
          rep.failures.push_back("direct generator differs from filter for " +
                                 (ps.unconstrained() ? std::string("(none)")
                                                     : ps.key()) +
                                 " at n=" + std::to_string(n));
  });
}

VerifyReport check_max_ends_first_run(int cap) {
  return family("max-ends-first-run", 1, cap, [&](VerifyReport& rep) {
    for (int n = 1; n <= cap; ++n)
      for (const Permutation& p : cls(n, "213"))
        if (run_decompose(p).runs.front().back() != n)
          rep.failures.push_back("first run of " + to_display(p) +
                                 " does not end with the maximum");
  });
}

VerifyReport check_start_structure_312(int cap) {
  return family("start-structure-312", 3, cap, [&](VerifyReport& rep) {
    for (int n = 3; n <= cap; ++n)
      for (const Permutation& p : cls(n, "312"))
        if (p[0] != 1 || (p[1] != 2 && p[1] != 3))
          rep.failures.push_back(to_display(p) + " starts neither 12 nor 13");
  });
}

VerifyReport check_start_structure_pair(int cap) {
  return family("start-structure-213-231", 2, cap, [&](VerifyReport& rep) {
    for (int n = 2; n <= cap; ++n)
      for (const Permutation& p : cls(n, "213,231"))
        if (p[0] != 1 || (p[1] != 2 && p[1] != n))
          rep.failures.push_back(to_display(p) + " starts neither 12 nor 1n");
  });
}

VerifyReport check_prefix_identity_pair(int cap) {
  return family("prefix-identity-213-231", 2, cap, [&](VerifyReport& rep) {
    for (int n = 2; n <= cap; ++n)
      for (const Permutation& p : cls(n, "213,231")) {
        int k = 0;
        for (int i = 0; i < n; ++i)
          if (p[i] == n) k = i + 1;
        bool ok = k >= 2;
        for (int i = 1; i < k && ok; ++i) ok = p[i - 1] == i;
        for (int i = k + 1; i <= n && ok; ++i) ok = p[i - 1] >= k;
        if (!ok)
          rep.failures.push_back(to_display(p) +
                                 " violates the forced prefix shape");
      }
  });
}

VerifyReport check_unique_13_start(int cap) {
  return family("unique-13-start-213-312", 3, cap, [&](VerifyReport& rep) {
    for (int n = 3; n <= cap; ++n) {
      int found = 0;
      for (const Permutation& p : cls(n, "213,312")) {
        if (p[1] != 3) continue;
        ++found;
        auto rd = run_decompose(p);
        if (rd.count() < 2 || rd.runs[1] != std::vector<int>{2})
          rep.failures.push_back(to_display(p) +
                                 " lacks the singleton second run 2");
      }
      if (found != 1)
        rep.failures.push_back("n=" + std::to_string(n) + ": " +
                               std::to_string(found) +
                               " members start with 13, expected 1");
    }
  });
}

VerifyReport check_split_at_max(int cap) {
  return family("split-at-max-structure", 2, cap, [&](VerifyReport& rep) {
    const PatternSet ps231 = PatternSet::parse("231");
    for (int n = 2; n <= cap; ++n)
      for (const Permutation& p : cls(n, "231")) {
        SplitAtMax s = split_at_max(p);
        bool ok = s.k >= 2 && s.k <= n;
        ok = ok && is_flattened(s.left) && avoids(s.left, ps231);
        ok = ok && (s.right.empty() ||
                    (is_flattened(s.right) && avoids(s.right, ps231)));
        std::vector<int> rebuilt = s.left.word();
        rebuilt.push_back(n);
        for (int v : s.right.word()) rebuilt.push_back(v + (s.k - 1));
        ok = ok && rebuilt == p.word();
        if (!ok)
          rep.failures.push_back("split structure fails for " + to_display(p));
      }
  });
}

// ---- bijection families ----

VerifyReport check_pq_demarcations(int cap) {
  return family("pq-demarcation-bijection", 1, cap, [&](VerifyReport& rep) {
    for (int n = 1; n <= cap; ++n) {
      std::vector<Permutation> image;
      for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        std::vector<int> cuts;
        for (int c = 1; c <= n - 1; ++c)
          if (mask & (1u << (c - 1))) cuts.push_back(c);
        Permutation p = compose_213(n, cuts);
        image.push_back(p);
        if (decompose_213(p).demarcations() != cuts)
          rep.failures.push_back("cut set not recovered at n=" +
                                 std::to_string(n));
      }
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end())
        rep.failures.push_back("distinct cut sets collide at n=" +
                               std::to_string(n));
      if (image != cls(n, "213"))
        rep.failures.push_back("image differs from the class at n=" +
                               std::to_string(n));
      for (const Permutation& p : cls(n, "213"))
        if (compose_213(n, decompose_213(p).demarcations()) != p)
          rep.failures.push_back("recomposition differs for " + to_display(p));
    }
  });
}

VerifyReport check_run_preserving_bijection(int cap) {
  return family("run-preserving-bijection", 3, cap, [&](VerifyReport& rep) {
    const PatternSet ps213 = PatternSet::parse("213");
    for (int n = 3; n <= cap; ++n) {
      auto dom = cls(n, "312");
      auto cod = cls(n, "213");
      std::vector<Permutation> image;
      std::vector<Permutation> fixed;
      for (const Permutation& p : dom) {
        Permutation q = f_312_to_213(p);
        image.push_back(q);
        if (!is_flattened(q) || !avoids(q, ps213))
          rep.failures.push_back("f leaves the codomain class at " +
                                 to_display(p));
        if (run_decompose(p).lengths != run_decompose(q).lengths)
          rep.failures.push_back("f changes run lengths at " + to_display(p));
        if (g_213_to_312(q) != p)
          rep.failures.push_back("g(f(p)) != p at " + to_display(p));
        if (q == p) fixed.push_back(p);
      }
      std::sort(image.begin(), image.end());
      if (image != cod)
        rep.failures.push_back("f image differs from the class at n=" +
                               std::to_string(n));
      for (const Permutation& q : cod)
        if (f_312_to_213(g_213_to_312(q)) != q)
          rep.failures.push_back("f(g(q)) != q at " + to_display(q));
      auto pair_class = cls(n, "213,312");
      if (fixed != pair_class)
        rep.failures.push_back("fixed points differ from the pair class at n=" +
                               std::to_string(n));
      if (fixed != fixed_points_of_f(n))
        rep.failures.push_back("fixed point helper disagrees at n=" +
                               std::to_string(n));
      // Members containing the other pattern are equinumerous on both sides.
      if (dom.size() - pair_class.size() != cod.size() - pair_class.size())
        rep.failures.push_back("strict-member counts differ at n=" +
                               std::to_string(n));
    }
  });
}

VerifyReport check_swap23(int cap) {
  return family("swap23-involution", 3, cap, [&](VerifyReport& rep) {
    const PatternSet ps312 = PatternSet::parse("312");
    for (int n = 3; n <= cap; ++n) {
      std::vector<Permutation> starts12, starts13, mapped12;
      for (const Permutation& p : cls(n, "312")) {
        Permutation q = swap23(p);
        if (!is_flattened(q) || !avoids(q, ps312))
          rep.failures.push_back("swap23 leaves the class at " +
                                 to_display(p));
        if (swap23(q) != p)
          rep.failures.push_back("swap23 is not an involution at " +
                                 to_display(p));
        if (p[1] == 2) {
          starts12.push_back(p);
          mapped12.push_back(q);
        } else {
          starts13.push_back(p);
        }
      }
      std::sort(mapped12.begin(), mapped12.end());
      if (mapped12 != starts13)
        rep.failures.push_back(
            "swap23 does not exchange the 12- and 13-start subclasses at n=" +
            std::to_string(n));
      if (starts12.size() != starts13.size())
        rep.failures.push_back("subclass sizes differ at n=" +
                               std::to_string(n));
    }
  });
}

VerifyReport check_leading_one_bijection(int cap) {
  return family("leading-one-bijection", 1, cap, [&](VerifyReport& rep) {
    const Pattern p321 = Pattern::parse("321");
    for (int n = 1; n <= cap; ++n) {
      auto dom = cls(n, "321");
      auto cod = avoiding_permutations(n - 1, p321);
      std::vector<Permutation> image;
      for (const Permutation& p : dom) {
        Permutation s = h_321(p);
        image.push_back(s);
        if (h_inverse_321(s) != p)
          rep.failures.push_back("h-inv(h(p)) != p at " + to_display(p));
      }
      std::sort(image.begin(), image.end());
      std::sort(cod.begin(), cod.end());
      if (image != cod)
        rep.failures.push_back("h image differs from the codomain at n=" +
                               std::to_string(n));
      if (BigInt(static_cast<unsigned long>(dom.size())) != catalan(n - 1))
        rep.failures.push_back("class size is not Catalan at n=" +
                               std::to_string(n));
      // h-inv is total on 321-avoiding permutations, flattened or not; the
      // constructor itself throws if an image ever leaves the class.
      for (const Permutation& s : cod)
        if (h_321(h_inverse_321(s)) != s)
          rep.failures.push_back("h(h-inv(s)) != s at " + to_display(s));
    }
  });
}

VerifyReport check_motzkin_bijection(int cap) {
  return family("motzkin-permutation-bijection", 1, cap,
                [&](VerifyReport& rep) {
    for (int n = 1; n <= cap; ++n) {
      auto dom = motzkin_permutations(n - 1);
      auto cod = cls(n, "231");
      std::vector<Permutation> image;
      for (const Permutation& s : dom) {
        Permutation p = alpha_motzkin(s);
        image.push_back(p);
        if (alpha_inverse(p) != s)
          rep.failures.push_back("alpha-inv(alpha(s)) != s at " +
                                 to_display(s));
      }
      std::sort(image.begin(), image.end());
      if (image != cod)
        rep.failures.push_back("alpha image differs from the class at n=" +
                               std::to_string(n));
      for (const Permutation& p : cod)
        if (alpha_motzkin(alpha_inverse(p)) != p)
          rep.failures.push_back("alpha(alpha-inv(p)) != p at " +
                                 to_display(p));
    }
  });
}

// ---- series families ----

VerifyReport check_runs_distribution(int cap) {
  return family("runs-distribution", 2, cap, [&](VerifyReport& rep) {
    for (int n = 2; n <= cap; ++n) {
      QPolynomial d = runs_distribution(n);  // throws on any disagreement
      if (d.eval_at_one() != powers_of_two_shifted(n))
        rep.failures.push_back("total differs from 2^(n-2) at n=" +
                               std::to_string(n));
    }
  });
}

VerifyReport check_inv_distribution(int cap) {
  return family("inversion-distribution", 2, cap, [&](VerifyReport& rep) {
    for (int n = 2; n <= cap; ++n) {
      QPolynomial d = inv_distribution(n);  // throws on any disagreement
      if (d.eval_at_one() != powers_of_two_shifted(n))
        rep.failures.push_back("total differs from 2^(n-2) at n=" +
                               std::to_string(n));
    }
  });
}

VerifyReport check_first_run_ogf(int cap) {
  return family("first-run-ogf", 2, cap, [&](VerifyReport& rep) {
    BivariateSeries s = expand_pair_ogf(cap);  // checks rows against the table
    for (int n = 2; n <= cap; ++n) {
      BigInt row_sum = 0;
      for (int k = 0; k <= cap; ++k) row_sum += s.coeff(n, k);
      if (row_sum != fibonacci(n))
        rep.failures.push_back("row sum differs from Fibonacci at n=" +
                               std::to_string(n));
    }
    rep.notes.push_back(
        "first-run length 1 carries coefficient 0 for every n >= 2; a "
        "one-element first run cannot end with the maximum when anything "
        "follows it");
  });
}

VerifyReport check_reference_rows(const char* name,
                                  const std::vector<ReferenceRow>& rows,
                                  int cap) {
  return family(name, 1, cap, [&](VerifyReport& rep) {
    for (const ReferenceRow& row : rows) {
      std::string csv(row.key);
      std::replace(csv.begin(), csv.end(), '+', ',');
      const PatternSet ps = PatternSet::parse(csv);
      for (int n = 1; n <= cap; ++n)
        if (count_avoiding(n, ps) != row.values[static_cast<std::size_t>(n) - 1])
          rep.failures.push_back(std::string(row.key) +
                                 " differs from the reference at n=" +
                                 std::to_string(n));
    }
  });
}

}  // namespace

std::vector<VerifyReport> run_verification(VerifyScope scope, int n_max) {
  if (n_max < 3)
    throw std::invalid_argument("verification requires n_max >= 3");
  if (n_max > kMaxDirectN)
    throw GuardError("verification capped at n_max = 16");

  auto cap = [&](int limit) { return std::min(n_max, limit); };
  std::vector<VerifyReport> out;
  const bool core =
      scope == VerifyScope::all || scope == VerifyScope::core;
  const bool bij =
      scope == VerifyScope::all || scope == VerifyScope::bijections;
  const bool ser =
      scope == VerifyScope::all || scope == VerifyScope::series;

  if (core) {
    out.push_back(check_run_concatenation(cap(9)));
    out.push_back(check_flattened_first_element(cap(9)));
    out.push_back(check_flatten_image(cap(7)));
    out.push_back(check_oracle_equivalence(cap(9)));
    out.push_back(check_max_ends_first_run(cap(12)));
    out.push_back(check_start_structure_312(cap(12)));
    out.push_back(check_start_structure_pair(cap(12)));
    out.push_back(check_prefix_identity_pair(cap(12)));
    out.push_back(check_unique_13_start(cap(12)));
    out.push_back(check_split_at_max(cap(12)));
  }
  if (bij) {
    out.push_back(check_pq_demarcations(cap(10)));
    out.push_back(check_run_preserving_bijection(cap(10)));
    out.push_back(check_swap23(cap(10)));
    out.push_back(check_leading_one_bijection(cap(10)));
    out.push_back(check_motzkin_bijection(cap(10)));
  }
  if (ser) {
    out.push_back(check_runs_distribution(cap(12)));
    out.push_back(check_inv_distribution(cap(12)));
    out.push_back(verify_motzkin_recurrence(cap(14)));
    out.push_back(verify_pair_recurrences(cap(12)));
    out.push_back(check_first_run_ogf(cap(12)));
    out.push_back(
        check_reference_rows("single-pattern-table", reference_single_rows(),
                             cap(7)));
    out.push_back(
        check_reference_rows("pair-pattern-table", reference_pair_rows(),
                             cap(7)));
  }
  return out;
}

}  // namespace flatpart
