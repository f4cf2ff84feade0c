#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flatpart/generate.hpp"
#include "flatpart/permutation.hpp"
#include "json.hpp"

namespace flatpart {

// Every map below rejects inputs outside its domain class with
// std::domain_error instead of returning garbage.

/// Run-length-preserving bijection from the 312-avoiding onto the
/// 213-avoiding flattened partitions of [n]. Recursively rewrites the first
/// run 1..k,(k+2)..t as 1..k,(k+2+n-t)..n and recurses on the standardized
/// remainder, shifting it back up by k.
Permutation f_312_to_213(const Permutation& p);

/// Inverse of f_312_to_213. The first-run parameters are recovered from the
/// output shape: with first run 1..k,w..n set t = k + 1 + (n - w + 1) and
/// rebuild the tail as (k+2)..t.
Permutation g_213_to_312(const Permutation& p);

/// Exchanges the values 2 and 3 (n >= 3). An involution on the 312-avoiding
/// flattened partitions pairing the members that start 12 with those that
/// start 13.
Permutation swap23(const Permutation& p);

/// Deletes the leading 1 from a 321-avoiding flattened partition and shifts
/// the rest down, landing in the 321-avoiding permutations of [n-1] (not
/// necessarily flattened).
Permutation h_321(const Permutation& p);

/// Shifts a 321-avoiding permutation up and prepends 1. The result is
/// always flattened: a decrease between later run starts would force a 321
/// occurrence in the input. Violations throw std::logic_error.
Permutation h_inverse_321(const Permutation& s);

/// Sends a Motzkin permutation of length n-1 to a 231-avoiding flattened
/// partition of [n]: shift all values up, reverse, prepend 1.
Permutation alpha_motzkin(const Permutation& s);

/// Stepwise inverse of alpha_motzkin: strip the leading 1, reverse, shift
/// down.
Permutation alpha_inverse(const Permutation& p);

/// Members of the 312-avoiding flattened class fixed by f. Coincides
/// exactly with the (213,312)-avoiding class.
std::vector<Permutation> fixed_points_of_f(int n);

// Exhaustive reference classes used to certify codomains.
std::vector<Permutation> motzkin_permutations(int len, int guard = kMaxBruteN);
std::vector<Permutation> avoiding_permutations(int n, const Pattern& t,
                                               int guard = kMaxBruteN);

/// Extensional witness that a named map is a bijection at one size: the
/// inputs run over the whole domain class once, the recorded outputs cover
/// the codomain class exactly once, and each listed statistic agrees on
/// every pair. Construction performs all three checks.
struct BijectionCertificate {
  std::string name;
  int n = 0;
  std::vector<std::pair<Permutation, Permutation>> pairs;
  std::vector<std::string> preserved;

  nlohmann::ordered_json to_json() const;
};

/// Names: f, g, swap23, h, h-inv, alpha, alpha-inv.
BijectionCertificate certify_bijection(std::string_view name, int n);

}  // namespace flatpart
