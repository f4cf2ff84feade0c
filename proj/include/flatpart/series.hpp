#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "json.hpp"

namespace flatpart {

// All series arithmetic is exact; per project policy there is no floating
// point anywhere in this module. Values are arbitrary-precision integers.
using BigInt = mpz_class;

BigInt binomial(long n, long k);  // 0 outside 0 <= k <= n

BigInt catalan(int n);   // C(2n,n)/(n+1), catalan(0) = 1
BigInt motzkin(int n);   // standard three-term convolution, motzkin(0) = 1
BigInt fibonacci(int n);  // fibonacci(1) = fibonacci(2) = 1
/// 1, 1, 2, 4, 8, ... (A011782 read from n = 0): 2^(n-2) for n >= 2.
BigInt powers_of_two_shifted(int n);

/// Integer polynomial in q, coefficients indexed from degree 0 and
/// normalized (no trailing zero coefficients).
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int d) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt eval_at_one() const;

  bool operator==(const QPolynomial&) const = default;

  /// "c0 + c1*q + c2*q^2 + ..." with every coefficient printed.
  std::string str() const;

 private:
  std::vector<BigInt> coeffs_;
};

/// Distribution of the number of runs over the 213-avoiding flattened
/// partitions of [n] (n >= 2), computed by enumeration and checked against
/// the binomial closed form sum_r q^r C(n-1, 2r-2). Throws std::logic_error
/// if the two routes disagree.
QPolynomial runs_distribution(int n);
QPolynomial runs_distribution_closed_form(int n);

/// Distribution of inversions over the 312-avoiding flattened partitions of
/// [n] (n >= 2), checked against (1+q)^(n-2). The class is the lone
/// identity at n = 1 and n = 2, so the distribution starts at n = 2 even
/// though the identity itself makes sense one step earlier.
QPolynomial inv_distribution(int n);
QPolynomial inv_distribution_closed_form(int n);

/// Outcome of one verified identity family.
struct VerifyReport {
  std::string identity;
  int n_lo = 0;
  int n_hi = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
  nlohmann::ordered_json to_json() const;
};

/// Checks, for 3 <= n <= n_max, that the 231-avoiding class satisfies
///   |F(n)| = |F(n-1)| + sum_{k=2}^{n-1} |F(k-1)| * |F(n-k)|
/// with counts taken from the direct generator, and that |F(n)| equals the
/// Motzkin number M(n-1).
VerifyReport verify_motzkin_recurrence(int n_max);

/// Checks every pair class against its recurrence and closed form:
/// Fibonacci for (213,231) and (231,312), +1 steps for (213,312),
/// C(n-1,2)+1 for (213,321), 2^(n-2) for (231,321) and (312,321), and the
/// constant or terminating sequences for the pairs involving 123 or 132.
VerifyReport verify_pair_recurrences(int n_max);

/// Truncated bivariate power series: coeff(n, k) with n the size and k the
/// first-run length.
class BivariateSeries {
 public:
  explicit BivariateSeries(int n_max);

  int truncation_order() const { return n_max_; }
  const BigInt& coeff(int n, int k) const;
  BigInt& at(int n, int k);

 private:
  int n_max_;
  std::vector<std::vector<BigInt>> c_;
};

/// Expands (1 - u - u^2 + u^3 x^2) / ((1 - u x)(1 - u - u^2)) to order
/// n_max in u by the linear coefficient recurrence obtained from
/// multiplying through by the denominator. Coefficients are checked against
/// first_run_length_table for 2 <= n <= min(n_max, 12); a disagreement
/// throws std::logic_error. Note coeff(n, 1) = 0 for every n >= 2: a first
/// run of length 1 cannot carry the maximum and something after it.
BivariateSeries expand_pair_ogf(int n_max);

}  // namespace flatpart
