#include "flatpart/series.hpp"

#include <stdexcept>

#include "flatpart/generate.hpp"
#include "flatpart/structure.hpp"
#include "flatpart/tables.hpp"

namespace flatpart {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan requires n >= 0");
  BigInt r = binomial(2L * n, n);
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(),
                  static_cast<unsigned long>(n) + 1);
  return r;
}

BigInt motzkin(int n) {
  if (n < 0) throw std::invalid_argument("motzkin requires n >= 0");
  // M(0) = 1, M(m+1) = M(m) + sum_{i=0}^{m-1} M(i) M(m-1-i). This standard
  // convolution is reference knowledge, not derived here; the library
  // cross-validates it against generator counts in its verification suite.
  std::vector<BigInt> m(static_cast<std::size_t>(n) + 1);
  m[0] = 1;
  for (int t = 0; t < n; ++t) {
    BigInt next = m[static_cast<std::size_t>(t)];
    for (int i = 0; i < t; ++i)
      next += m[static_cast<std::size_t>(i)] *
              m[static_cast<std::size_t>(t - 1 - i)];
    m[static_cast<std::size_t>(t) + 1] = next;
  }
  return m[static_cast<std::size_t>(n)];
}

BigInt fibonacci(int n) {
  if (n < 1) throw std::invalid_argument("fibonacci requires n >= 1");
  BigInt a = 1, b = 1;  // F(1), F(2)
  for (int i = 3; i <= n; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return n == 1 ? a : b;
}

BigInt powers_of_two_shifted(int n) {
  if (n < 0) throw std::invalid_argument("requires n >= 0");
  if (n <= 1) return BigInt(1);
  BigInt r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(),
               static_cast<unsigned long>(n) - 2);
  return r;
}

QPolynomial::QPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coeff(int d) const {
  if (d < 0 || d > degree()) return BigInt(0);
  return coeffs_[static_cast<std::size_t>(d)];
}

BigInt QPolynomial::eval_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

std::string QPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (d) out += " + ";
    out += coeffs_[d].get_str();
    if (d == 1) out += "*q";
    if (d > 1) out += "*q^" + std::to_string(d);
  }
  return out;
}

QPolynomial runs_distribution_closed_form(int n) {
  if (n < 2) throw std::invalid_argument("defined for n >= 2");
  std::vector<BigInt> c(1, BigInt(0));
  for (int r = 1; 2 * r - 2 <= n - 1; ++r) {
    c.resize(static_cast<std::size_t>(r) + 1);
    c[static_cast<std::size_t>(r)] = binomial(n - 1, 2 * r - 2);
  }
  return QPolynomial(std::move(c));
}

QPolynomial runs_distribution(int n) {
  if (n < 2) throw std::invalid_argument("defined for n >= 2");
  std::vector<BigInt> tally;
  for_each_flattened(n, PatternSet::parse("213"), [&](const Permutation& p) {
    const auto& w = p.word();
    int r = 1;
    for (std::size_t i = 1; i < w.size(); ++i)
      if (w[i] < w[i - 1]) ++r;
    if (static_cast<int>(tally.size()) <= r)
      tally.resize(static_cast<std::size_t>(r) + 1);
    tally[static_cast<std::size_t>(r)] += 1;
  });
  QPolynomial dist{std::move(tally)};
  if (dist != runs_distribution_closed_form(n))
    throw std::logic_error("runs distribution disagrees with its closed form");
  if (dist.eval_at_one() != powers_of_two_shifted(n))
    throw std::logic_error("runs distribution total is not 2^(n-2)");
  return dist;
}

QPolynomial inv_distribution_closed_form(int n) {
  if (n < 2) throw std::invalid_argument("defined for n >= 2");
  std::vector<BigInt> c(static_cast<std::size_t>(n) - 1);
  for (int d = 0; d <= n - 2; ++d)
    c[static_cast<std::size_t>(d)] = binomial(n - 2, d);
  return QPolynomial(std::move(c));
}

QPolynomial inv_distribution(int n) {
  if (n < 2) throw std::invalid_argument("defined for n >= 2");
  std::vector<BigInt> tally;
  for_each_flattened(n, PatternSet::parse("312"), [&](const Permutation& p) {
    auto d = static_cast<std::size_t>(inversions(p));
    if (tally.size() <= d) tally.resize(d + 1);
    tally[d] += 1;
  });
  QPolynomial dist{std::move(tally)};
  if (dist != inv_distribution_closed_form(n))
    throw std::logic_error("inversion distribution is not (1+q)^(n-2)");
  return dist;
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["identity"] = identity;
  j["n_range"] = {n_lo, n_hi};
  j["status"] = ok() ? "ok" : "fail";
  j["failures"] = failures;
  j["notes"] = notes;
  return j;
}

VerifyReport verify_motzkin_recurrence(int n_max) {
  if (n_max < 3) throw std::invalid_argument("requires n_max >= 3");
  detail::check_guard(n_max, kMaxDirectN, "verify_motzkin_recurrence");
  VerifyReport rep{"motzkin-recurrence", 3, n_max, {}, {}};
  const PatternSet ps = PatternSet::parse("231");
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n_max) + 1, 0);
  for (int k = 1; k <= n_max; ++k)
    c[static_cast<std::size_t>(k)] = count_avoiding(k, ps);
  for (int n = 3; n <= n_max; ++n) {
    std::uint64_t rhs = c[static_cast<std::size_t>(n) - 1];
    for (int k = 2; k <= n - 1; ++k)
      rhs += c[static_cast<std::size_t>(k - 1)] *
             c[static_cast<std::size_t>(n - k)];
    if (c[static_cast<std::size_t>(n)] != rhs)
      rep.failures.push_back("recurrence fails at n=" + std::to_string(n));
    if (BigInt(c[static_cast<std::size_t>(n)]) != motzkin(n - 1))
      rep.failures.push_back("count at n=" + std::to_string(n) +
                             " is not the Motzkin number");
  }
  return rep;
}

VerifyReport verify_pair_recurrences(int n_max) {
  if (n_max < 3) throw std::invalid_argument("requires n_max >= 3");
  detail::check_guard(n_max, kMaxDirectN, "verify_pair_recurrences");
  VerifyReport rep{"pair-recurrences", 1, n_max, {}, {}};

  auto counts_for = [&](const char* key) {
    const PatternSet ps = PatternSet::parse(key);
    std::vector<std::uint64_t> c(static_cast<std::size_t>(n_max) + 1, 0);
    for (int n = 1; n <= n_max; ++n)
      c[static_cast<std::size_t>(n)] = count_avoiding(n, ps);
    return c;
  };
  auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };

  // Closed forms for every pair class.
  for (const PatternSet& ps : standard_pattern_sets()) {
    if (ps.patterns().size() != 2) continue;
    for (int n = 1; n <= n_max; ++n) {
      auto expect = closed_form_count(n, ps);
      if (expect && count_avoiding(n, ps) != *expect)
        fail(ps.key() + " closed form fails at n=" + std::to_string(n));
    }
  }

  // Recurrences.
  for (const char* key : {"213,231", "231,312"}) {
    auto c = counts_for(key);
    for (int n = 3; n <= n_max; ++n) {
      if (c[static_cast<std::size_t>(n)] !=
          c[static_cast<std::size_t>(n) - 1] + c[static_cast<std::size_t>(n) - 2])
        fail(std::string(key) + ": Fibonacci step fails at n=" +
             std::to_string(n));
      if (BigInt(c[static_cast<std::size_t>(n)]) != fibonacci(n))
        fail(std::string(key) + ": not the Fibonacci number at n=" +
             std::to_string(n));
    }
  }
  {
    auto c = counts_for("213,312");
    for (int n = 3; n <= n_max; ++n)
      if (c[static_cast<std::size_t>(n)] != c[static_cast<std::size_t>(n) - 1] + 1)
        fail("213+312: unit step fails at n=" + std::to_string(n));
  }
  {
    auto c = counts_for("213,321");
    for (int n = 2; n <= n_max; ++n) {
      if (BigInt(c[static_cast<std::size_t>(n)]) !=
          BigInt(c[static_cast<std::size_t>(n) - 1]) + (n - 2))
        fail("213+321: n-2 step fails at n=" + std::to_string(n));
      if (BigInt(c[static_cast<std::size_t>(n)]) != binomial(n - 1, 2) + 1)
        fail("213+321: C(n-1,2)+1 fails at n=" + std::to_string(n));
    }
  }
  for (const char* key : {"231,321", "312,321"}) {
    auto c = counts_for(key);
    for (int n = 3; n <= n_max; ++n)
      if (c[static_cast<std::size_t>(n)] !=
          2 * c[static_cast<std::size_t>(n) - 1])
        fail(std::string(key) + ": doubling fails at n=" + std::to_string(n));
  }
  return rep;
}

BivariateSeries::BivariateSeries(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("negative truncation order");
  c_.assign(static_cast<std::size_t>(n_max) + 1,
            std::vector<BigInt>(static_cast<std::size_t>(n_max) + 1));
}

const BigInt& BivariateSeries::coeff(int n, int k) const {
  static const BigInt zero(0);
  if (n < 0 || n > n_max_) throw std::out_of_range("n beyond truncation");
  if (k < 0 || k > n_max_) return zero;
  return c_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt& BivariateSeries::at(int n, int k) {
  return c_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BivariateSeries expand_pair_ogf(int n_max) {
  if (n_max < 2)
    throw std::invalid_argument("truncation order must be at least 2");
  if (n_max > 30)
    throw GuardError("expand_pair_ogf: truncation order capped at 30");

  BivariateSeries s(n_max);
  // Multiplying through by (1 - ux)(1 - u - u^2) = 1 - u - ux - u^2 + u^2 x
  // + u^3 x turns the rational function into the linear recurrence
  //   F(n,k) = N(n,k) + F(n-1,k) + F(n-1,k-1) + F(n-2,k) - F(n-2,k-1)
  //            - F(n-3,k-1)
  // with numerator support N = {(0,0): 1, (1,0): -1, (2,0): -1, (3,2): 1}.
  auto numer = [](int n, int k) -> int {
    if (n == 0 && k == 0) return 1;
    if (n == 1 && k == 0) return -1;
    if (n == 2 && k == 0) return -1;
    if (n == 3 && k == 2) return 1;
    return 0;
  };
  auto get = [&](int n, int k) -> BigInt {
    if (n < 0 || k < 0) return BigInt(0);
    return s.coeff(n, k);
  };
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n_max; ++k)
      s.at(n, k) = BigInt(numer(n, k)) + get(n - 1, k) + get(n - 1, k - 1) +
                   get(n - 2, k) - get(n - 2, k - 1) - get(n - 3, k - 1);

  for (int n = 2; n <= std::min(n_max, 12); ++n) {
    auto table = first_run_length_table(n);
    for (int k = 0; k <= n_max; ++k) {
      BigInt expected =
          k <= n ? BigInt(table[static_cast<std::size_t>(k)]) : BigInt(0);
      if (s.coeff(n, k) != expected)
        throw std::logic_error(
            "series coefficient disagrees with the first-run table at n=" +
            std::to_string(n) + ", k=" + std::to_string(k));
    }
  }
  return s;
}

}  // namespace flatpart
