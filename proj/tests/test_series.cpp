#include <vector>

#include "doctest.h"
#include "flatpart/generate.hpp"
#include "flatpart/series.hpp"
#include "flatpart/structure.hpp"

using namespace flatpart;

TEST_CASE("reference sequences") {
  const std::vector<long> cat = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (int n = 0; n < 10; ++n)
    CHECK(catalan(n) == cat[static_cast<std::size_t>(n)]);
  CHECK(catalan(19) == BigInt("1767263190"));

  const std::vector<long> motz = {1,    1,    2,    4,     9,     21,   51,
                                  127,  323,  835,  2188,  5798,  15511,
                                  41835};
  for (int n = 0; n < 14; ++n)
    CHECK(motzkin(n) == motz[static_cast<std::size_t>(n)]);

  const std::vector<long> fib = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
  for (int n = 1; n <= 12; ++n)
    CHECK(fibonacci(n) == fib[static_cast<std::size_t>(n) - 1]);

  CHECK(powers_of_two_shifted(1) == 1);
  CHECK(powers_of_two_shifted(2) == 1);
  CHECK(powers_of_two_shifted(7) == 32);
  CHECK(powers_of_two_shifted(20) == 262144);

  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 0) == 0);

  CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
  CHECK_THROWS_AS(motzkin(-2), std::invalid_argument);
  CHECK_THROWS_AS(fibonacci(0), std::invalid_argument);
}

TEST_CASE("q-polynomial basics") {
  QPolynomial zero;
  CHECK(zero.str() == "0");
  CHECK(zero.degree() == -1);
  CHECK(zero.eval_at_one() == 0);

  QPolynomial p({BigInt(0), BigInt(1), BigInt(3)});
  CHECK(p.str() == "0 + 1*q + 3*q^2");
  CHECK(p.degree() == 2);
  CHECK(p.coeff(1) == 1);
  CHECK(p.coeff(5) == 0);
  CHECK(p.eval_at_one() == 4);

  // Trailing zeros normalize away.
  CHECK(QPolynomial({BigInt(1), BigInt(0)}) == QPolynomial({BigInt(1)}));
  CHECK(QPolynomial({BigInt(1), BigInt(2), BigInt(1)}).str() ==
        "1 + 2*q + 1*q^2");
}

TEST_CASE("runs distribution") {
  CHECK(runs_distribution(2).str() == "0 + 1*q");
  CHECK(runs_distribution(4).str() == "0 + 1*q + 3*q^2");
  CHECK(runs_distribution(7).eval_at_one() == 32);
  for (int n = 2; n <= 12; ++n) {
    QPolynomial d = runs_distribution(n);
    CHECK(d == runs_distribution_closed_form(n));
    CHECK(d.eval_at_one() == powers_of_two_shifted(n));
    CHECK(d.coeff(0) == 0);
  }
  CHECK_THROWS_AS(runs_distribution(1), std::invalid_argument);
}

TEST_CASE("inversion distribution") {
  CHECK(inv_distribution(2).str() == "1");
  CHECK(inv_distribution(4).str() == "1 + 2*q + 1*q^2");
  CHECK(inv_distribution(7).eval_at_one() == 32);
  for (int n = 2; n <= 12; ++n) {
    QPolynomial d = inv_distribution(n);
    CHECK(d.degree() == n - 2);
    for (int k = 0; k <= n - 2; ++k) CHECK(d.coeff(k) == binomial(n - 2, k));
  }
  CHECK_THROWS_AS(inv_distribution(0), std::invalid_argument);
}

TEST_CASE("motzkin recurrence verification") {
  VerifyReport rep = verify_motzkin_recurrence(12);
  CHECK(rep.ok());
  CHECK(rep.identity == "motzkin-recurrence");
  CHECK(rep.n_lo == 3);
  CHECK(rep.n_hi == 12);

  // Spot decomposition at n = 5: 9 = 4 + (1*2 + 1*1 + 2*1).
  const PatternSet ps = PatternSet::parse("231");
  CHECK(count_avoiding(5, ps) == 9);
  CHECK(count_avoiding(4, ps) + count_avoiding(1, ps) * count_avoiding(3, ps) +
            count_avoiding(2, ps) * count_avoiding(2, ps) +
            count_avoiding(3, ps) * count_avoiding(1, ps) ==
        9);

  CHECK_THROWS_AS(verify_motzkin_recurrence(2), std::invalid_argument);
  CHECK_THROWS_AS(verify_motzkin_recurrence(17), GuardError);
}

TEST_CASE("pair recurrence verification") {
  VerifyReport rep = verify_pair_recurrences(10);
  CHECK(rep.ok());
  CHECK(count_avoiding(5, PatternSet::parse("213,321")) == 7);   // C(4,2)+1
  CHECK(count_avoiding(6, PatternSet::parse("231,321")) == 16);  // 2^4
  CHECK(count_avoiding(7, PatternSet::parse("213,312")) == 6);

  auto j = rep.to_json();
  CHECK(j["identity"] == "pair-recurrences");
  CHECK(j["status"] == "ok");
  CHECK(j["failures"].empty());
  CHECK(j["n_range"][1] == 10);
}

TEST_CASE("pair generating function expansion") {
  BivariateSeries s = expand_pair_ogf(20);
  CHECK(s.coeff(0, 0) == 1);
  CHECK(s.coeff(1, 1) == 1);
  CHECK(s.coeff(5, 3) == 1);
  CHECK(s.coeff(5, 2) == 2);
  for (int n = 2; n <= 20; ++n) {
    CHECK(s.coeff(n, 0) == 0);
    CHECK(s.coeff(n, 1) == 0);
    CHECK(s.coeff(n, n) == 1);
    BigInt row = 0;
    for (int k = 0; k <= 20; ++k) row += s.coeff(n, k);
    CHECK(row == fibonacci(n));
    for (int k = n + 1; k <= 20; ++k) CHECK(s.coeff(n, k) == 0);
  }
  // Column values match the first-run table by construction; check one row
  // here explicitly against the direct enumeration.
  auto t8 = first_run_length_table(8);
  for (int k = 0; k <= 8; ++k)
    CHECK(s.coeff(8, k) == BigInt(t8[static_cast<std::size_t>(k)]));

  CHECK_THROWS_AS(expand_pair_ogf(1), std::invalid_argument);
  CHECK_THROWS_AS(expand_pair_ogf(31), GuardError);
  CHECK_THROWS_AS(s.coeff(21, 0), std::out_of_range);
}

TEST_CASE("verification report serialization") {
  VerifyReport rep{"demo", 2, 9, {"broken at n=4"}, {"one note"}};
  auto j = rep.to_json();
  CHECK(j["identity"] == "demo");
  CHECK(j["n_range"] == nlohmann::ordered_json({2, 9}));
  CHECK(j["status"] == "fail");
  CHECK(j["failures"][0] == "broken at n=4");
  CHECK(j["notes"][0] == "one note");
}
