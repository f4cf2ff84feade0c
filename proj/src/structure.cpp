#include "flatpart/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace flatpart {

namespace {

const PatternSet& set213() {
  static const PatternSet ps = PatternSet::parse("213");
  return ps;
}

const PatternSet& set231() {
  static const PatternSet ps = PatternSet::parse("231");
  return ps;
}

const PatternSet& set213_231() {
  static const PatternSet ps = PatternSet::parse("213,231");
  return ps;
}

}  // namespace

std::vector<int> PQDecomposition::demarcations() const {
  std::vector<int> lens;
  for (const auto& w : p_words) lens.push_back(static_cast<int>(w.size()));
  for (auto it = q_words.rbegin(); it != q_words.rend(); ++it)
    lens.push_back(static_cast<int>(it->size()));
  std::vector<int> cuts;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < lens.size(); ++i) {
    acc += lens[i];
    cuts.push_back(acc);
  }
  return cuts;
}

Permutation PQDecomposition::recompose() const {
  std::vector<int> w;
  for (std::size_t i = 0; i < p_words.size(); ++i) {
    w.insert(w.end(), p_words[i].begin(), p_words[i].end());
    if (i < q_words.size())
      w.insert(w.end(), q_words[i].begin(), q_words[i].end());
  }
  return Permutation(std::move(w));
}

PQDecomposition decompose_213(const Permutation& p) {
  if (p.empty())
    throw std::domain_error("decompose_213 expects a non-empty permutation");
  if (!is_flattened(p) || !avoids(p, set213()))
    throw std::domain_error("not a 213-avoiding flattened partition");

  const auto rd = run_decompose(p);
  const int r = rd.count();
  PQDecomposition out;
  for (int i = 0; i < r; ++i) {
    const auto& run = rd.runs[static_cast<std::size_t>(i)];
    std::vector<std::size_t> gaps;
    for (std::size_t j = 1; j < run.size(); ++j)
      if (run[j] != run[j - 1] + 1) gaps.push_back(j);
    if (i + 1 < r) {
      // Every non-final run splits at its unique gap into two words of
      // consecutive integers.
      if (gaps.size() != 1)
        throw std::logic_error("run violates the p/q structure");
      out.p_words.emplace_back(run.begin(),
                               run.begin() + static_cast<std::ptrdiff_t>(gaps[0]));
      out.q_words.emplace_back(run.begin() + static_cast<std::ptrdiff_t>(gaps[0]),
                               run.end());
    } else {
      if (!gaps.empty())
        throw std::logic_error("final run must be consecutive integers");
      out.p_words.push_back(run);
    }
  }

  // The blocks must tile the identity: p1 p2 ... pr q(r-1) ... q1 = 1..n.
  std::vector<int> cat;
  for (const auto& w : out.p_words) cat.insert(cat.end(), w.begin(), w.end());
  for (auto it = out.q_words.rbegin(); it != out.q_words.rend(); ++it)
    cat.insert(cat.end(), it->begin(), it->end());
  for (std::size_t i = 0; i < cat.size(); ++i)
    if (cat[i] != static_cast<int>(i) + 1)
      throw std::logic_error("p/q blocks do not tile the identity");
  return out;
}

Permutation compose_213(int n, std::vector<int> cuts) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::sort(cuts.begin(), cuts.end());
  if (std::adjacent_find(cuts.begin(), cuts.end()) != cuts.end())
    throw std::invalid_argument("cut positions must be distinct");
  for (int c : cuts)
    if (c < 1 || c > n - 1)
      throw std::invalid_argument("cut positions must lie in 1..n-1");
  if (cuts.size() % 2 != 0)
    throw std::invalid_argument("the number of cuts must be even");

  // Identity blocks between consecutive cuts.
  std::vector<std::pair<int, int>> blocks;  // [lo, hi] inclusive values
  int lo = 1;
  for (int c : cuts) {
    blocks.emplace_back(lo, c);
    lo = c + 1;
  }
  blocks.emplace_back(lo, n);

  const int r = (static_cast<int>(blocks.size()) + 1) / 2;
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  auto append = [&](std::pair<int, int> b) {
    for (int v = b.first; v <= b.second; ++v) w.push_back(v);
  };
  for (int i = 1; i < r; ++i) {
    append(blocks[static_cast<std::size_t>(i - 1)]);        // p_i
    append(blocks[static_cast<std::size_t>(2 * r - 1 - i)]);  // q_i
  }
  append(blocks[static_cast<std::size_t>(r - 1)]);  // p_r
  return Permutation(std::move(w));
}

SplitAtMax split_at_max(const Permutation& p) {
  const int n = p.size();
  if (n < 2)
    throw std::domain_error("split_at_max expects n >= 2");
  if (!is_flattened(p) || !avoids(p, set231()))
    throw std::domain_error("not a 231-avoiding flattened partition");

  const auto& w = p.word();
  int k = 0;  // 1-based position of n
  for (int i = 0; i < n; ++i)
    if (w[static_cast<std::size_t>(i)] == n) k = i + 1;
  if (k < 2) throw std::logic_error("maximum found at the first position");
  for (int i = 1; i < k; ++i)
    if (w[static_cast<std::size_t>(i - 1)] >= k)
      throw std::logic_error("value >= k on the left of the maximum");
  for (int i = k + 1; i <= n; ++i)
    if (w[static_cast<std::size_t>(i - 1)] < k)
      throw std::logic_error("value < k on the right of the maximum");

  SplitAtMax s;
  s.k = k;
  s.left = Permutation(std::vector<int>(w.begin(), w.begin() + (k - 1)));
  std::vector<int> right;
  for (int i = k; i < n; ++i)
    right.push_back(w[static_cast<std::size_t>(i)] - (k - 1));
  s.right = Permutation(std::move(right));
  return s;
}

std::vector<std::uint64_t> first_run_length_table(int n, int guard) {
  if (n < 2) throw std::invalid_argument("table defined for n >= 2");
  detail::check_guard(n, guard, "first_run_length_table");
  std::vector<std::uint64_t> table(static_cast<std::size_t>(n) + 1, 0);
  for_each_flattened(n, set213_231(), [&](const Permutation& p) {
    const auto& w = p.word();
    std::size_t len = 1;
    while (len < w.size() && w[len] > w[len - 1]) ++len;
    ++table[len];
  }, guard);
  return table;
}

}  // namespace flatpart
