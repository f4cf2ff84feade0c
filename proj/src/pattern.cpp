#include "flatpart/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace flatpart {

Pattern::Pattern(Permutation word) : word_(std::move(word)) {
  if (word_.size() != 3)
    throw std::invalid_argument("patterns are fixed at length 3");
}

Pattern Pattern::parse(std::string_view s) {
  return Pattern(parse_permutation(s));
}

std::string Pattern::str() const { return to_compact(word_); }

PatternSet::PatternSet(std::vector<Pattern> patterns)
    : patterns_(std::move(patterns)) {
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()),
                  patterns_.end());
  if (patterns_.size() > 2)
    throw std::invalid_argument("at most two distinct patterns");
}

PatternSet PatternSet::parse(std::string_view csv) {
  std::vector<Pattern> pats;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t next = csv.find(',', pos);
    std::string_view tok = csv.substr(
        pos, next == std::string_view::npos ? std::string_view::npos
                                            : next - pos);
    if (!tok.empty()) pats.push_back(Pattern::parse(tok));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return PatternSet(std::move(pats));
}

std::string PatternSet::key() const {
  std::string out;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i) out.push_back('+');
    out += patterns_[i].str();
  }
  return out;
}

bool order_isomorphic(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
  return true;
}

namespace {

inline bool triple_matches(int a, int b, int c, int t0, int t1, int t2) {
  return ((a < b) == (t0 < t1)) && ((b < c) == (t1 < t2)) &&
         ((a < c) == (t0 < t2));
}

bool contains_rec(std::span<const int> w, std::span<const int> t,
                  std::vector<std::size_t>& idx, std::size_t from) {
  const std::size_t k = idx.size();
  if (k == t.size()) return true;
  for (std::size_t i = from; i + (t.size() - k) <= w.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j)
      ok = (w[idx[j]] < w[i]) == (t[j] < t[k]);
    if (!ok) continue;
    idx.push_back(i);
    if (contains_rec(w, t, idx, i + 1)) return true;
    idx.pop_back();
  }
  return false;
}

std::uint64_t count_rec(std::span<const int> w, std::span<const int> t,
                        std::vector<std::size_t>& idx, std::size_t from) {
  const std::size_t k = idx.size();
  if (k == t.size()) return 1;
  std::uint64_t total = 0;
  for (std::size_t i = from; i + (t.size() - k) <= w.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j)
      ok = (w[idx[j]] < w[i]) == (t[j] < t[k]);
    if (!ok) continue;
    idx.push_back(i);
    total += count_rec(w, t, idx, i + 1);
    idx.pop_back();
  }
  return total;
}

}  // namespace

bool contains(std::span<const int> word, std::span<const int> pattern) {
  if (pattern.size() == 3) {
    const int t0 = pattern[0], t1 = pattern[1], t2 = pattern[2];
    for (std::size_t i = 0; i + 2 < word.size(); ++i)
      for (std::size_t j = i + 1; j + 1 < word.size(); ++j)
        for (std::size_t k = j + 1; k < word.size(); ++k)
          if (triple_matches(word[i], word[j], word[k], t0, t1, t2))
            return true;
    return false;
  }
  std::vector<std::size_t> idx;
  return contains_rec(word, pattern, idx, 0);
}

std::uint64_t count_occurrences(std::span<const int> word,
                                std::span<const int> pattern) {
  if (pattern.size() == 3) {
    const int t0 = pattern[0], t1 = pattern[1], t2 = pattern[2];
    std::uint64_t total = 0;
    for (std::size_t i = 0; i + 2 < word.size(); ++i)
      for (std::size_t j = i + 1; j + 1 < word.size(); ++j)
        for (std::size_t k = j + 1; k < word.size(); ++k)
          if (triple_matches(word[i], word[j], word[k], t0, t1, t2)) ++total;
    return total;
  }
  std::vector<std::size_t> idx;
  return count_rec(word, pattern, idx, 0);
}

bool contains(const Permutation& p, const Pattern& t) {
  return contains(std::span<const int>(p.word()),
                  std::span<const int>(t.word().word()));
}

std::uint64_t count_occurrences(const Permutation& p, const Pattern& t) {
  return count_occurrences(std::span<const int>(p.word()),
                           std::span<const int>(t.word().word()));
}

bool avoids(std::span<const int> word, const PatternSet& ps) {
  for (const Pattern& t : ps.patterns())
    if (contains(word, std::span<const int>(t.word().word()))) return false;
  return true;
}

bool avoids(const Permutation& p, const PatternSet& ps) {
  return avoids(std::span<const int>(p.word()), ps);
}

bool extension_creates_occurrence(std::span<const int> prefix, int next,
                                  const PatternSet& ps) {
  for (const Pattern& t : ps.patterns()) {
    const auto& tw = t.word().word();
    const int t0 = tw[0], t1 = tw[1], t2 = tw[2];
    for (std::size_t i = 0; i + 1 < prefix.size(); ++i)
      for (std::size_t j = i + 1; j < prefix.size(); ++j)
        if (triple_matches(prefix[i], prefix[j], next, t0, t1, t2))
          return true;
  }
  return false;
}

bool is_motzkin_permutation(const Permutation& p) {
  static constexpr int kPat132[3] = {1, 3, 2};
  const auto& w = p.word();
  if (contains(std::span<const int>(w), std::span<const int>(kPat132)))
    return false;
  const int n = p.size();
  for (int j = 1; j <= n - 2; ++j) {
    if (w[static_cast<std::size_t>(j)] >= w[static_cast<std::size_t>(j) + 1])
      continue;
    for (int i = 0; i < j; ++i)
      if (w[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(j)])
        return false;
  }
  return true;
}

}  // namespace flatpart
