#include "flatpart/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace flatpart {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("word is not a permutation of 1..n");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (word_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

RunDecomposition run_decompose(const Permutation& p) {
  RunDecomposition rd;
  const auto& w = p.word();
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i + 1;
    while (j < w.size() && w[j] > w[j - 1]) ++j;
    rd.runs.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(i),
                         w.begin() + static_cast<std::ptrdiff_t>(j));
    rd.starts.push_back(w[i]);
    rd.lengths.push_back(static_cast<int>(j - i));
    i = j;
  }
  return rd;
}

bool is_flattened(const Permutation& p) {
  const auto& w = p.word();
  // Run starts are the first element and every descent bottom; no need to
  // materialize the decomposition.
  int last_start = 0;
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] <= last_start) return false;
    last_start = w[i];
    ++i;
    while (i < w.size() && w[i] > w[i - 1]) ++i;
  }
  return true;
}

std::int64_t inversions(const Permutation& p) {
  const auto& w = p.word();
  std::int64_t count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++count;
  return count;
}

Permutation standardize(std::span<const int> w) {
  std::vector<int> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("standardize requires distinct entries");
  std::vector<int> out;
  out.reserve(w.size());
  for (int v : w) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    out.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return Permutation(std::move(out));
}

Permutation parse_compact(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty permutation text");
  std::vector<int> w;
  w.reserve(s.size());
  for (char c : s) {
    if (c < '1' || c > '9')
      throw std::invalid_argument("compact form admits digits 1..9 only");
    w.push_back(c - '0');
  }
  return Permutation(std::move(w));
}

Permutation parse_comma(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty permutation text");
  std::vector<int> w;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(',', pos);
    std::string_view tok = s.substr(
        pos, next == std::string_view::npos ? std::string_view::npos
                                            : next - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad integer in comma form");
    w.push_back(v);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return Permutation(std::move(w));
}

Permutation parse_permutation(std::string_view s) {
  if (s.find(',') != std::string_view::npos) return parse_comma(s);
  return parse_compact(s);
}

std::string to_compact(const Permutation& p) {
  if (p.size() > 9)
    throw std::invalid_argument("compact form is defined for n <= 9");
  std::string out;
  out.reserve(static_cast<std::size_t>(p.size()));
  for (int v : p.word()) out.push_back(static_cast<char>('0' + v));
  return out;
}

std::string to_comma(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(p[i]);
  }
  return out;
}

std::string to_display(const Permutation& p) {
  return p.size() <= 9 ? to_compact(p) : to_comma(p);
}

std::string run_display(const Permutation& p) {
  const bool compact = p.size() <= 9;
  std::string out;
  auto rd = run_decompose(p);
  for (std::size_t r = 0; r < rd.runs.size(); ++r) {
    if (r) out.push_back('|');
    for (std::size_t i = 0; i < rd.runs[r].size(); ++i) {
      if (compact) {
        out.push_back(static_cast<char>('0' + rd.runs[r][i]));
      } else {
        if (i) out.push_back(',');
        out += std::to_string(rd.runs[r][i]);
      }
    }
  }
  return out;
}

}  // namespace flatpart
