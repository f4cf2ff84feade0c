#include "flatpart/set_partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "flatpart/generate.hpp"

namespace flatpart {

SetPartition::SetPartition(std::vector<std::vector<int>> raw_blocks)
    : blocks(std::move(raw_blocks)) {
  int n = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    n += static_cast<int>(b.size());
  }
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (auto& b : blocks) {
    for (int v : b) {
      if (v < 1 || v > n || seen[v])
        throw std::invalid_argument("blocks must partition 1..n");
      seen[v] = 1;
    }
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

int SetPartition::ground_size() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

Permutation flatten_set_partition(const SetPartition& sp) {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(sp.ground_size()));
  for (const auto& b : sp.blocks) w.insert(w.end(), b.begin(), b.end());
  return Permutation(std::move(w));
}

std::vector<SetPartition> all_set_partitions(int n) {
  detail::check_guard(n, 12, "all_set_partitions");
  std::vector<SetPartition> out;
  // Restricted growth strings: a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  auto emit = [&]() {
    int k = 1 + *std::max_element(a.begin(), a.end());
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i)
      blocks[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])]
          .push_back(i + 1);
    out.emplace_back(std::move(blocks));
  };
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (int b = 0; b <= mx + 1; ++b) {
      a[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(mx, b));
    }
  };
  rec(rec, 1, 0);
  return out;
}

}  // namespace flatpart
