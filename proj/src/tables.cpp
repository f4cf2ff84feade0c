#include "flatpart/tables.hpp"

#include <sstream>
#include <stdexcept>

#include "flatpart/series.hpp"

namespace flatpart {

std::string_view method_name(CountMethod m) {
  switch (m) {
    case CountMethod::brute: return "brute";
    case CountMethod::direct: return "direct";
    case CountMethod::closed_form: return "closed-form";
  }
  return "?";
}

void CountTable::add(const PatternSet& ps, int n, std::uint64_t count,
                     CountMethod m) {
  auto key = std::make_pair(ps.key(), n);
  auto it = cells_.find(key);
  if (it == cells_.end()) {
    cells_[key] = Cell{count, {std::string(method_name(m))}};
    return;
  }
  if (it->second.count != count)
    throw std::logic_error("method disagreement for (" + key.first + ", n=" +
                           std::to_string(n) + "): " +
                           std::to_string(it->second.count) + " vs " +
                           std::to_string(count));
  it->second.methods.insert(std::string(method_name(m)));
}

void CountTable::merge(const CountTable& other) {
  for (const auto& [key, cell] : other.cells_) {
    auto it = cells_.find(key);
    if (it == cells_.end()) {
      cells_[key] = cell;
      continue;
    }
    if (it->second.count != cell.count)
      throw std::logic_error("method disagreement for (" + key.first +
                             ", n=" + std::to_string(key.second) + ")");
    it->second.methods.insert(cell.methods.begin(), cell.methods.end());
  }
}

std::optional<std::uint64_t> CountTable::lookup(const PatternSet& ps,
                                                int n) const {
  auto it = cells_.find(std::make_pair(ps.key(), n));
  if (it == cells_.end()) return std::nullopt;
  return it->second.count;
}

namespace {
std::string joined_methods(const std::set<std::string>& methods) {
  std::string out;
  for (const auto& m : methods) {
    if (!out.empty()) out.push_back('+');
    out += m;
  }
  return out;
}
}  // namespace

std::string CountTable::to_csv() const {
  std::ostringstream out;
  out << "n,patterns,count,method\n";
  for (const auto& [key, cell] : cells_)
    out << key.second << ',' << key.first << ',' << cell.count << ','
        << joined_methods(cell.methods) << '\n';
  return out.str();
}

nlohmann::ordered_json CountTable::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [key, cell] : cells_) {
    nlohmann::ordered_json entry;
    entry["count"] = cell.count;
    entry["method"] = joined_methods(cell.methods);
    j[key.first][std::to_string(key.second)] = entry;
  }
  return j;
}

const std::vector<PatternSet>& standard_pattern_sets() {
  static const std::vector<PatternSet> sets = [] {
    const char* words[] = {"123", "132", "213", "231", "312", "321"};
    std::vector<PatternSet> out;
    for (const char* w : words) out.push_back(PatternSet::parse(w));
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        out.push_back(PatternSet::parse(std::string(words[i]) + "," +
                                        std::string(words[j])));
    return out;
  }();
  return sets;
}

std::optional<std::uint64_t> closed_form_count(int n, const PatternSet& ps) {
  if (n < 1) throw std::invalid_argument("counts start at n = 1");
  if (ps.unconstrained()) return std::nullopt;
  auto as_u64 = [](const BigInt& v) -> std::uint64_t {
    if (!v.fits_ulong_p())
      throw std::overflow_error("closed-form count exceeds 64 bits");
    return static_cast<std::uint64_t>(v.get_ui());
  };
  const std::string key = ps.key();
  if (key == "123") return n <= 3 ? 1 : 0;
  if (key == "132") return 1;
  if (key == "213" || key == "312") return as_u64(powers_of_two_shifted(n));
  if (key == "231") return as_u64(motzkin(n - 1));
  if (key == "321") return as_u64(catalan(n - 1));
  if (key == "123+132") return n <= 2 ? 1 : 0;
  if (key == "123+213" || key == "123+231" || key == "123+312" ||
      key == "123+321")
    return n <= 3 ? 1 : 0;
  if (key == "132+213" || key == "132+231" || key == "132+312" ||
      key == "132+321")
    return 1;
  if (key == "213+231" || key == "231+312") return as_u64(fibonacci(n));
  if (key == "213+312") return n == 1 ? 1 : static_cast<std::uint64_t>(n - 1);
  if (key == "213+321") return as_u64(binomial(n - 1, 2) + 1);
  if (key == "231+321" || key == "312+321")
    return as_u64(powers_of_two_shifted(n));
  return std::nullopt;
}

CountTable build_count_table(int n_max, CountMethod method) {
  const int guard = method == CountMethod::brute ? kMaxBruteN : kMaxDirectN;
  if (method != CountMethod::closed_form)
    detail::check_guard(n_max, guard, "build_count_table");
  else if (n_max < 1 || n_max > 64)
    throw GuardError("build_count_table: closed-form rows capped at n=64");

  CountTable table;
  for (const PatternSet& ps : standard_pattern_sets()) {
    for (int n = 1; n <= n_max; ++n) {
      std::uint64_t count = 0;
      switch (method) {
        case CountMethod::brute:
          count = static_cast<std::uint64_t>(
              brute_force_avoiding(n, ps).size());
          break;
        case CountMethod::direct:
          count = count_avoiding(n, ps);
          break;
        case CountMethod::closed_form:
          count = closed_form_count(n, ps).value();
          break;
      }
      table.add(ps, n, count, method);
    }
  }
  return table;
}

}  // namespace flatpart
