#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "flatpart/series.hpp"
#include "json.hpp"

namespace flatpart {

enum class VerifyScope { all, core, bijections, series };
std::optional<VerifyScope> parse_scope(std::string_view s);

/// Runs every identity family in the scope up to n_max (families with
/// factorial-cost oracles cap themselves lower; each report records the
/// range actually checked). Requires 3 <= n_max <= 16.
std::vector<VerifyReport> run_verification(VerifyScope scope, int n_max);

bool all_ok(const std::vector<VerifyReport>& reports);
nlohmann::ordered_json reports_to_json(const std::vector<VerifyReport>& r);

/// Embedded reference sequences for n = 1..7, used by the table families.
struct ReferenceRow {
  const char* key;
  std::array<std::uint64_t, 7> values;
};
const std::vector<ReferenceRow>& reference_single_rows();
const std::vector<ReferenceRow>& reference_pair_rows();

}  // namespace flatpart
