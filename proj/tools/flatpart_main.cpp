// Command-line front end: enumeration, counting tables, statistic
// distributions, bijection certificates and a one-shot verification of the
// library's identity families.
//
// Exit codes: 0 success, 1 identity failure, 2 usage error, 3 size-guard
// violation, 4 domain error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "flatpart/bijections.hpp"
#include "flatpart/generate.hpp"
#include "flatpart/series.hpp"
#include "flatpart/tables.hpp"
#include "flatpart/verify.hpp"
#include "json.hpp"

namespace {

using namespace flatpart;

int run_enumerate(int n, const std::string& avoid, const std::string& format) {
  const PatternSet ps = PatternSet::parse(avoid);
  auto members = enumerate_avoiding(n, ps);
  if (format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const Permutation& p : members) arr.push_back(to_display(p));
    std::cout << arr.dump(2) << '\n';
  } else {
    for (const Permutation& p : members) std::cout << to_display(p) << '\n';
  }
  return 0;
}

int run_count(int n, const std::string& avoid) {
  std::cout << count_avoiding(n, PatternSet::parse(avoid)) << '\n';
  return 0;
}

int run_table(int n_max, const std::string& format) {
  CountTable table = build_count_table(n_max, CountMethod::direct);
  if (format == "json")
    std::cout << table.to_json().dump(2) << '\n';
  else
    std::cout << table.to_csv();
  return 0;
}

int run_stats(const std::string& which, int n, const std::string& format) {
  QPolynomial dist;
  if (which == "runs")
    dist = runs_distribution(n);
  else if (which == "inv")
    dist = inv_distribution(n);
  else
    throw std::invalid_argument("--which must be runs or inv");
  if (format == "json") {
    nlohmann::ordered_json j;
    j["statistic"] = which;
    j["n"] = n;
    auto arr = nlohmann::ordered_json::array();
    for (const BigInt& c : dist.coeffs()) arr.push_back(c.get_str());
    j["coefficients"] = arr;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << dist.str() << '\n';
  }
  return 0;
}

int run_bijection(const std::string& name, const std::string& mode, int n) {
  if (mode == "certify") {
    if (n < 1) throw std::invalid_argument("certify requires --n");
    std::cout << certify_bijection(name, n).to_json().dump(2) << '\n';
    return 0;
  }
  std::string line;
  if (!std::getline(std::cin, line) || line.empty())
    throw std::invalid_argument(
        "apply mode reads one comma-form permutation on stdin");
  const Permutation input = parse_comma(line);
  Permutation output;
  if (name == "f") output = f_312_to_213(input);
  else if (name == "g") output = g_213_to_312(input);
  else if (name == "swap23") output = swap23(input);
  else if (name == "h") output = h_321(input);
  else if (name == "h-inv") output = h_inverse_321(input);
  else if (name == "alpha") output = alpha_motzkin(input);
  else if (name == "alpha-inv") output = alpha_inverse(input);
  else throw std::invalid_argument("unknown bijection name: " + name);
  std::cout << to_comma(output) << '\n';
  return 0;
}

int run_verify(const std::string& scope_text, int n_max) {
  auto scope = parse_scope(scope_text);
  if (!scope) throw std::invalid_argument("unknown scope: " + scope_text);
  auto reports = run_verification(*scope, n_max);
  std::cout << reports_to_json(reports).dump(2) << '\n';
  return all_ok(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"enumeration toolkit for pattern-avoiding flattened partitions"};
  app.require_subcommand(1);

  auto* cmd_enum = app.add_subcommand(
      "enumerate", "list a pattern-avoiding flattened partition class");
  int enum_n = 0;
  std::string enum_avoid, enum_format = "lines";
  cmd_enum->add_option("--n", enum_n, "size of the ground set")->required();
  cmd_enum->add_option("--avoid", enum_avoid,
                       "comma-joined 3-letter patterns, e.g. 213,231");
  cmd_enum->add_option("--format", enum_format, "lines or json")
      ->check(CLI::IsMember({"lines", "json"}));

  auto* cmd_count =
      app.add_subcommand("count", "count one class instead of listing it");
  int count_n = 0;
  std::string count_avoid;
  cmd_count->add_option("--n", count_n, "size of the ground set")->required();
  cmd_count->add_option("--avoid", count_avoid, "patterns as for enumerate");

  auto* cmd_table = app.add_subcommand(
      "table", "counts for all 6 single patterns and 15 pattern pairs");
  int table_n_max = 7;
  std::string table_format = "csv";
  cmd_table->add_option("--n-max", table_n_max, "largest size, at most 16");
  cmd_table->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* cmd_stats = app.add_subcommand(
      "stats", "statistic distribution over a class, as a polynomial in q");
  std::string stats_which;
  int stats_n = 0;
  std::string stats_format = "text";
  cmd_stats
      ->add_option("--which", stats_which,
                   "runs (over the 213-avoiders) or inv (over the "
                   "312-avoiders)")
      ->required()
      ->check(CLI::IsMember({"runs", "inv"}));
  cmd_stats->add_option("--n", stats_n, "size of the ground set")->required();
  cmd_stats->add_option("--format", stats_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* cmd_bij = app.add_subcommand(
      "bijection", "apply a structural bijection or certify it at one size");
  std::string bij_name, bij_mode = "apply";
  int bij_n = 0;
  cmd_bij->add_option("--name", bij_name, "f g swap23 h h-inv alpha alpha-inv")
      ->required()
      ->check(CLI::IsMember({"f", "g", "swap23", "h", "h-inv", "alpha",
                             "alpha-inv"}));
  cmd_bij->add_option("--mode", bij_mode,
                      "apply (one comma-form permutation on stdin) or certify")
      ->check(CLI::IsMember({"apply", "certify"}));
  cmd_bij->add_option("--n", bij_n, "size for certify mode");

  auto* cmd_verify =
      app.add_subcommand("verify", "run the identity families and report");
  std::string verify_scope = "all";
  int verify_n_max = 8;
  cmd_verify->add_option("--scope", verify_scope,
                         "all, core, bijections or series");
  cmd_verify->add_option("--n-max", verify_n_max,
                         "verification depth, 3..16");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_enum) return run_enumerate(enum_n, enum_avoid, enum_format);
    if (*cmd_count) return run_count(count_n, count_avoid);
    if (*cmd_table) return run_table(table_n_max, table_format);
    if (*cmd_stats) return run_stats(stats_which, stats_n, stats_format);
    if (*cmd_bij) return run_bijection(bij_name, bij_mode, bij_n);
    if (*cmd_verify) return run_verify(verify_scope, verify_n_max);
  } catch (const flatpart::GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    // Disagreement between two computation routes surfaces here.
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
