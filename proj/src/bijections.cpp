#include "flatpart/bijections.hpp"

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
const PatternSet& set312() {
  static const PatternSet ps = PatternSet::parse("312");
  return ps;
}
const PatternSet& set321() {
  static const PatternSet ps = PatternSet::parse("321");
  return ps;
}

void require_class(const Permutation& p, const PatternSet& ps,
                   const char* what) {
  if (!is_flattened(p) || !avoids(p, ps))
    throw std::domain_error(std::string(what) +
                            ": input outside the domain class");
}

bool identity_word(const std::vector<int>& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != static_cast<int>(i) + 1) return false;
  return true;
}

// First run of w as [0, e); within it, the single gap position. A
// non-identity flattened partition always has a gap in its first run, and
// in the classes handled here the two sides are consecutive integers.
struct FirstRun {
  std::size_t end;   // one past the run
  std::size_t gap;   // index where run[gap] != run[gap-1] + 1
};

FirstRun first_run_shape(const std::vector<int>& w) {
  std::size_t e = 1;
  while (e < w.size() && w[e] > w[e - 1]) ++e;
  std::size_t gap = 0;
  for (std::size_t j = 1; j < e; ++j)
    if (w[j] != w[j - 1] + 1) {
      if (gap != 0)
        throw std::logic_error("first run has more than one gap");
      gap = j;
    }
  if (gap == 0)
    throw std::logic_error(
        "non-identity member must carry a gap in its first run");
  return {e, gap};
}

std::vector<int> apply_f(const std::vector<int>& w) {
  if (w.size() <= 1 || identity_word(w)) return w;
  const int n = static_cast<int>(w.size());
  auto [e, gap] = first_run_shape(w);
  const int k = w[gap - 1];  // prefix of the first run is 1..k
  if (w[gap] != k + 2)
    throw std::logic_error("first-run tail must start at k+2");
  const int t = w[e - 1];

  std::vector<int> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(gap));
  for (std::size_t j = gap; j < e; ++j) out.push_back(w[j] + (n - t));

  std::vector<int> rest(w.begin() + static_cast<std::ptrdiff_t>(e), w.end());
  if (!rest.empty()) {
    auto mapped = apply_f(standardize(rest).word());
    for (int x : mapped) out.push_back(x + k);
  }
  return out;
}

std::vector<int> apply_g(const std::vector<int>& w) {
  if (w.size() <= 1 || identity_word(w)) return w;
  const int n = static_cast<int>(w.size());
  auto [e, gap] = first_run_shape(w);
  const int k = w[gap - 1];
  if (w[e - 1] != n)
    throw std::logic_error("first run must end with the maximum");
  const int qlen = static_cast<int>(e - gap);
  const int t = k + 1 + qlen;

  std::vector<int> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(gap));
  for (int v = k + 2; v <= t; ++v) out.push_back(v);

  std::vector<int> rest(w.begin() + static_cast<std::ptrdiff_t>(e), w.end());
  if (!rest.empty()) {
    auto sigma = apply_g(standardize(rest).word());
    // Remaining values of the preimage: k+1 followed by t+1..n.
    std::vector<int> targets{k + 1};
    for (int v = t + 1; v <= n; ++v) targets.push_back(v);
    for (int x : sigma)
      out.push_back(targets[static_cast<std::size_t>(x) - 1]);
  }
  return out;
}

}  // namespace

Permutation f_312_to_213(const Permutation& p) {
  require_class(p, set312(), "f");
  return Permutation(apply_f(p.word()));
}

Permutation g_213_to_312(const Permutation& p) {
  require_class(p, set213(), "g");
  return Permutation(apply_g(p.word()));
}

Permutation swap23(const Permutation& p) {
  if (p.size() < 3) throw std::domain_error("swap23 requires n >= 3");
  require_class(p, set312(), "swap23");
  std::vector<int> w = p.word();
  for (int& v : w) {
    if (v == 2) v = 3;
    else if (v == 3) v = 2;
  }
  return Permutation(std::move(w));
}

Permutation h_321(const Permutation& p) {
  if (p.empty()) throw std::domain_error("h expects n >= 1");
  require_class(p, set321(), "h");
  std::vector<int> out;
  out.reserve(p.word().size() - 1);
  for (std::size_t i = 1; i < p.word().size(); ++i)
    out.push_back(p.word()[i] - 1);
  return Permutation(std::move(out));
}

Permutation h_inverse_321(const Permutation& s) {
  if (!avoids(s, set321()))
    throw std::domain_error("h-inv: input contains a 321 occurrence");
  std::vector<int> out{1};
  for (int v : s.word()) out.push_back(v + 1);
  Permutation result(std::move(out));
  // Flattenedness of the image holds for every 321-avoiding input, whether
  // or not that input is itself flattened; a counterexample would be a
  // library bug and is reported loudly.
  if (!is_flattened(result) || !avoids(result, set321()))
    throw std::logic_error("h-inv produced an out-of-class image");
  return result;
}

Permutation alpha_motzkin(const Permutation& s) {
  if (!is_motzkin_permutation(s))
    throw std::domain_error("alpha: input is not a Motzkin permutation");
  std::vector<int> out{1};
  for (auto it = s.word().rbegin(); it != s.word().rend(); ++it)
    out.push_back(*it + 1);
  return Permutation(std::move(out));
}

Permutation alpha_inverse(const Permutation& p) {
  if (p.empty()) throw std::domain_error("alpha-inv expects n >= 1");
  require_class(p, set231(), "alpha-inv");
  std::vector<int> out;
  out.reserve(p.word().size() - 1);
  for (auto it = p.word().rbegin(); it != p.word().rend() - 1; ++it)
    out.push_back(*it - 1);
  return Permutation(std::move(out));
}

std::vector<Permutation> fixed_points_of_f(int n) {
  if (n < 3 || n > 12)
    throw GuardError("fixed_points_of_f: n must be in 3..12");
  std::vector<Permutation> out;
  for (const Permutation& p : enumerate_avoiding(n, set312()))
    if (f_312_to_213(p) == p) out.push_back(p);
  return out;
}

std::vector<Permutation> motzkin_permutations(int len, int guard) {
  if (len == 0) return {Permutation{}};
  std::vector<Permutation> out;
  for_each_permutation(
      len,
      [&](const Permutation& p) {
        if (is_motzkin_permutation(p)) out.push_back(p);
      },
      guard);
  return out;
}

std::vector<Permutation> avoiding_permutations(int n, const Pattern& t,
                                               int guard) {
  if (n == 0) return {Permutation{}};
  std::vector<Permutation> out;
  for_each_permutation(
      n,
      [&](const Permutation& p) {
        if (!contains(p, t)) out.push_back(p);
      },
      guard);
  return out;
}

nlohmann::ordered_json BijectionCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["n"] = n;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [in, out] : pairs)
    arr.push_back({to_display(in), to_display(out)});
  j["pairs"] = std::move(arr);
  j["preserved"] = preserved;
  return j;
}

namespace {

std::vector<int> run_lengths(const Permutation& p) {
  return run_decompose(p).lengths;
}

}  // namespace

BijectionCertificate certify_bijection(std::string_view name, int n) {
  if (n < 1) throw std::invalid_argument("certify requires n >= 1");

  std::vector<Permutation> domain, codomain;
  Permutation (*map)(const Permutation&) = nullptr;
  std::vector<std::string> preserved;

  const Pattern p321 = Pattern::parse("321");
  if (name == "f" || name == "g" || name == "swap23") {
    if (n > 12) throw GuardError("certify: n capped at 12 for this map");
    if (name == "swap23" && n < 3)
      throw std::domain_error("swap23 requires n >= 3");
    auto f312 = enumerate_avoiding(n, set312());
    auto f213 = enumerate_avoiding(n, set213());
    if (name == "f") {
      domain = std::move(f312);
      codomain = std::move(f213);
      map = f_312_to_213;
      preserved = {"run-lengths"};
    } else if (name == "g") {
      domain = std::move(f213);
      codomain = std::move(f312);
      map = g_213_to_312;
      preserved = {"run-lengths"};
    } else {
      domain = f312;
      codomain = std::move(f312);
      map = swap23;
    }
  } else if (name == "h" || name == "h-inv") {
    if (n - 1 > kMaxBruteN)
      throw GuardError("certify: this map enumerates all (n-1)! permutations");
    auto flat = enumerate_avoiding(n, set321());
    auto plain = avoiding_permutations(n - 1, p321);
    if (name == "h") {
      domain = std::move(flat);
      codomain = std::move(plain);
      map = h_321;
    } else {
      domain = std::move(plain);
      codomain = std::move(flat);
      map = h_inverse_321;
    }
  } else if (name == "alpha" || name == "alpha-inv") {
    if (n - 1 > kMaxBruteN)
      throw GuardError("certify: this map enumerates all (n-1)! permutations");
    auto motz = motzkin_permutations(n - 1);
    auto flat = enumerate_avoiding(n, set231());
    if (name == "alpha") {
      domain = std::move(motz);
      codomain = std::move(flat);
      map = alpha_motzkin;
    } else {
      domain = std::move(flat);
      codomain = std::move(motz);
      map = alpha_inverse;
    }
  } else {
    throw std::invalid_argument("unknown bijection name: " +
                                std::string(name));
  }

  BijectionCertificate cert;
  cert.name = std::string(name);
  cert.n = n;
  cert.preserved = preserved;
  std::vector<Permutation> outputs;
  for (const Permutation& in : domain) {
    Permutation out = map(in);
    for (const std::string& stat : preserved) {
      if (stat == "run-lengths" && run_lengths(in) != run_lengths(out))
        throw std::logic_error("certificate: run lengths not preserved");
    }
    outputs.push_back(out);
    cert.pairs.emplace_back(in, std::move(out));
  }
  std::sort(outputs.begin(), outputs.end());
  if (std::adjacent_find(outputs.begin(), outputs.end()) != outputs.end())
    throw std::logic_error("certificate: outputs collide");
  std::sort(codomain.begin(), codomain.end());
  if (outputs != codomain)
    throw std::logic_error("certificate: image differs from the codomain");
  return cert;
}

}  // namespace flatpart
