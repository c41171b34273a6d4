#include "lgr/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "lgr/chart.hpp"

namespace lgr {

// ---- signed permutations -------------------------------------------------

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("signed permutation: n must be >= 1");
  std::vector<int> m(2 * n + 1);
  for (int k = 0; k <= 2 * n; ++k) m[k] = k;
  return SignedPermutation(n, std::move(m));
}

namespace {

// Swap p <-> q and bar(p) <-> bar(q). For q = bar(p) this is a single swap.
void swap_pair(std::vector<int>& m, int p, int q, int n) {
  std::swap(m[p], m[q]);
  if (q != bar(p, n)) std::swap(m[bar(p, n)], m[bar(q, n)]);
}

}  // namespace

SignedPermutation SignedPermutation::simple(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("simple reflection index out of range");
  SignedPermutation s = identity(n);
  swap_pair(s.map_, i, i + 1, n);
  return s;
}

SignedPermutation SignedPermutation::reflection(const PositiveRoot& root, int n) {
  SignedPermutation s = identity(n);
  switch (root.kind) {
    case PositiveRoot::Kind::Difference: swap_pair(s.map_, root.a, root.b, n); break;
    case PositiveRoot::Kind::Sum: swap_pair(s.map_, root.a, bar(root.b, n), n); break;
    case PositiveRoot::Kind::Double: swap_pair(s.map_, root.a, bar(root.a, n), n); break;
  }
  return s;
}

SignedPermutation SignedPermutation::lift(const IsotropicIndex& alpha) {
  const int n = alpha.rank();
  SignedPermutation w = identity(n);
  for (int k = 1; k <= n; ++k) {
    w.map_[k] = alpha.nth(k);
    w.map_[bar(k, n)] = bar(alpha.nth(k), n);
  }
  return w;
}

SignedPermutation SignedPermutation::from_signed(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  SignedPermutation w = identity(n);
  std::vector<bool> seen(n + 1, false);
  for (int k = 1; k <= n; ++k) {
    const int v = images[k - 1];
    const int a = v < 0 ? -v : v;
    if (a < 1 || a > n || seen[a]) throw std::invalid_argument("signed permutation: bad images");
    seen[a] = true;
    w.map_[k] = v > 0 ? v : bar(-v, n);
    w.map_[bar(k, n)] = bar(w.map_[k], n);
  }
  return w;
}

std::vector<int> SignedPermutation::signed_images() const {
  std::vector<int> out;
  for (int k = 1; k <= n_; ++k) out.push_back(map_[k] <= n_ ? map_[k] : -bar(map_[k], n_));
  return out;
}

IsotropicIndex SignedPermutation::act(const IsotropicIndex& alpha) const {
  if (alpha.rank() != n_) throw std::invalid_argument("signed permutation: rank mismatch");
  std::vector<int> v;
  for (int x : alpha.values()) v.push_back(map_[x]);
  return IsotropicIndex(n_, std::move(v));
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("signed permutation: rank mismatch");
  std::vector<int> m(a.map_.size());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = a.map_[b.map_[k]];
  return SignedPermutation(a.n_, std::move(m));
}

WeylGroup::WeylGroup(int n) : n_(n) {
  const auto e = SignedPermutation::identity(n);
  words_.emplace(e, std::vector<int>{});
  std::deque<SignedPermutation> queue{e};
  while (!queue.empty()) {
    const SignedPermutation w = queue.front();
    queue.pop_front();
    const auto word = words_.at(w);
    for (int i = 1; i <= n; ++i) {
      const SignedPermutation next = w * SignedPermutation::simple(i, n);
      if (words_.count(next)) continue;
      auto longer = word;
      longer.push_back(i);
      words_.emplace(next, std::move(longer));
      queue.push_back(next);
    }
  }
}

const std::vector<int>& WeylGroup::reduced_word(const SignedPermutation& w) const {
  const auto it = words_.find(w);
  if (it == words_.end()) throw std::logic_error("weyl group: no reduced word found");
  return it->second;
}

int WeylGroup::length(const SignedPermutation& w) const {
  return static_cast<int>(reduced_word(w).size());
}

// ---- inclusion-exclusion -------------------------------------------------

std::size_t union_component_count(const IsotropicIndex& alpha, const IsotropicIndex& beta) {
  return enumerate_ssyt(sigma(alpha), sigma(beta)).size();
}

LaurentPolynomial kclass_union_oracle(const IsotropicIndex& alpha, const IsotropicIndex& beta) {
  if (alpha.rank() != beta.rank()) throw std::invalid_argument("union oracle: rank mismatch");
  const int n = beta.rank();
  const auto tableaux = enumerate_ssyt(sigma(alpha), sigma(beta));
  const std::size_t m = tableaux.size();
  if (m > kMaxUnionComponents) {
    throw std::length_error("union oracle: " + std::to_string(m) + " components exceeds the limit of " +
                            std::to_string(kMaxUnionComponents));
  }

  std::vector<ChartPair> coords;
  std::vector<std::uint64_t> cut_masks;
  for (const auto& p : tableaux) {
    std::uint64_t mask = 0;
    for (const auto& pair : subspace_of_tableau(p, beta).cut) {
      auto it = std::find(coords.begin(), coords.end(), pair);
      if (it == coords.end()) it = coords.insert(coords.end(), pair);
      mask |= std::uint64_t{1} << (it - coords.begin());
    }
    cut_masks.push_back(mask);
  }

  // Signed multiplicity of each union of cut sets.
  std::map<std::uint64_t, Coefficient> weight;
  std::vector<std::uint64_t> unions(std::size_t{1} << m, 0);
  for (std::size_t t = 1; t < unions.size(); ++t) {
    const int low = std::countr_zero(t);
    unions[t] = unions[t & (t - 1)] | cut_masks[low];
    weight[unions[t]] += (std::popcount(t) % 2 == 1) ? 1 : -1;
  }

  const auto one = LaurentPolynomial::constant(n, 1);
  LaurentPolynomial total(n);
  for (const auto& [mask, c] : weight) {
    if (c == 0) continue;
    LaurentPolynomial term = one;
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (mask >> k & 1) term *= one - coordinate_weight_k(coords[k].first, coords[k].second, n);
    }
    total += term * c;
  }
  return total;
}

// ---- subword oracle ------------------------------------------------------

std::string convention_name(SubwordConvention c) {
  return c == SubwordConvention::Raw ? "raw" : "b-minus";
}

LaurentPolynomial billey_restrict_h(const IsotropicIndex& alpha, const IsotropicIndex& beta,
                                    const WeylGroup& group, SubwordConvention convention) {
  const int n = beta.rank();
  if (alpha.rank() != n || group.rank() != n) throw std::invalid_argument("subword oracle: rank mismatch");
  const auto w = SignedPermutation::lift(alpha);
  const auto v = SignedPermutation::lift(beta);
  const auto& word = group.reduced_word(v);
  const std::size_t target = static_cast<std::size_t>(group.length(w));

  // Root attached to position j: s_{b_1} ... s_{b_{j-1}} applied to the simple root b_j.
  std::vector<LaurentPolynomial> roots;
  std::vector<SignedPermutation> simples;
  auto prefix = SignedPermutation::identity(n);
  for (int b : word) {
    roots.push_back(bar_var_h(prefix(b), n) - bar_var_h(prefix(b + 1), n));
    simples.push_back(SignedPermutation::simple(b, n));
    prefix = prefix * simples.back();
  }

  LaurentPolynomial total(n);
  std::function<void(std::size_t, std::size_t, const SignedPermutation&, const LaurentPolynomial&)> walk =
      [&](std::size_t j, std::size_t taken, const SignedPermutation& prod, const LaurentPolynomial& value) {
        if (taken == target) {
          if (prod == w) total += value;
          return;
        }
        if (word.size() - j < target - taken) return;
        walk(j + 1, taken + 1, prod * simples[j], value * roots[j]);
        walk(j + 1, taken, prod, value);
      };
  walk(0, 0, SignedPermutation::identity(n), LaurentPolynomial::constant(n, 1));

  if (convention == SubwordConvention::BMinus && length(alpha) % 2 != 0) total = -total;
  return total;
}

LaurentPolynomial billey_restrict_h(const IsotropicIndex& alpha, const IsotropicIndex& beta,
                                    SubwordConvention convention) {
  return billey_restrict_h(alpha, beta, WeylGroup(beta.rank()), convention);
}

CalibrationResult calibrate_subword() {
  CalibrationResult r{IsotropicIndex(3, {1, 3, 5}), IsotropicIndex(3, {3, 5, 6}), {}, kFrozenSubwordConvention};
  const WeylGroup group(3);
  const auto target = restrict_h(r.alpha, r.beta).value;
  for (auto c : {SubwordConvention::Raw, SubwordConvention::BMinus}) {
    r.consistent[c] = billey_restrict_h(r.alpha, r.beta, group, c) == target;
  }
  return r;
}

// ---- GKM -----------------------------------------------------------------

std::vector<GkmEdge> gkm_edges(int n) {
  std::set<GkmEdge> edges;
  const auto roots = positive_roots_bminus(n);
  for (const auto& beta : enumerate_isotropic(n)) {
    for (const auto& root : roots) {
      const auto image = SignedPermutation::reflection(root, n).act(beta);
      if (image == beta) continue;
      edges.insert(beta < image ? GkmEdge{beta, image, root} : GkmEdge{image, beta, root});
    }
  }
  return {edges.begin(), edges.end()};
}

namespace {

bool edge_divides(const LaurentPolynomial& diff, const PositiveRoot& root, Theory theory) {
  const auto theta = root.linear_form(static_cast<int>(diff.nvars()));
  return theory == Theory::H ? divisible_by_root_h(diff, theta) : divisible_by_k_root(diff, theta);
}

}  // namespace

GkmReport gkm_check(const RestrictionTable& table, const std::vector<GkmEdge>& edges) {
  GkmReport report{table.n, table.theory, 0, {}};
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (const auto& e : edges) idx.emplace_back(table.index_of(e.beta1), table.index_of(e.beta2));

  const long long rows = static_cast<long long>(table.size());
  std::vector<std::vector<GkmFailure>> per_row(table.size());
#pragma omp parallel for schedule(dynamic)
  for (long long ia = 0; ia < rows; ++ia) {
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto diff = table.at(ia, idx[k].first) - table.at(ia, idx[k].second);
      if (!edge_divides(diff, edges[k].root, table.theory)) {
        per_row[ia].push_back({table.points[ia], edges[k]});
      }
    }
  }
  report.checks = table.size() * edges.size();
  for (auto& fails : per_row) {
    report.failures.insert(report.failures.end(), fails.begin(), fails.end());
  }
  return report;
}

GkmReport gkm_check(const IsotropicIndex& alpha, Theory theory) {
  const int n = alpha.rank();
  GkmReport report{n, theory, 0, {}};
  std::map<IsotropicIndex, LaurentPolynomial> row;
  for (const auto& beta : enumerate_isotropic(n)) row.emplace(beta, restrict_class(alpha, beta, theory).value);
  for (const auto& e : gkm_edges(n)) {
    ++report.checks;
    if (!edge_divides(row.at(e.beta1) - row.at(e.beta2), e.root, theory)) report.failures.push_back({alpha, e});
  }
  return report;
}

bool chern_consistency(const IsotropicIndex& alpha, const IsotropicIndex& beta) {
  return lowest_degree_form(restrict_k(alpha, beta).value) == restrict_h(alpha, beta).value;
}

bool componentwise_contained(const StrictPartition& lambda, const StrictPartition& mu) {
  if (lambda.length() > mu.length()) return false;
  for (int i = 1; i <= static_cast<int>(lambda.length()); ++i) {
    if (lambda.part(i) > mu.part(i)) return false;
  }
  return true;
}

// ---- verification suite --------------------------------------------------

bool VerifyReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.ok(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracle", "gkm", "chern", "positivity"};
  return names;
}

namespace {

constexpr std::size_t kListedFailures = 10;

std::string pair_text(const IsotropicIndex& a, const IsotropicIndex& b) {
  return "alpha=" + format_signed(a) + " beta=" + format_signed(b);
}

// Runs check(ia, ib) over all pairs in parallel. check returns "" on success,
// "skip" to skip, or a failure note.
SuiteResult pair_suite(const std::string& name, const std::vector<IsotropicIndex>& points,
                       const std::function<std::string(std::size_t, std::size_t)>& check) {
  const std::size_t side = points.size();
  std::vector<std::string> notes(side * side);
  const long long count = static_cast<long long>(notes.size());
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < count; ++k) {
    try {
      notes[k] = check(k / side, k % side);
    } catch (const std::exception& e) {
      notes[k] = std::string("exception: ") + e.what();
    }
  }
  SuiteResult r{name, 0, 0, 0, {}};
  for (std::size_t k = 0; k < notes.size(); ++k) {
    if (notes[k] == "skip") {
      ++r.skipped;
      continue;
    }
    ++r.checked;
    if (notes[k].empty()) continue;
    ++r.failed;
    if (r.failures.size() < kListedFailures) {
      r.failures.push_back(pair_text(points[k / side], points[k % side]) + ": " + notes[k]);
    }
  }
  return r;
}

SuiteResult gkm_suite(const RestrictionTable& table, const std::vector<GkmEdge>& edges) {
  const auto report = gkm_check(table, edges);
  SuiteResult r{"gkm-" + theory_name(table.theory), report.checks, report.failures.size(), 0, {}};
  for (const auto& f : report.failures) {
    if (r.failures.size() == kListedFailures) break;
    r.failures.push_back("alpha=" + format_signed(f.alpha) + " edge " + format_signed(f.edge.beta1) +
                         " -- " + format_signed(f.edge.beta2) + " root " + f.edge.root.to_string());
  }
  return r;
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& opts) {
  if (opts.n < 1 || opts.n > kMaxVerifyRank) {
    throw std::invalid_argument("verify: n must be in 1.." + std::to_string(kMaxVerifyRank));
  }
  std::set<std::string> suites = opts.suites;
  if (suites.empty() || suites.count("all")) suites = {suite_names().begin(), suite_names().end()};
  for (const auto& s : suites) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw std::invalid_argument("verify: unknown suite '" + s + "'");
    }
  }

  const int n = opts.n;
  VerifyReport report{n, opts.corrupt, {}};
  auto table_k = restriction_table(n, Theory::K);
  auto table_h = restriction_table(n, Theory::H);
  if (opts.corrupt) {
    const auto last = table_k.size() - 1;
    table_k.at(last, last) += LaurentPolynomial::constant(n, 1);
    table_h.at(last, last) += LaurentPolynomial::constant(n, 1);
  }
  const auto& points = table_k.points;

  // Fixed order regardless of how the suites were named.
  for (const auto& name : suite_names()) {
    if (!suites.count(name)) continue;
    if (name == "oracle") {
      report.results.push_back(pair_suite("oracle-union", points, [&](std::size_t ia, std::size_t ib) {
        if (union_component_count(points[ia], points[ib]) > kMaxUnionComponents) return std::string("skip");
        return kclass_union_oracle(points[ia], points[ib]) == table_k.at(ia, ib) ? std::string()
                                                                                 : std::string("mismatch");
      }));
      const WeylGroup group(n);
      report.results.push_back(pair_suite("oracle-subword", points, [&](std::size_t ia, std::size_t ib) {
        return billey_restrict_h(points[ia], points[ib], group) == table_h.at(ia, ib) ? std::string()
                                                                                      : std::string("mismatch");
      }));
    } else if (name == "gkm") {
      const auto edges = gkm_edges(n);
      report.results.push_back(gkm_suite(table_h, edges));
      report.results.push_back(gkm_suite(table_k, edges));
    } else if (name == "chern") {
      report.results.push_back(pair_suite("chern", points, [&](std::size_t ia, std::size_t ib) {
        return lowest_degree_form(table_k.at(ia, ib)) == table_h.at(ia, ib) ? std::string()
                                                                            : std::string("mismatch");
      }));
    } else if (name == "positivity") {
      report.results.push_back(pair_suite("positivity", points, [&](std::size_t ia, std::size_t ib) {
        positivity_certificate(points[ia], points[ib], Theory::K);
        positivity_certificate(points[ia], points[ib], Theory::H);
        return std::string();
      }));
    }
  }
  return report;
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& s : r.results) {
    suites.push_back({{"name", s.name},
                      {"checked", s.checked},
                      {"failed", s.failed},
                      {"skipped", s.skipped},
                      {"ok", s.ok()},
                      {"failures", s.failures}});
  }
  return {{"n", r.n}, {"corrupt", r.corrupt}, {"ok", r.ok()}, {"suites", suites}};
}

std::string summary(const VerifyReport& r) {
  std::ostringstream os;
  os << "verify n=" << r.n << (r.corrupt ? " (corrupted table)" : "") << '\n';
  std::size_t bad = 0;
  for (const auto& s : r.results) {
    os << "  " << s.name << std::string(s.name.size() < 16 ? 16 - s.name.size() : 1, ' ') << (s.ok() ? "PASS" : "FAIL")
       << "  checked " << s.checked << ", failed " << s.failed;
    if (s.skipped) os << ", skipped " << s.skipped;
    os << '\n';
    for (const auto& f : s.failures) os << "    " << f << '\n';
    if (!s.ok()) ++bad;
  }
  if (bad == 0) {
    os << "all suites passed\n";
  } else {
    os << bad << " suite(s) failed\n";
  }
  return os.str();
}

}  // namespace lgr
