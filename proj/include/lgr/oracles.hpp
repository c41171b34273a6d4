#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "lgr/indexcomb.hpp"
#include "lgr/laurent.hpp"
#include "lgr/restriction.hpp"

namespace lgr {

// Element of the type C_n Weyl group, stored as a permutation of the labels
// 1..2n that commutes with bar.
class SignedPermutation {
 public:
  static SignedPermutation identity(int n);
  // s_i swaps i and i+1 (and their bars) for i < n; s_n swaps n and n+1.
  static SignedPermutation simple(int i, int n);
  // The reflection in a positive root.
  static SignedPermutation reflection(const PositiveRoot& root, int n);
  // (alpha(1), ..., alpha(n), bar alpha(n), ..., bar alpha(1)).
  static SignedPermutation lift(const IsotropicIndex& alpha);
  // From signed images of 1..n; -k stands for bar(k).
  static SignedPermutation from_signed(const std::vector<int>& images);

  int rank() const { return n_; }
  int operator()(int label) const { return map_[label]; }
  // Images of 1..n with bar(k) written as -k.
  std::vector<int> signed_images() const;
  // Image of the n-subset alpha, as a point of I_n.
  IsotropicIndex act(const IsotropicIndex& alpha) const;

  // (a * b)(k) = a(b(k)).
  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
  auto operator<=>(const SignedPermutation&) const = default;

 private:
  SignedPermutation(int n, std::vector<int> map) : n_(n), map_(std::move(map)) {}
  int n_ = 0;
  std::vector<int> map_;  // map_[0] unused
};

// The whole group with one reduced word per element, found by breadth-first
// search from the identity using w -> w * s_i.
class WeylGroup {
 public:
  explicit WeylGroup(int n);

  int rank() const { return n_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<int>& reduced_word(const SignedPermutation& w) const;
  int length(const SignedPermutation& w) const;

 private:
  int n_;
  std::map<SignedPermutation, std::vector<int>> words_;
};

// Guard on the number of components for exact inclusion-exclusion.
constexpr std::size_t kMaxUnionComponents = 20;

// Class of the union of the coordinate subspaces W_P, P in SSYT, by
// inclusion-exclusion over component subsets. Throws std::length_error when
// there are more than kMaxUnionComponents components.
LaurentPolynomial kclass_union_oracle(const IsotropicIndex& alpha, const IsotropicIndex& beta);
std::size_t union_component_count(const IsotropicIndex& alpha, const IsotropicIndex& beta);

enum class SubwordConvention {
  // Plain subword sum with roots t_p - t_q.
  Raw,
  // Raw times (-1)^{l(alpha)}: roots positive for the opposite Borel.
  BMinus,
};
constexpr SubwordConvention kFrozenSubwordConvention = SubwordConvention::BMinus;
std::string convention_name(SubwordConvention c);

LaurentPolynomial billey_restrict_h(const IsotropicIndex& alpha, const IsotropicIndex& beta,
                                    const WeylGroup& group,
                                    SubwordConvention convention = kFrozenSubwordConvention);
LaurentPolynomial billey_restrict_h(const IsotropicIndex& alpha, const IsotropicIndex& beta,
                                    SubwordConvention convention = kFrozenSubwordConvention);

struct CalibrationResult {
  IsotropicIndex alpha;
  IsotropicIndex beta;
  std::map<SubwordConvention, bool> consistent;
  SubwordConvention frozen = kFrozenSubwordConvention;
};
// Compares every convention against restrict_h on alpha={1,3,5}, beta={3,5,6}.
CalibrationResult calibrate_subword();

struct GkmEdge {
  IsotropicIndex beta1;
  IsotropicIndex beta2;
  PositiveRoot root;

  auto operator<=>(const GkmEdge& o) const {
    if (auto c = beta1 <=> o.beta1; c != 0) return c;
    if (auto c = beta2 <=> o.beta2; c != 0) return c;
    return std::tie(root.kind, root.a, root.b) <=> std::tie(o.root.kind, o.root.a, o.root.b);
  }
  bool operator==(const GkmEdge&) const = default;
};

// Sorted, with beta1 < beta2.
std::vector<GkmEdge> gkm_edges(int n);

struct GkmFailure {
  IsotropicIndex alpha;
  GkmEdge edge;
};

struct GkmReport {
  int n = 0;
  Theory theory = Theory::H;
  std::size_t checks = 0;
  std::vector<GkmFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Checks every row of the table on every edge.
GkmReport gkm_check(const RestrictionTable& table, const std::vector<GkmEdge>& edges);
GkmReport gkm_check(const IsotropicIndex& alpha, Theory theory);

bool chern_consistency(const IsotropicIndex& alpha, const IsotropicIndex& beta);

// lambda_i <= mu_i for all i.
bool componentwise_contained(const StrictPartition& lambda, const StrictPartition& mu);

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;  // first few, in table order

  bool ok() const { return failed == 0; }
};

struct VerifyOptions {
  int n = 2;
  // Any of oracle, gkm, chern, positivity; empty means all.
  std::set<std::string> suites;
  // Perturb one table entry by +1 before checking.
  bool corrupt = false;
};

struct VerifyReport {
  int n = 0;
  bool corrupt = false;
  std::vector<SuiteResult> results;

  bool ok() const;
};

constexpr int kMaxVerifyRank = 4;
const std::vector<std::string>& suite_names();

VerifyReport run_verification(const VerifyOptions& opts);
nlohmann::json to_json(const VerifyReport& r);
std::string summary(const VerifyReport& r);

}  // namespace lgr
