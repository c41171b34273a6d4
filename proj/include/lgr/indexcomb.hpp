#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lgr {

// bar(k) = 2n + 1 - k on the label set {1..2n}.
int bar(int k, int n);

// A partition, normalized so that trailing zeros are dropped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const;
  // 1-based; parts beyond length() are 0.
  int part(int i) const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Strictly decreasing positive parts.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const;
  int part(int i) const;
  Partition as_partition() const { return Partition(parts_); }

  auto operator<=>(const StrictPartition&) const = default;

 private:
  std::vector<int> parts_;
};

// An element of I_n: an n-subset of {1..2n} holding exactly one of k, bar(k)
// for each k. Values are stored sorted.
class IsotropicIndex {
 public:
  IsotropicIndex(int n, std::vector<int> values);

  int rank() const { return n_; }
  const std::vector<int>& values() const { return values_; }
  // 1-based, matching alpha(1) < ... < alpha(n).
  int nth(int i) const;
  bool contains(int label) const;

  auto operator<=>(const IsotropicIndex&) const = default;

 private:
  int n_;
  std::vector<int> values_;
};

std::vector<IsotropicIndex> enumerate_isotropic(int n);
IsotropicIndex identity_index(int n);

IsotropicIndex complement(const IsotropicIndex& alpha);

Partition pi(const IsotropicIndex& alpha);
StrictPartition rho(const Partition& lambda);
StrictPartition sigma(const IsotropicIndex& alpha);
IsotropicIndex sigma_inverse(const StrictPartition& lambda, int n);
int length(const IsotropicIndex& alpha);

Partition transpose(const Partition& lambda);
bool is_symmetric(const Partition& lambda);
bool is_strict(const std::vector<int>& parts);

// pi(beta) via eta_j = #{i : beta'(i) < beta(n+1-j)}.
Partition eta_of(const IsotropicIndex& beta);

// All strict partitions with parts <= n (the set M_n).
std::vector<StrictPartition> strict_partitions_bounded(int n);

// "3,-2,-1" with -k meaning bar(k); plain labels in {1..2n} are also accepted.
IsotropicIndex parse_isotropic(std::string_view text, int n);
std::string format_signed(const IsotropicIndex& alpha);
// "[3,2]" or "3,2"; "[]" and "" are the empty partition.
std::vector<int> parse_parts(std::string_view text);
std::string format_parts(const std::vector<int>& parts);

}  // namespace lgr
