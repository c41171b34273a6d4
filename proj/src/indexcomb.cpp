#include "lgr/indexcomb.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lgr {

int bar(int k, int n) {
  if (n < 1 || k < 1 || k > 2 * n) {
    throw std::out_of_range("bar: label " + std::to_string(k) + " outside {1.." +
                            std::to_string(2 * n) + "}");
  }
  return 2 * n + 1 - k;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition: parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::part(int i) const {
  if (i < 1) throw std::out_of_range("partition: part index is 1-based");
  return static_cast<std::size_t>(i) <= parts_.size() ? parts_[i - 1] : 0;
}

bool is_strict(const std::vector<int>& parts) {
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (parts[i] == parts[i + 1] && parts[i] != 0) return false;
    if (parts[i] < parts[i + 1]) return false;
  }
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 0; });
}

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] >= parts_[i - 1])) {
      throw std::invalid_argument("strict partition: parts must be strictly decreasing, got " +
                                  format_parts(parts_));
    }
  }
}

int StrictPartition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int StrictPartition::part(int i) const {
  if (i < 1) throw std::out_of_range("strict partition: part index is 1-based");
  return static_cast<std::size_t>(i) <= parts_.size() ? parts_[i - 1] : 0;
}

IsotropicIndex::IsotropicIndex(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
  if (n < 1) throw std::invalid_argument("isotropic index: rank must be >= 1");
  std::sort(values_.begin(), values_.end());
  if (values_.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("isotropic index: expected " + std::to_string(n) + " values");
  }
  std::vector<bool> seen(2 * n + 1, false);
  for (int v : values_) {
    if (v < 1 || v > 2 * n) {
      throw std::invalid_argument("isotropic index: label " + std::to_string(v) + " out of range");
    }
    if (seen[v] || seen[bar(v, n)]) {
      throw std::invalid_argument("isotropic index: must hold exactly one of k, bar(k)");
    }
    seen[v] = true;
  }
}

int IsotropicIndex::nth(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("isotropic index: position is 1-based");
  return values_[i - 1];
}

bool IsotropicIndex::contains(int label) const {
  return std::binary_search(values_.begin(), values_.end(), label);
}

std::vector<IsotropicIndex> enumerate_isotropic(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_isotropic: n must be >= 1");
  if (n > 20) throw std::invalid_argument("enumerate_isotropic: n too large");
  std::vector<IsotropicIndex> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> vals;
    for (int k = 1; k <= n; ++k) vals.push_back((mask >> (k - 1)) & 1u ? bar(k, n) : k);
    out.emplace_back(n, std::move(vals));
  }
  std::sort(out.begin(), out.end(),
            [](const IsotropicIndex& a, const IsotropicIndex& b) { return a.values() < b.values(); });
  return out;
}

IsotropicIndex identity_index(int n) {
  std::vector<int> vals(n);
  for (int k = 1; k <= n; ++k) vals[k - 1] = k;
  return IsotropicIndex(n, std::move(vals));
}

IsotropicIndex complement(const IsotropicIndex& alpha) {
  const int n = alpha.rank();
  std::vector<int> vals;
  for (int k = 1; k <= 2 * n; ++k) {
    if (!alpha.contains(k)) vals.push_back(k);
  }
  return IsotropicIndex(n, std::move(vals));
}

Partition pi(const IsotropicIndex& alpha) {
  const int n = alpha.rank();
  std::vector<int> parts(n);
  for (int i = 0; i < n; ++i) parts[i] = alpha.nth(n - i) - (n - i);
  return Partition(std::move(parts));
}

StrictPartition rho(const Partition& lambda) {
  std::vector<int> parts;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    const int v = lambda.parts()[i] - static_cast<int>(i);
    if (v < 0) break;
    parts.push_back(v);
  }
  return StrictPartition(std::move(parts));
}

StrictPartition sigma(const IsotropicIndex& alpha) { return rho(pi(alpha)); }

IsotropicIndex sigma_inverse(const StrictPartition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("sigma_inverse: n must be >= 1");
  if (lambda.part(1) > n) {
    throw std::invalid_argument("sigma_inverse: " + format_parts(lambda.parts()) + " is not in M_" +
                                std::to_string(n));
  }
  // Unfold the shifted diagram into the symmetric Young diagram eta.
  std::vector<int> eta(n, 0);
  for (int r = 1; r <= static_cast<int>(lambda.length()); ++r) {
    for (int c = r; c < r + lambda.part(r); ++c) {
      ++eta[r - 1];
      if (c != r) ++eta[c - 1];
    }
  }
  std::vector<int> vals(n);
  for (int k = 1; k <= n; ++k) vals[k - 1] = eta[n - k] + k;
  IsotropicIndex alpha(n, std::move(vals));
  if (sigma(alpha) != lambda) throw std::logic_error("sigma_inverse: round trip failed");
  return alpha;
}

int length(const IsotropicIndex& alpha) { return sigma(alpha).size(); }

Partition transpose(const Partition& lambda) {
  std::vector<int> t;
  for (int j = 1; j <= lambda.part(1); ++j) {
    int count = 0;
    for (int p : lambda.parts()) count += p >= j ? 1 : 0;
    t.push_back(count);
  }
  return Partition(std::move(t));
}

bool is_symmetric(const Partition& lambda) { return transpose(lambda) == lambda; }

Partition eta_of(const IsotropicIndex& beta) {
  const int n = beta.rank();
  const IsotropicIndex prime = complement(beta);
  std::vector<int> eta(n);
  for (int j = 1; j <= n; ++j) {
    int count = 0;
    for (int i = 1; i <= n; ++i) count += prime.nth(i) < beta.nth(n + 1 - j) ? 1 : 0;
    eta[j - 1] = count;
  }
  return Partition(std::move(eta));
}

std::vector<StrictPartition> strict_partitions_bounded(int n) {
  std::vector<StrictPartition> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> parts;
    for (int k = n; k >= 1; --k) {
      if ((mask >> (k - 1)) & 1u) parts.push_back(k);
    }
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch == '[' || ch == ']' || ch == '{' || ch == '}' || ch == '(' || ch == ')' || ch == ' ') {
      continue;
    }
    cleaned.push_back(ch);
  }
  std::vector<int> out;
  if (cleaned.empty()) return out;
  std::size_t pos = 0;
  while (pos <= cleaned.size()) {
    const std::size_t comma = std::min(cleaned.find(',', pos), cleaned.size());
    const std::string_view tok(cleaned.data() + pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("cannot parse integer list '" + std::string(text) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

IsotropicIndex parse_isotropic(std::string_view text, int n) {
  std::vector<int> labels;
  for (int v : parse_int_list(text)) {
    if (v < 0) {
      if (-v > n) throw std::invalid_argument("bar(" + std::to_string(-v) + ") out of range");
      labels.push_back(bar(-v, n));
    } else {
      labels.push_back(v);
    }
  }
  return IsotropicIndex(n, std::move(labels));
}

std::string format_signed(const IsotropicIndex& alpha) {
  std::ostringstream os;
  const int n = alpha.rank();
  for (int i = 1; i <= n; ++i) {
    if (i > 1) os << ',';
    const int v = alpha.nth(i);
    if (v <= n) {
      os << v;
    } else {
      os << '-' << bar(v, n);
    }
  }
  return os.str();
}

std::vector<int> parse_parts(std::string_view text) { return parse_int_list(text); }

std::string format_parts(const std::vector<int>& parts) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ']';
  return os.str();
}

}  // namespace lgr
