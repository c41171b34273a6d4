#include "lgr/restriction.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

namespace lgr {

std::string theory_name(Theory t) { return t == Theory::K ? "K" : "H"; }

Theory parse_theory(const std::string& s) {
  if (s == "K" || s == "k") return Theory::K;
  if (s == "H" || s == "h") return Theory::H;
  throw std::invalid_argument("theory must be K or H, got '" + s + "'");
}

namespace {

void check_rank(const IsotropicIndex& alpha, const IsotropicIndex& beta) {
  if (alpha.rank() != beta.rank()) {
    throw std::invalid_argument("restriction: rank mismatch (" + std::to_string(alpha.rank()) +
                                " vs " + std::to_string(beta.rank()) + ")");
  }
}

}  // namespace

LaurentPolynomial entry_factor(const IsotropicIndex& beta, const EntryContext& e, Theory theory) {
  const int n = beta.rank();
  const IsotropicIndex prime = complement(beta);
  const int a = prime.nth(e.value);
  const int b = prime.nth(z_value(e));
  if (theory == Theory::K) {
    // 1/(t_a t_b) - 1, using 1/t_k = t_{bar k}.
    return bar_var_k(bar(a, n), n) * bar_var_k(bar(b, n), n) - LaurentPolynomial::constant(n, 1);
  }
  return -(bar_var_h(a, n) + bar_var_h(b, n));
}

RestrictionResult restrict_class(const IsotropicIndex& alpha, const IsotropicIndex& beta,
                                 Theory theory) {
  check_rank(alpha, beta);
  const int n = alpha.rank();
  const StrictPartition lambda = sigma(alpha);
  const StrictPartition mu = sigma(beta);
  const auto tableaux = theory == Theory::K ? enumerate_ssvt(lambda, mu) : enumerate_ssyt(lambda, mu);

  LaurentPolynomial sum(n);
  for (const auto& s : tableaux) {
    LaurentPolynomial term = LaurentPolynomial::constant(n, 1);
    for (const auto& e : s.entries()) term *= entry_factor(beta, e, theory);
    sum += term;
  }
  if (theory == Theory::K && lambda.size() % 2 != 0) sum = -sum;
  return {alpha, beta, theory, std::move(sum), tableaux.size()};
}

RestrictionResult restrict_k(const IsotropicIndex& alpha, const IsotropicIndex& beta) {
  return restrict_class(alpha, beta, Theory::K);
}

RestrictionResult restrict_h(const IsotropicIndex& alpha, const IsotropicIndex& beta) {
  return restrict_class(alpha, beta, Theory::H);
}

std::vector<int> PositiveRoot::linear_form(int n) const {
  std::vector<int> f(n, 0);
  switch (kind) {
    case Kind::Sum:
      f[a - 1] = -1;
      f[b - 1] = -1;
      break;
    case Kind::Difference:
      f[a - 1] = -1;
      f[b - 1] = 1;
      break;
    case Kind::Double:
      f[a - 1] = -2;
      break;
  }
  return f;
}

std::vector<int> PositiveRoot::standard_form(int n) const {
  auto f = linear_form(n);
  for (int& c : f) c = -c;
  return f;
}

std::string PositiveRoot::to_string() const {
  const std::string ta = "t" + std::to_string(a);
  const std::string tb = "t" + std::to_string(b);
  switch (kind) {
    case Kind::Sum: return "-" + ta + "-" + tb;
    case Kind::Difference: return "-" + ta + "+" + tb;
    case Kind::Double: return "-2" + ta;
  }
  return {};
}

std::vector<PositiveRoot> positive_roots_bminus(int n) {
  std::vector<PositiveRoot> out;
  for (int a = 1; a <= n; ++a) {
    out.push_back({PositiveRoot::Kind::Double, a, 0});
    for (int b = a + 1; b <= n; ++b) {
      out.push_back({PositiveRoot::Kind::Sum, a, b});
      out.push_back({PositiveRoot::Kind::Difference, a, b});
    }
  }
  return out;
}

std::optional<PositiveRoot> certify_entry(const IsotropicIndex& beta, int x, int z) {
  const int n = beta.rank();
  if (x < 1 || z < 1 || x > n || z > n) return std::nullopt;
  const IsotropicIndex prime = complement(beta);
  const int a = prime.nth(x);
  const int b = prime.nth(z);
  if (!(a <= b && a < bar(b, n) && a <= n)) return std::nullopt;

  PositiveRoot root;
  if (a == b) {
    root = {PositiveRoot::Kind::Double, a, 0};
  } else if (b <= n) {
    root = {PositiveRoot::Kind::Sum, a, b};
  } else {
    root = {PositiveRoot::Kind::Difference, a, bar(b, n)};
  }
  const auto roots = positive_roots_bminus(n);
  if (std::find(roots.begin(), roots.end(), root) == roots.end()) return std::nullopt;

  // The entry sits wherever z - x says; a diagonal placement is enough.
  const EntryContext e{x, 1, 1 + z - x};
  const auto theta = root.linear_form(n);
  if (entry_factor(beta, e, Theory::H) != LaurentPolynomial::linear_form(theta)) return std::nullopt;
  const auto k_factor = entry_factor(beta, e, Theory::K);
  if (k_factor != LaurentPolynomial::monomial(theta) - LaurentPolynomial::constant(n, 1)) {
    return std::nullopt;
  }
  return root;
}

std::vector<std::vector<PositiveRoot>> positivity_certificate(const IsotropicIndex& alpha,
                                                              const IsotropicIndex& beta,
                                                              Theory theory) {
  check_rank(alpha, beta);
  const StrictPartition lambda = sigma(alpha);
  const StrictPartition mu = sigma(beta);
  const auto tableaux = theory == Theory::K ? enumerate_ssvt(lambda, mu) : enumerate_ssyt(lambda, mu);
  std::vector<std::vector<PositiveRoot>> out;
  out.reserve(tableaux.size());
  for (const auto& s : tableaux) {
    auto& roots = out.emplace_back();
    for (const auto& e : s.entries()) {
      const auto root = certify_entry(beta, e.value, z_value(e));
      if (!root) {
        throw std::logic_error("positivity_certificate: factor is not a positive root for alpha=" +
                               format_signed(alpha) + " beta=" + format_signed(beta));
      }
      roots.push_back(*root);
    }
  }
  return out;
}

std::size_t RestrictionTable::index_of(const IsotropicIndex& p) const {
  const auto it = std::lower_bound(points.begin(), points.end(), p,
                                   [](const auto& x, const auto& y) { return x.values() < y.values(); });
  if (it == points.end() || *it != p) throw std::out_of_range("table: point not found");
  return static_cast<std::size_t>(it - points.begin());
}

namespace {

RestrictionTable empty_table(int n, Theory theory) {
  if (n < 1 || n > kMaxTableRank) {
    throw std::invalid_argument("table: n must be in 1.." + std::to_string(kMaxTableRank));
  }
  RestrictionTable t;
  t.n = n;
  t.theory = theory;
  t.points = enumerate_isotropic(n);
  t.values.assign(t.points.size() * t.points.size(), LaurentPolynomial(n));
  t.term_counts.assign(t.values.size(), 0);
  return t;
}

}  // namespace

RestrictionTable restriction_table(int n, Theory theory) {
  RestrictionTable t = empty_table(n, theory);
  const long long count = static_cast<long long>(t.values.size());
  const std::size_t side = t.points.size();
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < count; ++k) {
    try {
      auto r = restrict_class(t.points[k / side], t.points[k % side], theory);
      t.values[k] = std::move(r.value);
      t.term_counts[k] = r.term_count;
    } catch (...) {
#pragma omp critical(lgr_table_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return t;
}

RestrictionTable restriction_table_serial(int n, Theory theory) {
  RestrictionTable t = empty_table(n, theory);
  const std::size_t side = t.points.size();
  for (std::size_t k = 0; k < t.values.size(); ++k) {
    auto r = restrict_class(t.points[k / side], t.points[k % side], theory);
    t.values[k] = std::move(r.value);
    t.term_counts[k] = r.term_count;
  }
  return t;
}

}  // namespace lgr
