#include "lgr/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lgr/indexcomb.hpp"

namespace lgr {

namespace {

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("laurent: coefficient overflow");
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("laurent: coefficient overflow");
  return r;
}

int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(std::size_t nvars, Coefficient c) {
  LaurentPolynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(Exponents exps, Coefficient c) {
  LaurentPolynomial p(exps.size());
  p.add_term(exps, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t nvars, int i) {
  if (i < 1 || static_cast<std::size_t>(i) > nvars) throw std::out_of_range("laurent: variable index");
  Exponents e(nvars, 0);
  e[i - 1] = 1;
  return monomial(std::move(e));
}

LaurentPolynomial LaurentPolynomial::linear_form(const std::vector<int>& coeffs) {
  LaurentPolynomial p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

Coefficient LaurentPolynomial::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

bool LaurentPolynomial::is_polynomial() const {
  for (const auto& [e, c] : terms_) {
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) return false;
  }
  return true;
}

bool LaurentPolynomial::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& kv) { return total_degree(kv.first) == d; });
}

void LaurentPolynomial::add_term(const Exponents& e, Coefficient c) {
  if (e.size() != nvars_) throw std::invalid_argument("laurent: exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPolynomial::check_compatible(const LaurentPolynomial& o) const {
  if (nvars_ != o.nvars_) {
    throw std::invalid_argument("laurent: variable counts differ (" + std::to_string(nvars_) +
                                " vs " + std::to_string(o.nvars_) + ")");
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check_compatible(b);
  LaurentPolynomial out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, checked_mul(ca, cb));
    }
  }
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(Coefficient c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef = checked_mul(coef, c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const { return *this * Coefficient{-1}; }

LaurentPolynomial negate(const LaurentPolynomial& p) { return -p; }

LaurentPolynomial scalar_mul(const LaurentPolynomial& p, Coefficient c) { return p * c; }

LaurentPolynomial pow(const LaurentPolynomial& p, unsigned k) {
  LaurentPolynomial out = LaurentPolynomial::constant(p.nvars(), 1);
  for (unsigned i = 0; i < k; ++i) out *= p;
  return out;
}

LaurentPolynomial bar_var_k(int label, int n) {
  if (label < 1 || label > 2 * n) throw std::out_of_range("bar_var_k: label out of range");
  Exponents e(n, 0);
  if (label <= n) {
    e[label - 1] = 1;
  } else {
    e[bar(label, n) - 1] = -1;
  }
  return LaurentPolynomial::monomial(std::move(e));
}

LaurentPolynomial bar_var_h(int label, int n) {
  if (label < 1 || label > 2 * n) throw std::out_of_range("bar_var_h: label out of range");
  std::vector<int> coeffs(n, 0);
  if (label <= n) {
    coeffs[label - 1] = 1;
  } else {
    coeffs[bar(label, n) - 1] = -1;
  }
  return LaurentPolynomial::linear_form(coeffs);
}

namespace {

// Degree-d component of sum c_e exp(-e.u), or zero.
LaurentPolynomial chern_component(const LaurentPolynomial& p,
                                  std::vector<LaurentPolynomial>& powers, int d) {
  const std::size_t n = p.nvars();
  LaurentPolynomial acc(n);
  std::size_t k = 0;
  for (const auto& [e, c] : p.terms()) {
    if (d > 0) powers[k] *= LaurentPolynomial::linear_form(e);
    acc += powers[k] * c;
    ++k;
  }
  if (acc.is_zero()) return acc;
  Coefficient factorial = 1;
  for (int i = 2; i <= d; ++i) factorial = checked_mul(factorial, i);
  LaurentPolynomial out(n);
  for (const auto& [e, c] : acc.terms()) {
    if (c % factorial != 0) {
      throw std::domain_error("lowest_degree_form: non-integral lowest component");
    }
    out.add_term(e, (d % 2 == 0 ? 1 : -1) * (c / factorial));
  }
  return out;
}

}  // namespace

int lowest_order(const LaurentPolynomial& p) {
  if (p.is_zero()) return -1;
  std::vector<LaurentPolynomial> powers(p.term_count(), LaurentPolynomial::constant(p.nvars(), 1));
  // Distinct exponents give linearly independent exponentials, so some
  // component of degree < term_count() is nonzero.
  for (int d = 0; d < static_cast<int>(p.term_count()); ++d) {
    if (!chern_component(p, powers, d).is_zero()) return d;
  }
  throw std::logic_error("lowest_degree_form: no nonzero component found");
}

LaurentPolynomial lowest_degree_form(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  std::vector<LaurentPolynomial> powers(p.term_count(), LaurentPolynomial::constant(p.nvars(), 1));
  for (int d = 0; d < static_cast<int>(p.term_count()); ++d) {
    auto comp = chern_component(p, powers, d);
    if (!comp.is_zero()) return comp;
  }
  throw std::logic_error("lowest_degree_form: no nonzero component found");
}

namespace {

struct RootShape {
  int i = -1;
  int ci = 0;
  int j = -1;
  int cj = 0;
};

RootShape classify_root(const std::vector<int>& theta) {
  RootShape r;
  int nonzero = 0;
  for (std::size_t k = 0; k < theta.size(); ++k) {
    if (theta[k] == 0) continue;
    ++nonzero;
    if (r.i < 0) {
      r.i = static_cast<int>(k);
      r.ci = theta[k];
    } else {
      r.j = static_cast<int>(k);
      r.cj = theta[k];
    }
  }
  const bool long_root = nonzero == 1 && (r.ci == 2 || r.ci == -2);
  const bool short_root = nonzero == 2 && (r.ci == 1 || r.ci == -1) && (r.cj == 1 || r.cj == -1);
  if (nonzero == 0) throw std::invalid_argument("root: theta is zero");
  if (!long_root && !short_root) throw std::invalid_argument("root: not a type C root");
  return r;
}

}  // namespace

void validate_root(const std::vector<int>& theta) { classify_root(theta); }

bool divisible_by_root_h(const LaurentPolynomial& p, const std::vector<int>& theta) {
  if (theta.size() != p.nvars()) throw std::invalid_argument("root: length mismatch");
  const RootShape r = classify_root(theta);
  if (!p.is_polynomial()) throw std::invalid_argument("divisible_by_root_h: not a polynomial");
  LaurentPolynomial reduced(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (r.j < 0) {
      // t_i = 0
      if (e[r.i] == 0) reduced.add_term(e, c);
      continue;
    }
    // ci t_i + cj t_j = 0  =>  t_i = s t_j
    const int s = -r.ci * r.cj;
    Exponents f = e;
    f[r.j] += f[r.i];
    const int power = f[r.i];
    f[r.i] = 0;
    reduced.add_term(f, (s < 0 && power % 2 != 0) ? -c : c);
  }
  return reduced.is_zero();
}

bool divisible_by_k_root(const LaurentPolynomial& p, const std::vector<int>& theta) {
  if (theta.size() != p.nvars()) throw std::invalid_argument("root: length mismatch");
  const RootShape r = classify_root(theta);
  LaurentPolynomial reduced(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    if (r.j < 0) {
      // t_i^2 = 1
      f[r.i] = ((f[r.i] % 2) + 2) % 2;
    } else {
      // t_i^ci t_j^cj = 1  =>  t_i = t_j^(-cj ci)
      f[r.j] += -r.cj * r.ci * f[r.i];
      f[r.i] = 0;
    }
    reduced.add_term(f, c);
  }
  return reduced.is_zero();
}

nlohmann::json to_json(const LaurentPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"e", e}, {"c", c}});
  return {{"n", p.nvars()}, {"terms", terms}};
}

LaurentPolynomial laurent_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms") || !j["terms"].is_array()) {
    throw std::invalid_argument("laurent json: expected {\"n\":..., \"terms\":[...]}");
  }
  const auto n = j["n"].get<std::size_t>();
  LaurentPolynomial p(n);
  for (const auto& t : j["terms"]) {
    const auto e = t.at("e").get<Exponents>();
    const auto c = t.at("c").get<Coefficient>();
    if (c == 0) throw std::invalid_argument("laurent json: zero coefficient stored");
    if (p.coefficient(e) != 0) throw std::invalid_argument("laurent json: duplicate exponent");
    p.add_term(e, c);
  }
  return p;
}

namespace {

std::string factor_product(const std::vector<std::pair<int, int>>& factors) {
  std::string s;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) s += '*';
    s += 't' + std::to_string(factors[k].first);
    if (factors[k].second != 1) s += '^' + std::to_string(factors[k].second);
  }
  return s;
}

std::string format_monomial(const Exponents& e, Coefficient c) {
  std::vector<std::pair<int, int>> num;
  std::vector<std::pair<int, int>> den;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > 0) num.emplace_back(static_cast<int>(i) + 1, e[i]);
    if (e[i] < 0) den.emplace_back(static_cast<int>(i) + 1, -e[i]);
  }
  const Coefficient mag = c < 0 ? -c : c;
  std::string s;
  if (num.empty() && den.empty()) return std::to_string(mag);
  if (num.empty()) {
    s = std::to_string(mag);
  } else {
    s = (mag == 1 ? "" : std::to_string(mag) + "*") + factor_product(num);
  }
  if (!den.empty()) {
    const bool group = den.size() > 1 || den[0].second != 1;
    s += '/';
    s += group && den.size() > 1 ? "(" + factor_product(den) + ")" : factor_product(den);
  }
  return s;
}

}  // namespace

std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponents, Coefficient>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = total_degree(a.first);
    const int db = total_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << format_monomial(e, c);
    first = false;
  }
  return os.str();
}

}  // namespace lgr
