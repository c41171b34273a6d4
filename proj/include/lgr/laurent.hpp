#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace lgr {

using Exponents = std::vector<int>;
using Coefficient = std::int64_t;

// Sparse integer Laurent polynomial in t_1..t_n. Zero coefficients are never
// stored; terms are kept in lexicographic exponent order. Arithmetic is exact:
// int64 overflow throws std::overflow_error.
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static LaurentPolynomial constant(std::size_t nvars, Coefficient c);
  static LaurentPolynomial monomial(Exponents exps, Coefficient c = 1);
  // t_i, 1-based.
  static LaurentPolynomial variable(std::size_t nvars, int i);
  // Sum of coeffs[i] * t_{i+1}.
  static LaurentPolynomial linear_form(const std::vector<int>& coeffs);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Coefficient>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Coefficient coefficient(const Exponents& e) const;

  // All exponents nonnegative.
  bool is_polynomial() const;
  // Every term has total degree d; the zero polynomial is homogeneous of any degree.
  bool is_homogeneous(int d) const;

  void add_term(const Exponents& e, Coefficient c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(Coefficient c);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, Coefficient c) { return a *= c; }
  friend LaurentPolynomial operator*(Coefficient c, LaurentPolynomial a) { return a *= c; }
  LaurentPolynomial operator-() const;

  bool operator==(const LaurentPolynomial& o) const = default;

 private:
  void check_compatible(const LaurentPolynomial& o) const;

  std::size_t nvars_;
  std::map<Exponents, Coefficient> terms_;
};

LaurentPolynomial negate(const LaurentPolynomial& p);
LaurentPolynomial scalar_mul(const LaurentPolynomial& p, Coefficient c);
LaurentPolynomial pow(const LaurentPolynomial& p, unsigned k);

// t_label in K-theory: t_k for k <= n, t_{bar k}^{-1} otherwise.
LaurentPolynomial bar_var_k(int label, int n);
// t_label in cohomology: t_k for k <= n, -t_{bar k} otherwise.
LaurentPolynomial bar_var_h(int label, int n);

// Lowest nonvanishing homogeneous component of P under t_i -> exp(-t_i).
LaurentPolynomial lowest_degree_form(const LaurentPolynomial& p);
// Degree of that component; -1 for the zero polynomial.
int lowest_order(const LaurentPolynomial& p);

// A root of type C_n as a coefficient vector: +-e_i +- e_j (i != j) or +-2 e_i.
void validate_root(const std::vector<int>& theta);

// P vanishes on the hyperplane theta = 0 (P must be a polynomial).
bool divisible_by_root_h(const LaurentPolynomial& p, const std::vector<int>& theta);
// P vanishes under e^theta = 1, i.e. P is divisible by 1 - t^theta.
bool divisible_by_k_root(const LaurentPolynomial& p, const std::vector<int>& theta);

// {"n":3,"terms":[{"e":[-2,0,0],"c":1},...]}, exponents sorted lexicographically.
nlohmann::json to_json(const LaurentPolynomial& p);
LaurentPolynomial laurent_from_json(const nlohmann::json& j);

// e.g. "t3/t2 - 1/(t1*t2) + 2"
std::string to_string(const LaurentPolynomial& p);

}  // namespace lgr
