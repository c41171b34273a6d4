#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgr/indexcomb.hpp"
#include "lgr/laurent.hpp"
#include "lgr/tableau.hpp"

namespace lgr {

enum class Theory { K, H };

std::string theory_name(Theory t);
Theory parse_theory(const std::string& s);

struct RestrictionResult {
  IsotropicIndex alpha;
  IsotropicIndex beta;
  Theory theory;
  LaurentPolynomial value;
  // Number of tableaux summed.
  std::size_t term_count = 0;
};

// (-1)^{l(alpha)} sum over SSVT of prod_x (1/(t_{beta'(x)} t_{beta'(z(x))}) - 1).
RestrictionResult restrict_k(const IsotropicIndex& alpha, const IsotropicIndex& beta);
// sum over SSYT of prod_x (-t_{beta'(x)} - t_{beta'(z(x))}).
RestrictionResult restrict_h(const IsotropicIndex& alpha, const IsotropicIndex& beta);
RestrictionResult restrict_class(const IsotropicIndex& alpha, const IsotropicIndex& beta, Theory theory);

// The factor contributed by one entry, in either theory.
LaurentPolynomial entry_factor(const IsotropicIndex& beta, const EntryContext& e, Theory theory);

// A positive root for B^- in type C_n, in the three shapes that arise:
//   Sum:        -t_a - t_b   (a < b <= n)
//   Difference: -t_a + t_c   (a < c <= n)
//   Double:     -2 t_a
struct PositiveRoot {
  enum class Kind { Sum, Difference, Double };
  Kind kind = Kind::Double;
  int a = 0;
  int b = 0;  // b for Sum, c for Difference, unused for Double

  // Coefficients on t_1..t_n as written above (B^- sign).
  std::vector<int> linear_form(int n) const;
  // The same root with the opposite (B) sign convention.
  std::vector<int> standard_form(int n) const;
  std::string to_string() const;
  bool operator==(const PositiveRoot&) const = default;
};

std::vector<PositiveRoot> positive_roots_bminus(int n);

// Root for the entry (x, z): requires a <= b, a < bar(b), a <= n with
// a = beta'(x), b = beta'(z), and the H factor equal to the root, the K factor
// equal to e^root. nullopt when any of that fails.
std::optional<PositiveRoot> certify_entry(const IsotropicIndex& beta, int x, int z);

// One list of roots per tableau (SSVT for K, SSYT for H). Throws
// std::logic_error if some factor is not a positive root.
std::vector<std::vector<PositiveRoot>> positivity_certificate(const IsotropicIndex& alpha,
                                                              const IsotropicIndex& beta,
                                                              Theory theory);

// Full 2^n x 2^n table; rows alpha, columns beta, both in enumerate_isotropic order.
struct RestrictionTable {
  int n = 0;
  Theory theory = Theory::H;
  std::vector<IsotropicIndex> points;
  std::vector<LaurentPolynomial> values;
  std::vector<std::size_t> term_counts;

  std::size_t size() const { return points.size(); }
  std::size_t index_of(const IsotropicIndex& p) const;
  const LaurentPolynomial& at(std::size_t ia, std::size_t ib) const { return values[ia * size() + ib]; }
  LaurentPolynomial& at(std::size_t ia, std::size_t ib) { return values[ia * size() + ib]; }
};

constexpr int kMaxTableRank = 8;

// OpenMP over (alpha, beta) pairs.
RestrictionTable restriction_table(int n, Theory theory);
// Single-threaded reference.
RestrictionTable restriction_table_serial(int n, Theory theory);

}  // namespace lgr
