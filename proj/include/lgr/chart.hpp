#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lgr/indexcomb.hpp"
#include "lgr/laurent.hpp"
#include "lgr/tableau.hpp"

namespace lgr {

// Coordinate y_{ab} of the chart around e_beta.
using ChartPair = std::pair<int, int>;

// R_beta = {(a, b) in beta' x beta : a <= bar(b)}, sorted by (a, b).
struct ChartIndexSet {
  IsotropicIndex beta;
  std::vector<ChartPair> pairs;

  bool contains(ChartPair p) const;
};

ChartIndexSet chart_index_set(const IsotropicIndex& beta);

// Character of y_{ab}: t_b / t_a with t_{bar k} = t_k^{-1}.
LaurentPolynomial coordinate_weight_k(int a, int b, int n);
// Its linear form t_b - t_a with t_{bar k} = -t_k.
LaurentPolynomial coordinate_weight_h(int a, int b, int n);

struct MatrixCell {
  enum class Kind { Zero, One, Coordinate };
  Kind kind = Kind::Zero;
  int sign = 1;
  // Chosen coordinate (a, b) in R_beta when kind == Coordinate.
  int a = 0;
  int b = 0;
  // True when the cell holds the antidiagonal mirror of y_{ab}.
  bool mirrored = false;

  bool operator==(const MatrixCell&) const = default;
};

// The 2n x n matrix K * M describing points of the chart. Rows are labels
// 1..2n, columns follow beta(1..n).
struct ChartMatrix {
  IsotropicIndex beta;
  std::vector<std::vector<MatrixCell>> rows;
};

ChartMatrix chart_matrix_pattern(const IsotropicIndex& beta);

// A coordinate subspace, stored by the coordinates set to zero.
struct SubspaceSpec {
  ChartIndexSet chart;
  std::set<ChartPair> cut;
};

// W_S: cuts y_{beta'(x), bar(beta'(z(x)))} for every entry x of S.
SubspaceSpec subspace_of_tableau(const SetValuedShiftedTableau& s, const IsotropicIndex& beta);

// "2", "bar3" style label text.
std::string label_name(int label, int n);
std::string to_ascii(const ChartMatrix& m);
nlohmann::json chart_json(const ChartIndexSet& chart);

}  // namespace lgr
