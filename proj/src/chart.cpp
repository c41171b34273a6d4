#include "lgr/chart.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lgr {

bool ChartIndexSet::contains(ChartPair p) const {
  return std::binary_search(pairs.begin(), pairs.end(), p);
}

ChartIndexSet chart_index_set(const IsotropicIndex& beta) {
  const int n = beta.rank();
  const IsotropicIndex prime = complement(beta);
  ChartIndexSet out{beta, {}};
  for (int a : prime.values()) {
    for (int b : beta.values()) {
      if (a <= bar(b, n)) out.pairs.emplace_back(a, b);
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

namespace {

void check_pair(int a, int b, int n) {
  if (a < 1 || a > 2 * n || b < 1 || b > 2 * n || a == b) {
    throw std::invalid_argument("chart: invalid coordinate pair (" + std::to_string(a) + "," +
                                std::to_string(b) + ")");
  }
}

}  // namespace

LaurentPolynomial coordinate_weight_k(int a, int b, int n) {
  check_pair(a, b, n);
  return bar_var_k(b, n) * bar_var_k(bar(a, n), n);
}

LaurentPolynomial coordinate_weight_h(int a, int b, int n) {
  check_pair(a, b, n);
  return bar_var_h(b, n) - bar_var_h(a, n);
}

ChartMatrix chart_matrix_pattern(const IsotropicIndex& beta) {
  const int n = beta.rank();
  ChartMatrix m{beta, {}};
  m.rows.assign(2 * n, std::vector<MatrixCell>(n));
  for (int row = 1; row <= 2 * n; ++row) {
    // K: -1 on rows in {1..n} outside beta.
    const int sign = (row <= n && !beta.contains(row)) ? -1 : 1;
    for (int j = 1; j <= n; ++j) {
      const int b = beta.nth(j);
      MatrixCell& cell = m.rows[row - 1][j - 1];
      if (beta.contains(row)) {
        cell.kind = row == b ? MatrixCell::Kind::One : MatrixCell::Kind::Zero;
        continue;
      }
      cell.kind = MatrixCell::Kind::Coordinate;
      cell.sign = sign;
      if (row <= bar(b, n)) {
        cell.a = row;
        cell.b = b;
      } else {
        // M(a, b) = M(bar b, bar a) about the antidiagonal.
        cell.a = bar(b, n);
        cell.b = bar(row, n);
        cell.mirrored = true;
      }
    }
  }
  return m;
}

SubspaceSpec subspace_of_tableau(const SetValuedShiftedTableau& s, const IsotropicIndex& beta) {
  const int n = beta.rank();
  const IsotropicIndex prime = complement(beta);
  SubspaceSpec spec{chart_index_set(beta), {}};
  for (const auto& e : s.entries()) {
    const int z = z_value(e);
    if (e.value > n || z > n) throw std::invalid_argument("subspace_of_tableau: entry beyond rank");
    const ChartPair p{prime.nth(e.value), bar(prime.nth(z), n)};
    if (!spec.chart.contains(p)) {
      throw std::invalid_argument("subspace_of_tableau: cut pair outside R_beta (tableau not on mu)");
    }
    spec.cut.insert(p);
  }
  return spec;
}

std::string label_name(int label, int n) {
  return label <= n ? std::to_string(label) : "bar" + std::to_string(bar(label, n));
}

std::string to_ascii(const ChartMatrix& m) {
  const int n = m.beta.rank();
  std::vector<std::vector<std::string>> text(m.rows.size());
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    for (const auto& cell : m.rows[r]) {
      std::string s;
      switch (cell.kind) {
        case MatrixCell::Kind::Zero: s = "0"; break;
        case MatrixCell::Kind::One: s = "1"; break;
        case MatrixCell::Kind::Coordinate:
          s = std::string(cell.sign < 0 ? "-" : "") + "y[" + label_name(cell.a, n) + "," +
              label_name(cell.b, n) + "]";
          break;
      }
      width = std::max(width, s.size());
      text[r].push_back(std::move(s));
    }
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < text.size(); ++r) {
    const std::string row_label = label_name(static_cast<int>(r) + 1, n);
    os << std::string(6 - std::min<std::size_t>(6, row_label.size()), ' ') << row_label << " |";
    for (const auto& s : text[r]) os << ' ' << std::string(width - s.size(), ' ') << s;
    os << " |\n";
  }
  return os.str();
}

nlohmann::json chart_json(const ChartIndexSet& chart) {
  const int n = chart.beta.rank();
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& [a, b] : chart.pairs) {
    coords.push_back({{"a", a},
                      {"b", b},
                      {"weight_k", to_json(coordinate_weight_k(a, b, n))},
                      {"weight_h", to_json(coordinate_weight_h(a, b, n))}});
  }
  return {{"n", n},
          {"beta", chart.beta.values()},
          {"beta_prime", complement(chart.beta).values()},
          {"coordinates", coords}};
}

}  // namespace lgr
