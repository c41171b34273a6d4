#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "lgr/indexcomb.hpp"

namespace lgr {

// (row, absolute column); row r of a shifted diagram starts at column r.
struct Box {
  int row = 0;
  int col = 0;
  auto operator<=>(const Box&) const = default;
};

class ShiftedDiagram {
 public:
  ShiftedDiagram() = default;
  explicit ShiftedDiagram(StrictPartition shape);

  const StrictPartition& shape() const { return shape_; }
  // Row-major order.
  const std::vector<Box>& boxes() const { return boxes_; }
  std::size_t size() const { return boxes_.size(); }
  bool contains(Box b) const;
  std::optional<std::size_t> index_of(Box b) const;
  int row_length(int r) const { return shape_.part(r); }

 private:
  StrictPartition shape_;
  std::vector<Box> boxes_;
};

ShiftedDiagram shifted_diagram(const StrictPartition& lambda);

struct EntryContext {
  int value = 0;
  int row = 0;
  int col = 0;
};

// z(x) = x + c(x) - r(x)
int z_value(const EntryContext& e);

// Nonempty sorted sets of positive integers on the boxes of a shifted diagram.
// Cells follow the diagram's row-major box order.
class SetValuedShiftedTableau {
 public:
  SetValuedShiftedTableau() = default;
  SetValuedShiftedTableau(StrictPartition shape, std::vector<std::vector<int>> cells);
  // Row-wise construction: rows[r-1] lists the cells of row r left to right.
  static SetValuedShiftedTableau from_rows(const std::vector<std::vector<std::vector<int>>>& rows);
  // Young (single-entry) rows.
  static SetValuedShiftedTableau from_young_rows(const std::vector<std::vector<int>>& rows);

  const StrictPartition& shape() const { return diagram_.shape(); }
  const ShiftedDiagram& diagram() const { return diagram_; }
  const std::vector<std::vector<int>>& cells() const { return cells_; }
  const std::vector<int>& at(Box b) const;
  const std::vector<int>* find(Box b) const;

  // Every occurrence is a separate entry.
  std::vector<EntryContext> entries() const;
  std::size_t entry_count() const;
  bool is_young() const;

  auto operator<=>(const SetValuedShiftedTableau& o) const {
    if (auto c = shape() <=> o.shape(); c != 0) return c;
    return cells_ <=> o.cells_;
  }
  bool operator==(const SetValuedShiftedTableau& o) const {
    return shape() == o.shape() && cells_ == o.cells_;
  }

 private:
  ShiftedDiagram diagram_;
  std::vector<std::vector<int>> cells_;
};

bool is_semistandard(const SetValuedShiftedTableau& s);
// Every entry x satisfies x <= h = length(mu) and z(x) <= mu_x + x - 1.
bool is_on(const SetValuedShiftedTableau& s, const StrictPartition& mu);

// SSVT_{lambda,mu}, lexicographic on the flattened (box, sorted set) sequence.
std::vector<SetValuedShiftedTableau> enumerate_ssvt(const StrictPartition& lambda,
                                                    const StrictPartition& mu);
// SSYT_{lambda,mu}: the single-entry members of SSVT_{lambda,mu}.
std::vector<SetValuedShiftedTableau> enumerate_ssyt(const StrictPartition& lambda,
                                                    const StrictPartition& mu);

std::string to_ascii(const SetValuedShiftedTableau& s);

}  // namespace lgr
