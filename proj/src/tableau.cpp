#include "lgr/tableau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace lgr {

ShiftedDiagram::ShiftedDiagram(StrictPartition shape) : shape_(std::move(shape)) {
  for (int r = 1; r <= static_cast<int>(shape_.length()); ++r) {
    for (int c = r; c < r + shape_.part(r); ++c) boxes_.push_back({r, c});
  }
}

bool ShiftedDiagram::contains(Box b) const {
  return b.row >= 1 && b.row <= static_cast<int>(shape_.length()) && b.col >= b.row &&
         b.col < b.row + shape_.part(b.row);
}

std::optional<std::size_t> ShiftedDiagram::index_of(Box b) const {
  if (!contains(b)) return std::nullopt;
  std::size_t idx = 0;
  for (int r = 1; r < b.row; ++r) idx += shape_.part(r);
  return idx + static_cast<std::size_t>(b.col - b.row);
}

ShiftedDiagram shifted_diagram(const StrictPartition& lambda) { return ShiftedDiagram(lambda); }

int z_value(const EntryContext& e) { return e.value + e.col - e.row; }

SetValuedShiftedTableau::SetValuedShiftedTableau(StrictPartition shape,
                                                 std::vector<std::vector<int>> cells)
    : diagram_(std::move(shape)), cells_(std::move(cells)) {
  if (cells_.size() != diagram_.size()) {
    throw std::invalid_argument("tableau: cell count does not match shape");
  }
  for (auto& cell : cells_) {
    if (cell.empty()) throw std::invalid_argument("tableau: every box needs a nonempty set");
    std::sort(cell.begin(), cell.end());
    if (std::adjacent_find(cell.begin(), cell.end()) != cell.end()) {
      throw std::invalid_argument("tableau: repeated value inside one box");
    }
    if (cell.front() < 1) throw std::invalid_argument("tableau: entries must be positive");
  }
}

SetValuedShiftedTableau SetValuedShiftedTableau::from_rows(
    const std::vector<std::vector<std::vector<int>>>& rows) {
  std::vector<int> shape;
  std::vector<std::vector<int>> cells;
  for (const auto& row : rows) {
    shape.push_back(static_cast<int>(row.size()));
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return SetValuedShiftedTableau(StrictPartition(shape), std::move(cells));
}

SetValuedShiftedTableau SetValuedShiftedTableau::from_young_rows(
    const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<std::vector<int>>> sets;
  for (const auto& row : rows) {
    auto& out = sets.emplace_back();
    for (int v : row) out.push_back({v});
  }
  return from_rows(sets);
}

const std::vector<int>* SetValuedShiftedTableau::find(Box b) const {
  const auto idx = diagram_.index_of(b);
  return idx ? &cells_[*idx] : nullptr;
}

const std::vector<int>& SetValuedShiftedTableau::at(Box b) const {
  const auto* cell = find(b);
  if (!cell) throw std::out_of_range("tableau: box outside the diagram");
  return *cell;
}

std::vector<EntryContext> SetValuedShiftedTableau::entries() const {
  std::vector<EntryContext> out;
  const auto& boxes = diagram_.boxes();
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (int v : cells_[i]) out.push_back({v, boxes[i].row, boxes[i].col});
  }
  return out;
}

std::size_t SetValuedShiftedTableau::entry_count() const {
  std::size_t count = 0;
  for (const auto& cell : cells_) count += cell.size();
  return count;
}

bool SetValuedShiftedTableau::is_young() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const auto& c) { return c.size() == 1; });
}

bool is_semistandard(const SetValuedShiftedTableau& s) {
  const auto& boxes = s.diagram().boxes();
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const Box b = boxes[i];
    const int hi = s.cells()[i].back();
    if (const auto* right = s.find({b.row, b.col + 1}); right && hi > right->front()) return false;
    if (const auto* below = s.find({b.row + 1, b.col}); below && hi >= below->front()) return false;
  }
  return true;
}

bool is_on(const SetValuedShiftedTableau& s, const StrictPartition& mu) {
  const int h = static_cast<int>(mu.length());
  for (const auto& e : s.entries()) {
    if (e.value > h) return false;
    if (z_value(e) > mu.part(e.value) + e.value - 1) return false;
  }
  return true;
}

namespace {

// Nonempty subsets of `allowed` (sorted), ordered lexicographically as sorted vectors.
std::vector<std::vector<int>> lex_subsets(const std::vector<int>& allowed, bool singletons_only) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    for (std::size_t i = start; i < allowed.size(); ++i) {
      current.push_back(allowed[i]);
      out.push_back(current);
      if (!singletons_only) rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<SetValuedShiftedTableau> enumerate(const StrictPartition& lambda,
                                               const StrictPartition& mu, bool young) {
  const ShiftedDiagram diagram(lambda);
  const auto& boxes = diagram.boxes();
  const int h = static_cast<int>(mu.length());

  // Entry x may sit in relative column j = c - r + 1 only if j <= mu_x.
  std::vector<std::vector<std::vector<int>>> candidates(boxes.size());
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const int j = boxes[i].col - boxes[i].row + 1;
    std::vector<int> allowed;
    for (int x = 1; x <= h; ++x) {
      if (j <= mu.part(x)) allowed.push_back(x);
    }
    candidates[i] = lex_subsets(allowed, young);
    if (candidates[i].empty()) return {};
  }

  std::vector<SetValuedShiftedTableau> out;
  std::vector<std::vector<int>> cells(boxes.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == boxes.size()) {
      out.emplace_back(lambda, cells);
      return;
    }
    const Box b = boxes[i];
    const auto left = diagram.index_of({b.row, b.col - 1});
    const auto above = diagram.index_of({b.row - 1, b.col});
    for (const auto& cand : candidates[i]) {
      if (left && cells[*left].back() > cand.front()) continue;
      if (above && cells[*above].back() >= cand.front()) continue;
      cells[i] = cand;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<SetValuedShiftedTableau> enumerate_ssvt(const StrictPartition& lambda,
                                                    const StrictPartition& mu) {
  return enumerate(lambda, mu, false);
}

std::vector<SetValuedShiftedTableau> enumerate_ssyt(const StrictPartition& lambda,
                                                    const StrictPartition& mu) {
  return enumerate(lambda, mu, true);
}

std::string to_ascii(const SetValuedShiftedTableau& s) {
  std::size_t width = 1;
  std::vector<std::string> labels;
  for (const auto& cell : s.cells()) {
    std::string text;
    for (std::size_t k = 0; k < cell.size(); ++k) text += (k ? "," : "") + std::to_string(cell[k]);
    width = std::max(width, text.size());
    labels.push_back(std::move(text));
  }
  const std::size_t cellw = width + 2;
  std::ostringstream os;
  const auto& shape = s.shape();
  if (shape.empty()) return "(empty)\n";
  std::size_t idx = 0;
  for (int r = 1; r <= static_cast<int>(shape.length()); ++r) {
    const std::string indent((r - 1) * (cellw + 1), ' ');
    const int len = shape.part(r);
    os << indent << '+';
    for (int k = 0; k < len; ++k) os << std::string(cellw, '-') << '+';
    os << '\n' << indent << '|';
    for (int k = 0; k < len; ++k, ++idx) {
      const auto& t = labels[idx];
      const std::size_t pad = cellw - t.size();
      os << std::string(pad / 2, ' ') << t << std::string(pad - pad / 2, ' ') << '|';
    }
    os << '\n';
  }
  const int last = static_cast<int>(shape.length());
  os << std::string((last - 1) * (cellw + 1), ' ') << '+';
  for (int k = 0; k < shape.part(last); ++k) os << std::string(cellw, '-') << '+';
  os << '\n';
  return os.str();
}

}  // namespace lgr
