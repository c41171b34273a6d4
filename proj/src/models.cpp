#include "lgr/models.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lgr {

std::set<Box> PathFamily::support() const {
  std::set<Box> out;
  for (const auto& path : paths) out.insert(path.begin(), path.end());
  return out;
}

DiagramSubset tableau_to_subset(const SetValuedShiftedTableau& p, const StrictPartition& mu) {
  if (!p.is_young()) throw std::invalid_argument("tableau_to_subset: tableau is not single-valued");
  const ShiftedDiagram ambient(mu);
  DiagramSubset d{mu, {}};
  for (const auto& e : p.entries()) {
    const Box b{e.value, z_value(e)};
    if (!ambient.contains(b)) {
      throw std::invalid_argument("tableau_to_subset: image box outside mu (tableau not on mu)");
    }
    if (!d.members.insert(b).second) {
      throw std::invalid_argument("tableau_to_subset: two entries map to one box");
    }
  }
  return d;
}

SetValuedShiftedTableau subset_to_tableau(const DiagramSubset& d, const StrictPartition& lambda) {
  // An entry v in box (r, c) lands on (v, v + c - r), so the offset z - v is
  // the diagonal c - r of its box. Values along one diagonal strictly increase.
  std::map<int, std::vector<int>> by_offset;
  for (const auto& b : d.members) by_offset[b.col - b.row].push_back(b.row);

  const ShiftedDiagram diagram(lambda);
  std::vector<std::vector<int>> cells(diagram.size());
  std::size_t placed = 0;
  for (auto& [offset, values] : by_offset) {
    std::sort(values.begin(), values.end());
    for (std::size_t k = 0; k < values.size(); ++k) {
      const int r = static_cast<int>(k) + 1;
      const auto idx = diagram.index_of({r, r + offset});
      if (!idx) throw std::invalid_argument("subset_to_tableau: subset does not fit lambda");
      cells[*idx] = {values[k]};
      ++placed;
    }
  }
  if (placed != diagram.size()) throw std::invalid_argument("subset_to_tableau: wrong number of boxes");
  SetValuedShiftedTableau p(lambda, std::move(cells));
  if (!is_semistandard(p) || !is_on(p, d.ambient) || tableau_to_subset(p, d.ambient) != d) {
    throw std::invalid_argument("subset_to_tableau: subset is not the image of a tableau on mu");
  }
  return p;
}

PathFamily subset_to_family(const DiagramSubset& d) {
  const ShiftedDiagram ambient(d.ambient);
  std::set<Box> remaining;
  for (const auto& b : ambient.boxes()) {
    if (!d.members.count(b)) remaining.insert(b);
  }
  PathFamily f{d.ambient, {}};
  while (!remaining.empty()) {
    // Top-right end: smallest row, then largest column.
    Box cur = *remaining.begin();
    for (const auto& b : remaining) {
      if (b.row == cur.row && b.col > cur.col) cur = b;
    }
    std::vector<Box> path{cur};
    remaining.erase(cur);
    for (;;) {
      const Box left{cur.row, cur.col - 1};
      const Box down{cur.row + 1, cur.col};
      if (remaining.count(left)) {
        cur = left;
      } else if (remaining.count(down)) {
        cur = down;
      } else {
        break;
      }
      path.push_back(cur);
      remaining.erase(cur);
    }
    std::reverse(path.begin(), path.end());
    f.paths.push_back(std::move(path));
  }
  return f;
}

DiagramSubset family_to_subset(const PathFamily& f) {
  const ShiftedDiagram ambient(f.ambient);
  const auto support = f.support();
  std::size_t total = 0;
  for (const auto& path : f.paths) {
    total += path.size();
    for (std::size_t k = 0; k < path.size(); ++k) {
      if (!ambient.contains(path[k])) throw std::invalid_argument("family_to_subset: box outside mu");
      if (k == 0) continue;
      const Box& a = path[k - 1];
      const Box& b = path[k];
      const bool up = b.row == a.row - 1 && b.col == a.col;
      const bool right = b.row == a.row && b.col == a.col + 1;
      if (!up && !right) throw std::invalid_argument("family_to_subset: path step is not up or right");
    }
  }
  if (total != support.size()) throw std::invalid_argument("family_to_subset: paths intersect");
  DiagramSubset d{f.ambient, {}};
  for (const auto& b : ambient.boxes()) {
    if (!support.count(b)) d.members.insert(b);
  }
  return d;
}

ModelKind parse_model_kind(const std::string& s) {
  if (s == "tableaux") return ModelKind::Tableaux;
  if (s == "subsets") return ModelKind::Subsets;
  if (s == "families") return ModelKind::Families;
  throw std::invalid_argument("model must be tableaux, subsets or families, got '" + s + "'");
}

std::string model_kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::Tableaux: return "tableaux";
    case ModelKind::Subsets: return "subsets";
    case ModelKind::Families: return "families";
  }
  return {};
}

std::vector<SetValuedShiftedTableau> enumerate_tableaux(const StrictPartition& lambda,
                                                        const StrictPartition& mu) {
  return enumerate_ssyt(lambda, mu);
}

std::vector<DiagramSubset> enumerate_subsets(const StrictPartition& lambda, const StrictPartition& mu) {
  std::vector<DiagramSubset> out;
  for (const auto& p : enumerate_ssyt(lambda, mu)) out.push_back(tableau_to_subset(p, mu));
  return out;
}

std::vector<PathFamily> enumerate_families(const StrictPartition& lambda, const StrictPartition& mu) {
  std::vector<PathFamily> out;
  for (const auto& d : enumerate_subsets(lambda, mu)) out.push_back(subset_to_family(d));
  return out;
}

ModelListing enumerate_model(const StrictPartition& lambda, const StrictPartition& mu, ModelKind which) {
  switch (which) {
    case ModelKind::Tableaux: return enumerate_tableaux(lambda, mu);
    case ModelKind::Subsets: return enumerate_subsets(lambda, mu);
    case ModelKind::Families: return enumerate_families(lambda, mu);
  }
  throw std::invalid_argument("enumerate_model: unknown kind");
}

std::size_t listing_size(const ModelListing& l) {
  return std::visit([](const auto& v) { return v.size(); }, l);
}

Partition symmetric_shape(const StrictPartition& mu) {
  const ShiftedDiagram d(mu);
  std::vector<int> rows;
  for (const auto& b : d.boxes()) {
    const int hi = std::max(b.row, b.col);
    if (static_cast<int>(rows.size()) < hi) rows.resize(hi, 0);
    ++rows[b.row - 1];
    if (b.col != b.row) ++rows[b.col - 1];
  }
  Partition eta(rows);
  if (!is_symmetric(eta) || rho(eta) != mu) {
    throw std::logic_error("symmetric_shape: doubling did not give a symmetric partition");
  }
  return eta;
}

namespace {

void check_young_semistandard(const SymmetricTableau& s) {
  for (const auto& [b, v] : s.content) {
    const auto right = s.content.find({b.row, b.col + 1});
    if (right != s.content.end() && right->second < v) {
      throw std::invalid_argument("unfold_symmetric: row not weakly increasing");
    }
    const auto below = s.content.find({b.row + 1, b.col});
    if (below != s.content.end() && below->second <= v) {
      throw std::invalid_argument("unfold_symmetric: column not strictly increasing");
    }
  }
}

}  // namespace

SymmetricTableau unfold_symmetric(const SetValuedShiftedTableau& p) {
  if (!p.is_young()) throw std::invalid_argument("unfold_symmetric: tableau is not single-valued");
  SymmetricTableau s{symmetric_shape(p.shape()), {}};
  for (const auto& b : p.diagram().boxes()) {
    const int v = p.at(b).front();
    s.content[b] = v;
    if (b.col != b.row) s.content[{b.col, b.row}] = v - b.row + b.col;
  }
  check_young_semistandard(s);
  return s;
}

SetValuedShiftedTableau fold_symmetric(const SymmetricTableau& s) {
  const StrictPartition shape = rho(s.shape);
  const ShiftedDiagram d(shape);
  std::vector<std::vector<int>> cells;
  for (const auto& b : d.boxes()) {
    const auto it = s.content.find(b);
    if (it == s.content.end()) throw std::invalid_argument("fold_symmetric: missing box");
    cells.push_back({it->second});
  }
  return SetValuedShiftedTableau(shape, std::move(cells));
}

std::set<Box> double_subset(const DiagramSubset& d) {
  std::set<Box> out;
  for (const auto& b : d.members) {
    out.insert(b);
    out.insert({b.col, b.row});
  }
  return out;
}

DiagramSubset fold_subset(const std::set<Box>& boxes, const StrictPartition& ambient) {
  DiagramSubset d{ambient, {}};
  for (const auto& b : boxes) {
    if (b.col >= b.row) d.members.insert(b);
  }
  return d;
}

namespace {

// Character grid over the shifted diagram; rows top to bottom.
std::string grid_ascii(const StrictPartition& ambient, const std::map<Box, char>& marks) {
  const ShiftedDiagram d(ambient);
  if (d.size() == 0) return "(empty)\n";
  std::ostringstream os;
  for (int r = 1; r <= static_cast<int>(ambient.length()); ++r) {
    os << std::string(2 * (r - 1), ' ');
    for (int c = r; c < r + ambient.part(r); ++c) {
      const auto it = marks.find({r, c});
      os << (c > r ? " " : "") << (it == marks.end() ? '.' : it->second);
    }
    os << '\n';
  }
  return os.str();
}

constexpr int kCell = 30;
constexpr int kMargin = 10;

std::string svg_open(int cols, int rows) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols * kCell + 2 * kMargin
     << "\" height=\"" << rows * kCell + 2 * kMargin << "\">\n";
  return os.str();
}

void svg_box(std::ostringstream& os, int row, int col, const char* fill) {
  os << "  <rect x=\"" << kMargin + (col - 1) * kCell << "\" y=\"" << kMargin + (row - 1) * kCell
     << "\" width=\"" << kCell << "\" height=\"" << kCell << "\" fill=\"" << fill
     << "\" stroke=\"black\"/>\n";
}

int svg_width(const StrictPartition& p) {
  int w = 0;
  for (int r = 1; r <= static_cast<int>(p.length()); ++r) w = std::max(w, r + p.part(r) - 1);
  return w;
}

}  // namespace

std::string to_ascii(const DiagramSubset& d) {
  std::map<Box, char> marks;
  for (const auto& b : d.members) marks[b] = '#';
  return grid_ascii(d.ambient, marks);
}

std::string to_ascii(const PathFamily& f) {
  std::map<Box, char> marks;
  for (std::size_t k = 0; k < f.paths.size(); ++k) {
    for (const auto& b : f.paths[k]) marks[b] = static_cast<char>('a' + k % 26);
  }
  const ShiftedDiagram d(f.ambient);
  for (const auto& b : d.boxes()) marks.try_emplace(b, '#');
  return grid_ascii(f.ambient, marks);
}

std::string to_svg(const SetValuedShiftedTableau& s) {
  const auto& shape = s.shape();
  std::ostringstream os;
  os << svg_open(svg_width(shape), static_cast<int>(shape.length()));
  for (const auto& b : s.diagram().boxes()) {
    svg_box(os, b.row, b.col, "white");
    std::string text;
    for (int v : s.at(b)) text += (text.empty() ? "" : ",") + std::to_string(v);
    os << "  <text x=\"" << kMargin + (b.col - 1) * kCell + kCell / 2 << "\" y=\""
       << kMargin + (b.row - 1) * kCell + kCell / 2 + 5
       << "\" font-size=\"14\" text-anchor=\"middle\">" << text << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string to_svg(const DiagramSubset& d) {
  std::ostringstream os;
  os << svg_open(svg_width(d.ambient), static_cast<int>(d.ambient.length()));
  for (const auto& b : ShiftedDiagram(d.ambient).boxes()) {
    svg_box(os, b.row, b.col, d.members.count(b) ? "lightgray" : "white");
  }
  os << "</svg>\n";
  return os.str();
}

std::string to_svg(const PathFamily& f) {
  std::ostringstream os;
  os << svg_open(svg_width(f.ambient), static_cast<int>(f.ambient.length()));
  for (const auto& b : ShiftedDiagram(f.ambient).boxes()) svg_box(os, b.row, b.col, "white");
  for (const auto& path : f.paths) {
    os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"3\" points=\"";
    for (std::size_t k = 0; k < path.size(); ++k) {
      os << (k ? " " : "") << kMargin + (path[k].col - 1) * kCell + kCell / 2 << ','
         << kMargin + (path[k].row - 1) * kCell + kCell / 2;
    }
    os << "\"/>\n";
    for (const auto& b : path) {
      os << "  <circle cx=\"" << kMargin + (b.col - 1) * kCell + kCell / 2 << "\" cy=\""
         << kMargin + (b.row - 1) * kCell + kCell / 2 << "\" r=\"3\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string rho_svg(const Partition& eta) {
  if (!is_symmetric(eta)) throw std::invalid_argument("rho_svg: partition is not symmetric");
  const StrictPartition image = rho(eta);
  const int left = eta.part(1);
  const int gap = 2;
  const int rows = static_cast<int>(eta.length());
  std::ostringstream os;
  os << svg_open(left + gap + svg_width(image), rows);
  for (int r = 1; r <= rows; ++r) {
    for (int c = 1; c <= eta.part(r); ++c) svg_box(os, r, c, c < r ? "lightgray" : "white");
  }
  for (const auto& b : ShiftedDiagram(image).boxes()) svg_box(os, b.row, left + gap + b.col, "white");
  const int ax = kMargin + left * kCell + 5;
  const int ay = kMargin + kCell / 2;
  os << "  <line x1=\"" << ax << "\" y1=\"" << ay << "\" x2=\"" << ax + gap * kCell - 10 << "\" y2=\""
     << ay << "\" stroke=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace lgr
