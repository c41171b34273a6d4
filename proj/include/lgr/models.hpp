#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "lgr/indexcomb.hpp"
#include "lgr/tableau.hpp"

namespace lgr {

// A subset of the shifted diagram of mu. Boxes are (row x, absolute column z).
struct DiagramSubset {
  StrictPartition ambient;
  std::set<Box> members;

  bool operator==(const DiagramSubset&) const = default;
  auto operator<=>(const DiagramSubset&) const = default;
};

// Nonintersecting paths covering the complement of a subset. Each path runs
// from its bottom-left box to its top-right box by unit steps up or right.
struct PathFamily {
  StrictPartition ambient;
  std::vector<std::vector<Box>> paths;

  std::set<Box> support() const;
  bool operator==(const PathFamily&) const = default;
};

// A filling of a symmetric Young diagram with P(i,j) - i = P(j,i) - j.
struct SymmetricTableau {
  Partition shape;
  std::map<Box, int> content;

  bool operator==(const SymmetricTableau&) const = default;
};

// Entry v in box (r, c) goes to (v, v + c - r). Throws if P is not a Young
// tableau or an image box falls outside mu.
DiagramSubset tableau_to_subset(const SetValuedShiftedTableau& p, const StrictPartition& mu);
// Inverse of tableau_to_subset; throws std::invalid_argument when D is not in
// the image for this lambda.
SetValuedShiftedTableau subset_to_tableau(const DiagramSubset& d, const StrictPartition& lambda);

PathFamily subset_to_family(const DiagramSubset& d);
DiagramSubset family_to_subset(const PathFamily& f);

enum class ModelKind { Tableaux, Subsets, Families };
ModelKind parse_model_kind(const std::string& s);
std::string model_kind_name(ModelKind k);

using ModelListing = std::variant<std::vector<SetValuedShiftedTableau>, std::vector<DiagramSubset>,
                                  std::vector<PathFamily>>;

std::vector<SetValuedShiftedTableau> enumerate_tableaux(const StrictPartition& lambda,
                                                        const StrictPartition& mu);
std::vector<DiagramSubset> enumerate_subsets(const StrictPartition& lambda, const StrictPartition& mu);
std::vector<PathFamily> enumerate_families(const StrictPartition& lambda, const StrictPartition& mu);
ModelListing enumerate_model(const StrictPartition& lambda, const StrictPartition& mu, ModelKind which);
std::size_t listing_size(const ModelListing& l);

// The symmetric partition eta with rho(eta) = mu.
Partition symmetric_shape(const StrictPartition& mu);

SymmetricTableau unfold_symmetric(const SetValuedShiftedTableau& p);
// Drops the boxes below the diagonal.
SetValuedShiftedTableau fold_symmetric(const SymmetricTableau& s);

// Box sets in the full Young diagram of symmetric_shape(ambient).
std::set<Box> double_subset(const DiagramSubset& d);
DiagramSubset fold_subset(const std::set<Box>& boxes, const StrictPartition& ambient);

std::string to_ascii(const DiagramSubset& d);
std::string to_ascii(const PathFamily& f);
std::string to_svg(const SetValuedShiftedTableau& s);
std::string to_svg(const DiagramSubset& d);
std::string to_svg(const PathFamily& f);
// A symmetric diagram next to its image under rho.
std::string rho_svg(const Partition& eta);

}  // namespace lgr
