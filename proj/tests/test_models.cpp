#include <catch_amalgamated.hpp>

#include <set>

#include "lgr/models.hpp"

using namespace lgr;

namespace {

struct Element {
  const char* label;
  std::vector<std::vector<int>> rows;
  std::set<Box> subset;
  std::vector<std::vector<Box>> paths;
};

// The ten elements of each model for lambda = (3,1), mu = (5,3,2,1), with their correspondences.
const std::vector<Element>& elements() {
  static const std::vector<Element> d{
      {"a", {{1, 1, 1}, {2}}, {{1, 1}, {1, 2}, {1, 3}, {2, 2}},
       {{{3, 3}, {2, 3}, {2, 4}, {1, 4}, {1, 5}}, {{4, 4}, {3, 4}}}},
      {"b", {{2, 2, 2}, {4}}, {{2, 2}, {2, 3}, {2, 4}, {4, 4}},
       {{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}}, {{3, 3}, {3, 4}}}},
      {"c", {{1, 1, 2}, {2}}, {{1, 1}, {1, 2}, {2, 4}, {2, 2}},
       {{{3, 3}, {2, 3}, {1, 3}, {1, 4}, {1, 5}}, {{4, 4}, {3, 4}}}},
      {"d", {{1, 1, 2}, {3}}, {{1, 1}, {1, 2}, {2, 4}, {3, 3}},
       {{{2, 2}, {2, 3}, {1, 3}, {1, 4}, {1, 5}}, {{4, 4}, {3, 4}}}},
      {"e", {{1, 2, 2}, {3}}, {{1, 1}, {2, 3}, {2, 4}, {3, 3}},
       {{{2, 2}, {1, 2}, {1, 3}, {1, 4}, {1, 5}}, {{4, 4}, {3, 4}}}},
      {"f", {{2, 2, 2}, {3}}, {{2, 2}, {2, 3}, {2, 4}, {3, 3}},
       {{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}}, {{4, 4}, {3, 4}}}},
      {"C", {{1, 1, 1}, {3}}, {{1, 1}, {1, 2}, {1, 3}, {3, 3}},
       {{{2, 2}, {2, 3}, {2, 4}, {1, 4}, {1, 5}}, {{4, 4}, {3, 4}}}},
      {"D", {{1, 1, 1}, {4}}, {{1, 1}, {1, 2}, {1, 3}, {4, 4}},
       {{{2, 2}, {2, 3}, {2, 4}, {1, 4}, {1, 5}}, {{3, 3}, {3, 4}}}},
      {"E", {{1, 1, 2}, {4}}, {{1, 1}, {1, 2}, {2, 4}, {4, 4}},
       {{{2, 2}, {2, 3}, {1, 3}, {1, 4}, {1, 5}}, {{3, 3}, {3, 4}}}},
      {"F", {{1, 2, 2}, {4}}, {{1, 1}, {2, 3}, {2, 4}, {4, 4}},
       {{{2, 2}, {1, 2}, {1, 3}, {1, 4}, {1, 5}}, {{3, 3}, {3, 4}}}},
  };
  return d;
}

const StrictPartition kLambda({3, 1});
const StrictPartition kMu({5, 3, 2, 1});

std::set<PathFamily, bool (*)(const PathFamily&, const PathFamily&)> family_set() {
  return std::set<PathFamily, bool (*)(const PathFamily&, const PathFamily&)>(
      [](const PathFamily& a, const PathFamily& b) { return a.paths < b.paths; });
}

}  // namespace

TEST_CASE("the listed tableaux, subsets and path families correspond") {
  for (const auto& el : elements()) {
    INFO("element " << el.label);
    const auto p = SetValuedShiftedTableau::from_young_rows(el.rows);
    REQUIRE(is_semistandard(p));
    REQUIRE(is_on(p, kMu));
    const auto d = tableau_to_subset(p, kMu);
    CHECK(d.members == el.subset);
    CHECK(subset_to_tableau(d, kLambda) == p);
    const auto f = subset_to_family(d);
    CHECK(f.paths == el.paths);
    CHECK(family_to_subset(f) == d);
  }
}

TEST_CASE("each model has the ten listed elements") {
  const auto tableaux = enumerate_tableaux(kLambda, kMu);
  const auto subsets = enumerate_subsets(kLambda, kMu);
  const auto families = enumerate_families(kLambda, kMu);
  REQUIRE(tableaux.size() == 10);
  REQUIRE(subsets.size() == 10);
  REQUIRE(families.size() == 10);

  std::set<SetValuedShiftedTableau> want_t;
  std::set<std::set<Box>> want_d;
  auto want_f = family_set();
  for (const auto& el : elements()) {
    want_t.insert(SetValuedShiftedTableau::from_young_rows(el.rows));
    want_d.insert(el.subset);
    want_f.insert(PathFamily{kMu, el.paths});
  }
  CHECK(std::set<SetValuedShiftedTableau>(tableaux.begin(), tableaux.end()) == want_t);
  std::set<std::set<Box>> got_d;
  for (const auto& d : subsets) got_d.insert(d.members);
  CHECK(got_d == want_d);
  auto got_f = family_set();
  got_f.insert(families.begin(), families.end());
  CHECK(got_f.size() == 10);
  for (const auto& f : families) CHECK(want_f.count(f) == 1);

  for (auto k : {ModelKind::Tableaux, ModelKind::Subsets, ModelKind::Families}) {
    CHECK(listing_size(enumerate_model(kLambda, kMu, k)) == 10);
  }
}

TEST_CASE("model sizes on other shapes") {
  CHECK(enumerate_subsets(StrictPartition({2}), StrictPartition({3, 2})).size() == 3);
  CHECK(enumerate_families(StrictPartition({2}), StrictPartition({3, 2})).size() == 3);
  const auto empty = enumerate_families(StrictPartition(), StrictPartition({2, 1}));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].support().size() == 3);
  CHECK(enumerate_subsets(StrictPartition(), StrictPartition())[0].members.empty());
}

TEST_CASE("the squares commute for all shapes inside a five-column staircase") {
  for (const auto& mu : strict_partitions_bounded(5)) {
    const ShiftedDiagram ambient(mu);
    for (const auto& lambda : strict_partitions_bounded(5)) {
      const auto tableaux = enumerate_tableaux(lambda, mu);
      std::set<DiagramSubset> images;
      for (const auto& p : tableaux) {
        const auto d = tableau_to_subset(p, mu);
        CHECK(static_cast<int>(d.members.size()) == lambda.size());
        for (const auto& b : d.members) {
          CHECK(ambient.contains(b));
          CHECK(b.col - b.row + 1 <= mu.part(b.row));
        }
        images.insert(d);
        const auto f = subset_to_family(d);
        // Paths are disjoint, cover the complement, and use unit steps.
        std::size_t total = 0;
        for (const auto& path : f.paths) total += path.size();
        CHECK(total == f.support().size());
        CHECK(total + d.members.size() == ambient.size());
        CHECK(family_to_subset(f) == d);
        CHECK(subset_to_tableau(family_to_subset(f), lambda) == p);
      }
      CHECK(images.size() == tableaux.size());
    }
  }
}

TEST_CASE("subset_to_tableau rejects subsets outside the image") {
  DiagramSubset d{kMu, {{1, 1}, {1, 2}, {1, 3}, {1, 4}}};
  CHECK_THROWS_AS(subset_to_tableau(d, kLambda), std::invalid_argument);
  DiagramSubset small{kMu, {{1, 1}}};
  CHECK_THROWS_AS(subset_to_tableau(small, kLambda), std::invalid_argument);
  CHECK(subset_to_tableau(DiagramSubset{kMu, {}}, StrictPartition()).entry_count() == 0);
}

TEST_CASE("tableau_to_subset rejects tableaux off mu") {
  CHECK_THROWS_AS(tableau_to_subset(SetValuedShiftedTableau::from_young_rows({{3, 3}}), StrictPartition({3, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(tableau_to_subset(SetValuedShiftedTableau::from_rows({{{1, 2}}}), StrictPartition({3, 2})),
                  std::invalid_argument);
  CHECK(tableau_to_subset(SetValuedShiftedTableau(), kMu).members.empty());
}

TEST_CASE("family edge cases") {
  const StrictPartition mu({2, 1});
  const ShiftedDiagram amb(mu);
  DiagramSubset full{mu, {amb.boxes().begin(), amb.boxes().end()}};
  CHECK(subset_to_family(full).paths.empty());
  const auto f = subset_to_family(DiagramSubset{mu, {}});
  CHECK(f.support().size() == 3);
  PathFamily bad{mu, {{{1, 1}, {2, 2}}}};
  CHECK_THROWS_AS(family_to_subset(bad), std::invalid_argument);
  PathFamily overlap{mu, {{{1, 1}}, {{1, 1}}}};
  CHECK_THROWS_AS(family_to_subset(overlap), std::invalid_argument);
}

TEST_CASE("symmetric unfolding") {
  const auto single = unfold_symmetric(SetValuedShiftedTableau::from_young_rows({{1}}));
  CHECK(single.shape.parts() == std::vector<int>{1});
  CHECK(single.content == std::map<Box, int>{{{1, 1}, 1}});

  const auto p = SetValuedShiftedTableau::from_young_rows({{1, 2}});
  const auto s = unfold_symmetric(p);
  CHECK(s.shape.parts() == std::vector<int>{2, 1});
  CHECK(s.content.at({2, 1}) == 3);
  CHECK(fold_symmetric(s) == p);

  for (const auto& t : enumerate_tableaux(kLambda, kMu)) {
    const auto u = unfold_symmetric(t);
    CHECK(is_symmetric(u.shape));
    for (const auto& [b, v] : u.content) CHECK(v - b.row == u.content.at({b.col, b.row}) - b.col);
    CHECK(fold_symmetric(u) == t);
  }
  CHECK(symmetric_shape(kMu).parts() == std::vector<int>{5, 4, 4, 4, 1});
  CHECK(rho(symmetric_shape(kMu)) == kMu);
}

TEST_CASE("symmetric doubling of subsets") {
  CHECK(double_subset(DiagramSubset{kMu, {{1, 1}}}) == std::set<Box>{{1, 1}});
  CHECK(double_subset(DiagramSubset{kMu, {{1, 2}}}) == std::set<Box>{{1, 2}, {2, 1}});
  const auto eta = symmetric_shape(kMu);
  for (const auto& d : enumerate_subsets(kLambda, kMu)) {
    const auto doubled = double_subset(d);
    for (const auto& b : doubled) {
      CHECK(doubled.count({b.col, b.row}) == 1);
      CHECK(b.col <= eta.part(b.row));
    }
    CHECK(fold_subset(doubled, kMu) == d);
  }
}

TEST_CASE("renderers") {
  const auto d = enumerate_subsets(kLambda, kMu)[0];
  const auto f = subset_to_family(d);
  const auto ascii_d = to_ascii(d);
  CHECK(std::count(ascii_d.begin(), ascii_d.end(), '#') == 4);
  const auto ascii_f = to_ascii(f);
  CHECK(ascii_f.find('a') != std::string::npos);
  CHECK(to_svg(d).find("lightgray") != std::string::npos);
  CHECK(to_svg(f).find("polyline") != std::string::npos);
  CHECK(to_svg(enumerate_tableaux(kLambda, kMu)[0]).find("<text") != std::string::npos);
  const auto rho_pic = rho_svg(Partition({5, 3, 2, 1, 1}));
  CHECK(rho_pic.rfind("<svg", 0) == 0);
  CHECK_THROWS_AS(rho_svg(Partition({2})), std::invalid_argument);
  CHECK(parse_model_kind("families") == ModelKind::Families);
  CHECK_THROWS_AS(parse_model_kind("paths"), std::invalid_argument);
}
